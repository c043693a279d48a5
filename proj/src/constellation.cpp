#include "ngso/constellation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"

namespace ngso::constellation {

using namespace ngso::constants;
using json = nlohmann::json;

void ShellSpec::validate() const {
    std::ostringstream problems;
    if (num_planes < 1) problems << "num_planes < 1; ";
    if (sats_per_plane < 1) problems << "sats_per_plane < 1; ";
    if (phasing_factor < 0 || phasing_factor >= num_planes) {
        problems << "phasing_factor " << phasing_factor << " outside [0," << num_planes
                 << "); ";
    }
    if (!(raan_spread_deg > 0.0 && raan_spread_deg <= 360.0)) {
        problems << "raan_spread_deg " << raan_spread_deg << " outside (0,360]; ";
    }
    if (elliptical) {
        if (!(apogee_km >= perigee_km)) problems << "apogee below perigee; ";
        if (!(perigee_km > 0.0)) problems << "perigee_km must be positive; ";
    } else {
        if (!(altitude_km > 0.0)) problems << "altitude_km must be positive; ";
    }
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid shell: " + s);
    }
}

int ConstellationSpec::total_satellites() const {
    int total = 0;
    for (const auto& shell : shells) {
        total += shell.total_satellites();
    }
    return total;
}

void ConstellationSpec::validate() const {
    std::ostringstream problems;
    if (name.empty()) problems << "name empty; ";
    if (shells.empty()) problems << "no shells; ";
    if (!(eirpd_max_dbw_hz >= -60.0 && eirpd_max_dbw_hz <= 10.0)) {
        problems << "eirpd_max_dbw_hz " << eirpd_max_dbw_hz
                 << " outside sanity band [-60,10]; ";
    }
    if (!(channel_width_hz > 0.0)) problems << "channel_width_hz must be positive; ";
    if (!(downlink_freq_hz > 0.0)) problems << "downlink_freq_hz must be positive; ";
    if (!(min_elevation_deg >= 0.0 && min_elevation_deg < 90.0)) {
        problems << "min_elevation_deg " << min_elevation_deg << " outside [0,90); ";
    }
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid constellation spec: " + s);
    }
    for (const auto& shell : shells) {
        shell.validate();
    }
}

std::vector<orbits::OrbitalElements> build_elements(const ConstellationSpec& spec) {
    spec.validate();
    std::vector<orbits::OrbitalElements> out;
    out.reserve(spec.total_satellites());
    for (const auto& shell : spec.shells) {
        const int planes = shell.num_planes;
        const int per_plane = shell.sats_per_plane;
        const int total = planes * per_plane;
        for (int p = 0; p < planes; ++p) {
            const double raan =
                shell.raan_offset_deg + p * (shell.raan_spread_deg / planes);
            const double plane_phase =
                static_cast<double>(p) * shell.phasing_factor * (360.0 / total);
            for (int s = 0; s < per_plane; ++s) {
                const double mean_anom = s * (360.0 / per_plane) + plane_phase;
                if (shell.elliptical) {
                    out.push_back(orbits::OrbitalElements::from_perigee_apogee(
                        shell.perigee_km, shell.apogee_km, shell.inclination_deg, raan,
                        shell.arg_perigee_deg, mean_anom));
                } else {
                    out.push_back(orbits::OrbitalElements::circular(
                        shell.altitude_km, shell.inclination_deg, raan, mean_anom));
                }
            }
        }
    }
    return out;
}

namespace {

ShellSpec circular_shell(double altitude_km, double inclination_deg, int planes,
                         int per_plane, int phasing, double spread = 360.0,
                         double raan_offset = 0.0) {
    ShellSpec s;
    s.altitude_km = altitude_km;
    s.inclination_deg = inclination_deg;
    s.num_planes = planes;
    s.sats_per_plane = per_plane;
    s.phasing_factor = phasing;
    s.raan_spread_deg = spread;
    s.raan_offset_deg = raan_offset;
    return s;
}

// Catalog notes. The FCC filings behind these systems publish totals,
// altitudes, and radio parameters but not full plane layouts, so the layouts
// below are plausible symmetric realizations; every field can be overridden
// through a JSON config file.
ConstellationSpec make_kuiper() {
    ConstellationSpec c;
    c.name = "kuiper";
    // 3236 satellites over the filed 590/610/630 km sub-shells
    // (784 + 1296 + 1156 at 33/42/51.9 deg inclination).
    c.shells.push_back(circular_shell(630.0, 51.9, 34, 34, 1));
    c.shells.push_back(circular_shell(610.0, 42.0, 36, 36, 1));
    c.shells.push_back(circular_shell(590.0, 33.0, 28, 28, 1));
    c.eirpd_max_dbw_hz = -43.9;
    c.channel_width_hz = 100.0e6;
    c.min_elevation_deg = 35.0;
    c.gs_g_over_t_db_k = 20.0;
    return c;
}

ConstellationSpec make_oneweb_phase1() {
    ConstellationSpec c;
    c.name = "oneweb_phase1";
    // 716 satellites in a near-polar star: 19 planes of 36 plus one
    // RAAN-interleaved plane of 32.
    c.shells.push_back(circular_shell(1200.0, 87.9, 19, 36, 1, 180.0));
    c.shells.push_back(circular_shell(1200.0, 87.9, 1, 32, 0, 180.0, 4.7));
    c.eirpd_max_dbw_hz = -38.7;
    c.channel_width_hz = 155.0e6;
    c.min_elevation_deg = 10.0;
    c.gs_g_over_t_db_k = 20.0;
    return c;
}

ConstellationSpec make_mangata_meo() {
    ConstellationSpec c;
    c.name = "mangata_meo";
    // 567 satellites as a symmetric delta: 27 planes of 21.
    c.shells.push_back(circular_shell(6400.0, 50.0, 27, 21, 1));
    c.eirpd_max_dbw_hz = -36.3;
    c.channel_width_hz = 100.0e6;
    c.min_elevation_deg = 10.0;
    c.gs_g_over_t_db_k = 20.0;
    return c;
}

ConstellationSpec make_pleiades() {
    ConstellationSpec c;
    c.name = "pleiades";
    // 15 satellites, Molniya-style: critical inclination, apogee dwell over
    // the northern hemisphere.
    ShellSpec s;
    s.elliptical = true;
    s.perigee_km = 1125.0;
    s.apogee_km = 26679.0;
    s.inclination_deg = 63.4;
    s.arg_perigee_deg = 270.0;
    s.num_planes = 3;
    s.sats_per_plane = 5;
    s.phasing_factor = 1;
    s.raan_spread_deg = 360.0;
    c.shells.push_back(s);
    c.eirpd_max_dbw_hz = -24.7;
    c.channel_width_hz = 25.0e6;
    // High mask: serve only the apogee-dwell arc, where passes are hours long.
    c.min_elevation_deg = 45.0;
    c.gs_g_over_t_db_k = 3.5;
    return c;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"kuiper", "oneweb_phase1", "mangata_meo", "pleiades"};
}

ConstellationSpec load_catalog(const std::string& name) {
    if (name == "kuiper") return make_kuiper();
    if (name == "oneweb_phase1") return make_oneweb_phase1();
    if (name == "mangata_meo") return make_mangata_meo();
    if (name == "pleiades") return make_pleiades();
    std::ostringstream msg;
    msg << "unknown constellation '" << name << "'; available:";
    for (const auto& n : catalog_names()) {
        msg << " " << n;
    }
    throw CatalogError(msg.str());
}

namespace {

json shell_to_json(const ShellSpec& s) {
    json j;
    if (s.elliptical) {
        j["perigee_km"] = s.perigee_km;
        j["apogee_km"] = s.apogee_km;
        j["arg_perigee_deg"] = s.arg_perigee_deg;
    } else {
        j["altitude_km"] = s.altitude_km;
    }
    j["inclination_deg"] = s.inclination_deg;
    j["num_planes"] = s.num_planes;
    j["sats_per_plane"] = s.sats_per_plane;
    j["phasing_factor"] = s.phasing_factor;
    j["raan_spread_deg"] = s.raan_spread_deg;
    if (s.raan_offset_deg != 0.0) {
        j["raan_offset_deg"] = s.raan_offset_deg;
    }
    return j;
}

ShellSpec shell_from_json(const json& j) {
    ShellSpec s;
    if (j.contains("perigee_km") || j.contains("apogee_km")) {
        s.elliptical = true;
        s.perigee_km = j.at("perigee_km").get<double>();
        s.apogee_km = j.at("apogee_km").get<double>();
        s.arg_perigee_deg = j.value("arg_perigee_deg", 0.0);
    } else {
        s.altitude_km = j.at("altitude_km").get<double>();
    }
    s.inclination_deg = j.at("inclination_deg").get<double>();
    s.num_planes = j.at("num_planes").get<int>();
    s.sats_per_plane = j.at("sats_per_plane").get<int>();
    s.phasing_factor = j.value("phasing_factor", 0);
    s.raan_spread_deg = j.value("raan_spread_deg", 360.0);
    s.raan_offset_deg = j.value("raan_offset_deg", 0.0);
    return s;
}

}  // namespace

std::string spec_to_json(const ConstellationSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["shells"] = json::array();
    for (const auto& s : spec.shells) {
        j["shells"].push_back(shell_to_json(s));
    }
    j["eirpd_max_dbw_hz"] = spec.eirpd_max_dbw_hz;
    j["channel_width_mhz"] = spec.channel_width_hz / 1.0e6;
    j["downlink_freq_ghz"] = spec.downlink_freq_hz / 1.0e9;
    j["min_elevation_deg"] = spec.min_elevation_deg;
    j["gs_g_over_t_db_k"] = spec.gs_g_over_t_db_k;
    return j.dump(2);
}

ConstellationSpec spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("constellation config: ") + e.what());
    }
    try {
        ConstellationSpec spec;
        spec.name = j.at("name").get<std::string>();
        for (const auto& js : j.at("shells")) {
            spec.shells.push_back(shell_from_json(js));
        }
        spec.eirpd_max_dbw_hz = j.at("eirpd_max_dbw_hz").get<double>();
        spec.channel_width_hz = j.at("channel_width_mhz").get<double>() * 1.0e6;
        spec.downlink_freq_hz = j.value("downlink_freq_ghz", 19.0) * 1.0e9;
        spec.min_elevation_deg = j.value("min_elevation_deg", 10.0);
        spec.gs_g_over_t_db_k = j.value("gs_g_over_t_db_k", 20.0);
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(std::string("constellation config: ") + e.what());
    }
}

ConstellationSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open constellation config: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return spec_from_json(buf.str());
}

}  // namespace ngso::constellation
