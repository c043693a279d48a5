#include "ngso/link.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"

namespace ngso::link {

using namespace ngso::constants;

void LinkBudgetParams::validate() const {
    std::ostringstream problems;
    if (!(extra_losses_db >= 0.0)) problems << "extra_losses_db negative; ";
    if (!(gs_g_over_t_db_k >= -10.0 && gs_g_over_t_db_k <= 45.0)) {
        problems << "gs_g_over_t_db_k " << gs_g_over_t_db_k
                 << " outside sanity band [-10,45]; ";
    }
    if (!(downlink_freq_hz > 0.0)) problems << "downlink_freq_hz must be positive; ";
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid link budget params: " + s);
    }
}

ModcodTable ModcodTable::from_rows(std::vector<Row> rows) {
    if (rows.empty()) {
        throw ValidationError("modcod table: no rows");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].spectral_efficiency_bps_hz > 6.0) {
            throw ValidationError("modcod table: efficiency above 6.0 bps/Hz");
        }
        if (i > 0) {
            const bool snr_up = rows[i].snr_threshold_db > rows[i - 1].snr_threshold_db;
            const bool eff_up = rows[i].spectral_efficiency_bps_hz >
                                rows[i - 1].spectral_efficiency_bps_hz;
            if (!snr_up || !eff_up) {
                throw ValidationError("modcod table: rows not strictly increasing at row " +
                                      std::to_string(i + 1));
            }
        }
    }
    ModcodTable t;
    t.rows_ = std::move(rows);
    return t;
}

ModcodTable ModcodTable::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open modcod table: " + path);
    }
    std::vector<Row> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        // skip blank lines
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        double snr = 0.0, eff = 0.0;
        char comma = 0;
        std::istringstream ls(line);
        if (!(ls >> snr >> comma >> eff) || comma != ',') {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'snr_threshold_db,spectral_efficiency'");
        }
        std::string rest;
        if (ls >> rest) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": trailing content '" +
                             rest + "'");
        }
        rows.push_back({snr, eff});
    }
    try {
        return from_rows(std::move(rows));
    } catch (const ValidationError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

const ModcodTable& ModcodTable::dvbs2x_default() {
    // DVB-S2X normal-frame ladder (ideal Es/N0 thresholds), thinned to a
    // strictly monotone staircase and capped at 5.90 bps/Hz.
    static const ModcodTable table = ModcodTable::from_rows({
        {-2.85, 0.434841},  // QPSK 2/9
        {-2.03, 0.567805},  // QPSK 13/45
        {0.22, 0.889135},   // QPSK 9/20
        {1.45, 1.088581},   // QPSK 11/20
        {4.73, 1.647211},   // 8APSK 5/9-L
        {6.12, 1.896173},   // 8PSK 23/36
        {7.02, 2.062148},   // 8PSK 25/36
        {7.51, 2.281645},   // 16APSK 26/45
        {8.10, 2.458441},   // 16APSK 28/45
        {8.97, 2.637201},   // 16APSK 2/3
        {9.71, 2.856231},   // 16APSK 13/18
        {10.65, 3.077225},  // 16APSK 7/9
        {11.75, 3.510192},  // 32APSK 32/45
        {12.17, 3.620536},  // 32APSK 11/15
        {13.05, 3.841226},  // 32APSK 7/9
        {13.98, 4.206428},  // 64APSK 32/45-L
        {14.81, 4.338659},  // 64APSK 11/15
        {15.47, 4.603882},  // 64APSK 7/9
        {15.87, 4.735354},  // 64APSK 4/5
        {16.55, 4.936639},  // 64APSK 5/6
        {17.73, 5.163248},  // 128APSK 3/4
        {18.59, 5.593162},  // 256APSK 32/45
        {19.57, 5.90},      // 256APSK 3/4, capped
    });
    return table;
}

double ModcodTable::efficiency_for_snr(double snr_db) const {
    double eff = 0.0;
    for (const Row& row : rows_) {
        if (snr_db >= row.snr_threshold_db) {
            eff = row.spectral_efficiency_bps_hz;
        } else {
            break;
        }
    }
    return eff;
}

double fspl_db(double distance_km, double freq_hz) {
    if (!(distance_km > 0.0) || !(freq_hz > 0.0)) {
        throw ValidationError("fspl_db: distance and frequency must be positive");
    }
    const double d_m = distance_km * 1000.0;
    return 20.0 * std::log10(4.0 * kPi * d_m * freq_hz / kSpeedOfLightMS);
}

double downlink_snr_db(const LinkBudgetParams& params, double distance_km) {
    params.validate();
    return params.eirpd_dbw_hz - fspl_db(distance_km, params.downlink_freq_hz) +
           params.gs_g_over_t_db_k - params.extra_losses_db + kBoltzmannTermDb;
}

double snr_to_spectral_efficiency(double snr_db, const ModcodTable& table) {
    return table.efficiency_for_snr(snr_db);
}

double data_rate_bps(double spectral_efficiency_bps_hz, double channel_width_hz) {
    if (spectral_efficiency_bps_hz < 0.0 || channel_width_hz < 0.0) {
        throw ValidationError("data_rate_bps: inputs must be non-negative");
    }
    return spectral_efficiency_bps_hz * channel_width_hz;
}

double propagation_delay_ms(double slant_range_km) {
    if (!(slant_range_km > 0.0)) {
        throw ValidationError("propagation_delay_ms: range must be positive");
    }
    return slant_range_km / kSpeedOfLightKmS * 1000.0;
}

double doppler_hz(double radial_velocity_km_s, double freq_hz) {
    return radial_velocity_km_s / kSpeedOfLightKmS * freq_hz;
}

}  // namespace ngso::link
