#include "ngso/output.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ngso/errors.hpp"

namespace ngso::output {

using json = nlohmann::json;

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string series_csv(const simkit::RunResult& result) {
    // event steps that count as handovers, for the 0/1 flag column
    std::set<double> handover_times;
    for (const auto& ev : result.events) {
        if (ev.cause == handover::HandoverCause::strategy_switch ||
            ev.cause == handover::HandoverCause::visibility_loss) {
            handover_times.insert(ev.time_s);
        }
    }

    std::ostringstream out;
    out << kSeriesHeader << "\n";
    for (const auto& sample : result.samples) {
        out << fmt6(sample.time_s) << ",";
        if (sample.link) {
            const auto& m = *sample.link;
            out << m.sat_id << ",1," << fmt6(m.elevation_deg) << ","
                << fmt6(m.slant_range_km) << "," << fmt6(m.snr_db) << ","
                << fmt6(m.spectral_efficiency_bps_hz) << ","
                << fmt6(m.data_rate_bps / 1.0e6) << "," << fmt6(m.delay_ms) << ","
                << fmt6(m.doppler_hz / 1.0e3);
        } else {
            out << ",0,,,,,,,";
        }
        out << "," << (handover_times.count(sample.time_s) ? 1 : 0) << "\n";
    }
    return out.str();
}

void write_series(const simkit::RunResult& result, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open output file: " + path);
    }
    f << series_csv(result);
    if (!f) {
        throw ValidationError("write failed: " + path);
    }
}

namespace {

json stats_to_json(const simkit::SummaryStats& s) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? json(*v) : json(nullptr);
    };
    json j;
    j["mean_spectral_efficiency_bps_hz"] = opt(s.mean_spectral_efficiency);
    j["min_spectral_efficiency_bps_hz"] = opt(s.min_spectral_efficiency);
    j["max_spectral_efficiency_bps_hz"] = opt(s.max_spectral_efficiency);
    j["mean_data_rate_mbps"] =
        s.mean_data_rate_bps ? json(*s.mean_data_rate_bps / 1.0e6) : json(nullptr);
    j["min_data_rate_mbps"] =
        s.min_data_rate_bps ? json(*s.min_data_rate_bps / 1.0e6) : json(nullptr);
    j["max_data_rate_mbps"] =
        s.max_data_rate_bps ? json(*s.max_data_rate_bps / 1.0e6) : json(nullptr);
    j["mean_delay_ms"] = opt(s.mean_delay_ms);
    j["min_delay_ms"] = opt(s.min_delay_ms);
    j["max_delay_ms"] = opt(s.max_delay_ms);
    j["handover_rate_per_hour"] = s.handover_rate_per_hour;
    j["outage_fraction"] = s.outage_fraction;
    return j;
}

}  // namespace

std::string summary_json(std::span<const SummaryEntry> entries) {
    json doc = json::object();
    for (const auto& e : entries) {
        json j = stats_to_json(e.stats);
        char digest[32];
        std::snprintf(digest, sizeof(digest), "%016" PRIx64, e.config_digest);
        j["config_digest"] = digest;
        doc[e.constellation + "/" + e.strategy] = std::move(j);
    }
    return doc.dump(2) + "\n";
}

void write_summary(std::span<const SummaryEntry> entries, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open output file: " + path);
    }
    f << summary_json(entries);
    if (!f) {
        throw ValidationError("write failed: " + path);
    }
}

std::uint64_t config_digest(const simkit::SimConfig& config) {
    std::ostringstream canon;
    canon.precision(17);
    canon << constellation::spec_to_json(config.constellation) << "|"
          << config.ground_station.latitude_deg << "," << config.ground_station.longitude_deg
          << "," << config.ground_station.altitude_km << "|"
          << handover::strategy_name(config.strategy) << "|" << config.duration_s << "|"
          << config.step_s << "|" << config.link.eirpd_dbw_hz << ","
          << config.link.gs_g_over_t_db_k << "," << config.link.extra_losses_db << ","
          << config.link.downlink_freq_hz << "|";
    for (const auto& row : config.modcod.rows()) {
        canon << row.snr_threshold_db << ":" << row.spectral_efficiency_bps_hz << ";";
    }

    const std::string s = canon.str();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace ngso::output
