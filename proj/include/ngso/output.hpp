#ifndef NGSO_OUTPUT_HPP
#define NGSO_OUTPUT_HPP

#include <cstdint>
#include <span>
#include <string>

#include "ngso/simkit.hpp"

namespace ngso::output {

// v1 series header; one row per sample, floats at 6 significant digits,
// disconnected rows leave the link fields empty.
inline constexpr const char* kSeriesHeader =
    "time_s,sat_id,connected,elevation_deg,slant_range_km,snr_db,"
    "spectral_efficiency_bps_hz,data_rate_mbps,delay_ms,doppler_khz,handover";

std::string series_csv(const simkit::RunResult& result);

// Throws ValidationError with the path on I/O failure.
void write_series(const simkit::RunResult& result, const std::string& path);

struct SummaryEntry {
    std::string constellation;
    std::string strategy;
    std::uint64_t config_digest = 0;
    simkit::SummaryStats stats;
};

// JSON document keyed by "constellation/strategy".
std::string summary_json(std::span<const SummaryEntry> entries);

void write_summary(std::span<const SummaryEntry> entries, const std::string& path);

// FNV-1a over the canonical serialized config; changes when any field does.
std::uint64_t config_digest(const simkit::SimConfig& config);

}  // namespace ngso::output

#endif
