#ifndef NGSO_SIMKIT_HPP
#define NGSO_SIMKIT_HPP

#include <optional>
#include <span>
#include <vector>

#include "ngso/constellation.hpp"
#include "ngso/geometry.hpp"
#include "ngso/handover.hpp"
#include "ngso/link.hpp"

namespace ngso::simkit {

// Aachen, Germany: the reference ground station for the shipped configs.
inline geometry::GroundStation aachen() { return {50.7753, 6.0839, 0.0}; }

struct SimConfig {
    constellation::ConstellationSpec constellation;
    geometry::GroundStation ground_station = aachen();
    handover::StrategyId strategy = handover::StrategyId::closest_satellite;
    double duration_s = 10000.0;
    double step_s = 1.0;
    link::LinkBudgetParams link;
    link::ModcodTable modcod = link::ModcodTable::dvbs2x_default();

    // Constellation defaults plus the given strategy; link params are seeded
    // from the catalog entry (EIRPD, carrier, per-operator G/T).
    static SimConfig defaults_for(const constellation::ConstellationSpec& spec,
                                  handover::StrategyId strategy);

    // Aggregates all field violations into one ValidationError.
    void validate() const;
};

struct SummaryStats {
    // Triples over connected samples only; nullopt when every step is outage.
    std::optional<double> mean_spectral_efficiency, min_spectral_efficiency,
        max_spectral_efficiency;
    std::optional<double> mean_data_rate_bps, min_data_rate_bps, max_data_rate_bps;
    std::optional<double> mean_delay_ms, min_delay_ms, max_delay_ms;
    double handover_rate_per_hour = 0.0;
    double outage_fraction = 0.0;
};

struct RunResult {
    std::vector<link::LinkSample> samples;  // floor(duration/step) + 1 entries
    std::vector<handover::HandoverEvent> events;
    SummaryStats summary;
};

// Discrete-time loop: propagate -> visibility -> strategy -> link metrics,
// with handover-event accounting and summary statistics.
RunResult run(const SimConfig& config);

// Runs each config independently; output order matches the input order.
std::vector<SummaryStats> compare(std::span<const SimConfig> configs);

SummaryStats summarize(const RunResult& partial, double duration_s);

}  // namespace ngso::simkit

#endif
