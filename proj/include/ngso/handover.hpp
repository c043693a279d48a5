#ifndef NGSO_HANDOVER_HPP
#define NGSO_HANDOVER_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngso/geometry.hpp"

namespace ngso::handover {

enum class StrategyId {
    closest_satellite,        // HO strategy 1
    max_remaining_visibility  // HO strategy 2
};

std::string strategy_name(StrategyId id);
std::optional<StrategyId> strategy_from_name(const std::string& name);

enum class HandoverCause {
    initial_acquisition,
    strategy_switch,
    visibility_loss,
    outage_start,
    outage_end
};

std::string cause_name(HandoverCause cause);

struct HandoverEvent {
    double time_s = 0.0;
    std::optional<int> from_sat;
    std::optional<int> to_sat;
    HandoverCause cause = HandoverCause::initial_acquisition;
};

// Minimum slant range, ties to the lowest id; empty set -> outage.
std::optional<int> select_strategy1(std::span<const geometry::VisibleSat> visible);

// Sticky: keeps the current satellite while visible; otherwise the largest
// remaining visibility, ties to the lowest id. Throws ContractViolation if a
// visible satellite has no remaining-visibility entry.
std::optional<int> select_strategy2(std::optional<int> current,
                                    std::span<const geometry::VisibleSat> visible,
                                    const std::map<int, double>& remaining_s);

// Classifies a serving-id change; prev_visible distinguishes strategy_switch
// from visibility_loss. No change (including none->none) yields no event.
std::optional<HandoverEvent> record_transition(std::optional<int> prev,
                                               std::optional<int> next, double t_s,
                                               bool prev_visible);

// Events with cause strategy_switch or visibility_loss per hour.
double handover_rate_per_hour(std::span<const HandoverEvent> events, double duration_s);

// Count of strategy_switch + visibility_loss events.
int handover_count(std::span<const HandoverEvent> events);

}  // namespace ngso::handover

#endif
