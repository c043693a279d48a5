#include "ngso/handover.hpp"

#include "ngso/errors.hpp"

namespace ngso::handover {

std::string strategy_name(StrategyId id) {
    switch (id) {
        case StrategyId::closest_satellite:
            return "closest_satellite";
        case StrategyId::max_remaining_visibility:
            return "max_remaining_visibility";
    }
    return "unknown";
}

std::optional<StrategyId> strategy_from_name(const std::string& name) {
    if (name == "closest_satellite" || name == "closest" || name == "1") {
        return StrategyId::closest_satellite;
    }
    if (name == "max_remaining_visibility" || name == "max_visibility" || name == "2") {
        return StrategyId::max_remaining_visibility;
    }
    return std::nullopt;
}

std::string cause_name(HandoverCause cause) {
    switch (cause) {
        case HandoverCause::initial_acquisition:
            return "initial_acquisition";
        case HandoverCause::strategy_switch:
            return "strategy_switch";
        case HandoverCause::visibility_loss:
            return "visibility_loss";
        case HandoverCause::outage_start:
            return "outage_start";
        case HandoverCause::outage_end:
            return "outage_end";
    }
    return "unknown";
}

std::optional<int> select_strategy1(std::span<const geometry::VisibleSat> visible) {
    std::optional<int> best;
    double best_range = 0.0;
    for (const auto& v : visible) {
        // visible sets are id-ascending, so '<' keeps the lowest id on ties
        if (!best || v.topo.slant_range_km < best_range) {
            best = v.sat_id;
            best_range = v.topo.slant_range_km;
        }
    }
    return best;
}

std::optional<int> select_strategy2(std::optional<int> current,
                                    std::span<const geometry::VisibleSat> visible,
                                    const std::map<int, double>& remaining_s) {
    if (current) {
        for (const auto& v : visible) {
            if (v.sat_id == *current) {
                return current;
            }
        }
    }
    std::optional<int> best;
    double best_remaining = 0.0;
    for (const auto& v : visible) {
        const auto it = remaining_s.find(v.sat_id);
        if (it == remaining_s.end()) {
            throw ContractViolation(
                "select_strategy2: missing remaining-visibility entry for satellite " +
                std::to_string(v.sat_id));
        }
        if (!best || it->second > best_remaining) {
            best = v.sat_id;
            best_remaining = it->second;
        }
    }
    return best;
}

std::optional<HandoverEvent> record_transition(std::optional<int> prev,
                                               std::optional<int> next, double t_s,
                                               bool prev_visible) {
    if (prev == next) {
        return std::nullopt;
    }
    HandoverEvent ev;
    ev.time_s = t_s;
    ev.from_sat = prev;
    ev.to_sat = next;
    if (!prev && next) {
        ev.cause = (t_s == 0.0) ? HandoverCause::initial_acquisition
                                : HandoverCause::outage_end;
    } else if (prev && !next) {
        ev.cause = HandoverCause::outage_start;
    } else {
        ev.cause = prev_visible ? HandoverCause::strategy_switch
                                : HandoverCause::visibility_loss;
    }
    return ev;
}

int handover_count(std::span<const HandoverEvent> events) {
    int n = 0;
    for (const auto& ev : events) {
        if (ev.cause == HandoverCause::strategy_switch ||
            ev.cause == HandoverCause::visibility_loss) {
            ++n;
        }
    }
    return n;
}

double handover_rate_per_hour(std::span<const HandoverEvent> events, double duration_s) {
    if (!(duration_s > 0.0)) {
        throw ValidationError("handover_rate_per_hour: duration must be positive");
    }
    return handover_count(events) / duration_s * 3600.0;
}

}  // namespace ngso::handover
