#include "ngso/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"

namespace ngso::simkit {

using namespace ngso::constants;
using geometry::VisibleSat;
using handover::StrategyId;

SimConfig SimConfig::defaults_for(const constellation::ConstellationSpec& spec,
                                  StrategyId strategy) {
    SimConfig cfg;
    cfg.constellation = spec;
    cfg.strategy = strategy;
    cfg.link.eirpd_dbw_hz = spec.eirpd_max_dbw_hz;
    cfg.link.gs_g_over_t_db_k = spec.gs_g_over_t_db_k;
    cfg.link.extra_losses_db = 0.0;
    cfg.link.downlink_freq_hz = spec.downlink_freq_hz;
    return cfg;
}

void SimConfig::validate() const {
    std::ostringstream problems;
    const auto collect = [&problems](const auto& validator) {
        try {
            validator();
        } catch (const ValidationError& e) {
            problems << e.what() << "; ";
        }
    };
    collect([this] { constellation.validate(); });
    collect([this] { ground_station.validate(); });
    collect([this] { link.validate(); });
    if (!(duration_s > 0.0)) problems << "duration_s must be positive; ";
    if (!(step_s > 0.0)) problems << "step_s must be positive; ";
    if (step_s > 0.0 && duration_s > 0.0 && step_s > duration_s) {
        problems << "step_s exceeds duration_s; ";
    }
    if (step_s > 0.0 && duration_s / step_s > 1e7) {
        problems << "duration_s/step_s exceeds 1e7 samples; ";
    }
    const std::string s = problems.str();
    if (!s.empty()) {
        throw ValidationError("invalid sim config: " + s);
    }
}

namespace {

link::LinkMetrics make_metrics(const SimConfig& cfg, int sat_id,
                               const geometry::Topocentric& topo,
                               const orbits::EciState& eci, double t) {
    link::LinkMetrics m;
    m.sat_id = sat_id;
    m.slant_range_km = topo.slant_range_km;
    m.elevation_deg = topo.elevation_deg;
    m.snr_db = link::downlink_snr_db(cfg.link, topo.slant_range_km);
    m.spectral_efficiency_bps_hz = cfg.modcod.efficiency_for_snr(m.snr_db);
    m.data_rate_bps =
        link::data_rate_bps(m.spectral_efficiency_bps_hz, cfg.constellation.channel_width_hz);
    m.delay_ms = link::propagation_delay_ms(topo.slant_range_km);

    const Vec3 sat_ecef = geometry::eci_to_ecef(eci.position_km, t);
    const Vec3 vel_ecef = geometry::eci_to_ecef_velocity(eci, t);
    const Vec3 u = normalized(sat_ecef - geometry::ground_station_ecef(cfg.ground_station));
    const double closing_km_s = -dot(vel_ecef, u);
    m.doppler_hz = link::doppler_hz(closing_km_s, cfg.link.downlink_freq_hz);
    return m;
}

}  // namespace

SummaryStats summarize(const RunResult& r, double duration_s) {
    SummaryStats s;
    long connected = 0;
    double se_sum = 0, rate_sum = 0, delay_sum = 0;
    for (const auto& sample : r.samples) {
        if (!sample.link) {
            continue;
        }
        const auto& m = *sample.link;
        ++connected;
        se_sum += m.spectral_efficiency_bps_hz;
        rate_sum += m.data_rate_bps;
        delay_sum += m.delay_ms;
        const auto update = [](std::optional<double>& lo, std::optional<double>& hi,
                               double v) {
            lo = lo ? std::min(*lo, v) : v;
            hi = hi ? std::max(*hi, v) : v;
        };
        update(s.min_spectral_efficiency, s.max_spectral_efficiency,
               m.spectral_efficiency_bps_hz);
        update(s.min_data_rate_bps, s.max_data_rate_bps, m.data_rate_bps);
        update(s.min_delay_ms, s.max_delay_ms, m.delay_ms);
    }
    if (connected > 0) {
        s.mean_spectral_efficiency = se_sum / connected;
        s.mean_data_rate_bps = rate_sum / connected;
        s.mean_delay_ms = delay_sum / connected;
    }
    s.outage_fraction =
        r.samples.empty()
            ? 0.0
            : 1.0 - static_cast<double>(connected) / static_cast<double>(r.samples.size());
    s.handover_rate_per_hour = handover::handover_rate_per_hour(r.events, duration_s);
    return s;
}

RunResult run(const SimConfig& config) {
    config.validate();

    const auto elements = constellation::build_elements(config.constellation);
    std::vector<orbits::Propagator> props;
    props.reserve(elements.size());
    for (const auto& el : elements) {
        props.emplace_back(el);
    }

    const long num_steps = static_cast<long>(std::floor(config.duration_s / config.step_s));
    RunResult result;
    result.samples.reserve(num_steps + 1);

    std::optional<int> serving;
    std::vector<orbits::EciState> eci(props.size());
    std::vector<Vec3> ecef(props.size());

    for (long k = 0; k <= num_steps; ++k) {
        const double t = k * config.step_s;
        for (std::size_t i = 0; i < props.size(); ++i) {
            eci[i] = props[i].at(t);
            ecef[i] = geometry::eci_to_ecef(eci[i].position_km, t);
        }
        const auto visible =
            geometry::visible_set(ecef, config.ground_station, config.constellation.min_elevation_deg);

        const bool prev_visible =
            serving && std::any_of(visible.begin(), visible.end(),
                                   [&](const VisibleSat& v) { return v.sat_id == *serving; });

        std::optional<int> next;
        if (config.strategy == StrategyId::closest_satellite) {
            next = handover::select_strategy1(visible);
        } else {
            if (prev_visible) {
                next = serving;
            } else {
                // Remaining-visibility look-ahead only when a new selection
                // is actually needed; horizon is the satellite's own period.
                std::map<int, double> remaining;
                for (const auto& v : visible) {
                    remaining[v.sat_id] = geometry::remaining_visibility(
                        props[v.sat_id], t, config.ground_station,
                        config.constellation.min_elevation_deg, config.step_s,
                        props[v.sat_id].period_s());
                }
                next = handover::select_strategy2(serving, visible, remaining);
            }
        }

        if (auto ev = handover::record_transition(serving, next, t, prev_visible)) {
            result.events.push_back(*ev);
        }

        link::LinkSample sample;
        sample.time_s = t;
        if (next) {
            const auto it = std::find_if(visible.begin(), visible.end(),
                                         [&](const VisibleSat& v) { return v.sat_id == *next; });
            sample.link = make_metrics(config, *next, it->topo, eci[*next], t);
        }
        result.samples.push_back(std::move(sample));
        serving = next;
    }

    result.summary = summarize(result, config.duration_s);
    return result;
}

std::vector<SummaryStats> compare(std::span<const SimConfig> configs) {
    if (configs.empty()) {
        throw ValidationError("compare: at least one config required");
    }
    std::vector<SummaryStats> grid;
    grid.reserve(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        try {
            grid.push_back(run(configs[i]).summary);
        } catch (const std::exception& e) {
            throw ValidationError("compare: config " + std::to_string(i) + " (" +
                                  configs[i].constellation.name +
                                  ") failed: " + e.what());
        }
    }
    return grid;
}

}  // namespace ngso::simkit
