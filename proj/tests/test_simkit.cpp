#include <doctest.h>

#include <array>
#include <cmath>

#include "ngso/constants.hpp"
#include "ngso/errors.hpp"
#include "ngso/link.hpp"
#include "ngso/simkit.hpp"

using namespace ngso;
using namespace ngso::simkit;

namespace {

// Single satellite parked over the station's longitude at GEO altitude:
// the link never changes, so every derived column is checkable by hand.
SimConfig static_overhead_config() {
    constellation::ConstellationSpec spec;
    spec.name = "static";
    constellation::ShellSpec shell;
    shell.altitude_km = 35786.0;
    shell.inclination_deg = 0.0;
    shell.num_planes = 1;
    shell.sats_per_plane = 1;
    spec.shells.push_back(shell);
    spec.eirpd_max_dbw_hz = -24.7;
    spec.channel_width_hz = 25e6;
    spec.downlink_freq_hz = 19e9;
    spec.min_elevation_deg = 10.0;

    SimConfig cfg = SimConfig::defaults_for(spec, handover::StrategyId::closest_satellite);
    cfg.ground_station = {0.0, 0.0, 0.0};
    cfg.duration_s = 100.0;
    cfg.step_s = 10.0;
    return cfg;
}

}  // namespace

TEST_CASE("sample count fencepost") {
    SimConfig cfg = static_overhead_config();
    cfg.duration_s = 10.0;
    cfg.step_s = 1.0;
    const auto res = run(cfg);
    CHECK(res.samples.size() == 11);
    CHECK(res.samples.front().time_s == 0.0);
    CHECK(res.samples.back().time_s == doctest::Approx(10.0));

    // non-divisible duration truncates to the last full step
    cfg.duration_s = 10.5;
    CHECK(run(cfg).samples.size() == 11);
}

TEST_CASE("static overhead satellite: hand-checkable series") {
    const SimConfig cfg = static_overhead_config();
    const auto res = run(cfg);
    REQUIRE(res.samples.size() == 11);

    const double d = 35786.0;
    const double expect_snr = -24.7 - link::fspl_db(d, 19e9) + 20.0 + 228.6;
    for (const auto& s : res.samples) {
        REQUIRE(s.connected());
        CHECK(s.link->sat_id == 0);
        CHECK(s.link->elevation_deg == doctest::Approx(90.0).epsilon(1e-6));
        CHECK(s.link->slant_range_km == doctest::Approx(d).epsilon(1e-6));
        CHECK(s.link->snr_db == doctest::Approx(expect_snr).epsilon(1e-6));
        CHECK(s.link->delay_ms ==
              doctest::Approx(d / constants::kSpeedOfLightKmS * 1000.0).epsilon(1e-6));
        // co-rotating satellite: no range rate
        CHECK(std::abs(s.link->doppler_hz) < 1.0);
    }

    // one initial acquisition, no handovers
    REQUIRE(res.events.size() == 1);
    CHECK(res.events[0].cause == handover::HandoverCause::initial_acquisition);
    CHECK(res.events[0].time_s == 0.0);
    CHECK(res.summary.handover_rate_per_hour == 0.0);
    CHECK(res.summary.outage_fraction == 0.0);
    CHECK(*res.summary.min_delay_ms == doctest::Approx(*res.summary.max_delay_ms));
}

TEST_CASE("total outage yields empty stats") {
    SimConfig cfg = static_overhead_config();
    cfg.ground_station = {0.0, -179.0, 0.0};  // far side of the Earth
    const auto res = run(cfg);
    for (const auto& s : res.samples) CHECK(!s.connected());
    CHECK(res.summary.outage_fraction == doctest::Approx(1.0));
    CHECK(!res.summary.mean_spectral_efficiency);
    CHECK(!res.summary.mean_data_rate_bps);
    CHECK(!res.summary.mean_delay_ms);
    CHECK(res.events.empty());
}

TEST_CASE("defaults_for seeds link params from the catalog entry") {
    const auto spec = constellation::load_catalog("oneweb_phase1");
    const auto cfg =
        SimConfig::defaults_for(spec, handover::StrategyId::max_remaining_visibility);
    CHECK(cfg.link.eirpd_dbw_hz == doctest::Approx(spec.eirpd_max_dbw_hz));
    CHECK(cfg.link.downlink_freq_hz == doctest::Approx(spec.downlink_freq_hz));
    CHECK(cfg.link.gs_g_over_t_db_k == doctest::Approx(spec.gs_g_over_t_db_k));
    CHECK(cfg.strategy == handover::StrategyId::max_remaining_visibility);
    CHECK(cfg.duration_s == doctest::Approx(10000.0));
    CHECK(cfg.step_s == doctest::Approx(1.0));
    CHECK(cfg.ground_station.latitude_deg == doctest::Approx(50.7753));
}

TEST_CASE("config validation aggregates all violations") {
    SimConfig cfg = static_overhead_config();
    cfg.duration_s = -5.0;
    cfg.step_s = 0.0;
    cfg.ground_station.latitude_deg = 95.0;
    try {
        cfg.validate();
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("duration") != std::string::npos);
        CHECK(msg.find("step") != std::string::npos);
        CHECK(msg.find("latitude") != std::string::npos);
    }

    cfg = static_overhead_config();
    cfg.step_s = cfg.duration_s * 2.0;  // step larger than window
    CHECK_THROWS_AS(cfg.validate(), ValidationError);

    CHECK_THROWS_AS(run(cfg), ValidationError);
}

TEST_CASE("strategy 2 sticks to the serving satellite") {
    const auto spec = constellation::load_catalog("oneweb_phase1");
    SimConfig cfg = SimConfig::defaults_for(spec, handover::StrategyId::max_remaining_visibility);
    cfg.duration_s = 600.0;
    const auto res = run(cfg);

    // the serving id may only change at a recorded event time
    std::optional<int> prev;
    std::size_t ev = 0;
    for (const auto& s : res.samples) {
        std::optional<int> cur;
        if (s.connected()) cur = s.link->sat_id;
        if (cur != prev) {
            REQUIRE(ev < res.events.size());
            CHECK(res.events[ev].time_s == doctest::Approx(s.time_s));
            CHECK(res.events[ev].to_sat == cur);
            ++ev;
        }
        prev = cur;
    }
    CHECK(ev == res.events.size());
}

TEST_CASE("compare preserves order and cardinality") {
    const auto spec = constellation::load_catalog("oneweb_phase1");
    std::array<SimConfig, 2> cfgs{
        SimConfig::defaults_for(spec, handover::StrategyId::closest_satellite),
        SimConfig::defaults_for(spec, handover::StrategyId::max_remaining_visibility)};
    for (auto& c : cfgs) c.duration_s = 300.0;

    const auto stats = compare(cfgs);
    REQUIRE(stats.size() == 2);
    // each entry equals its standalone run
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
        const auto solo = run(cfgs[i]).summary;
        CHECK(stats[i].handover_rate_per_hour ==
              doctest::Approx(solo.handover_rate_per_hour));
        CHECK(stats[i].outage_fraction == doctest::Approx(solo.outage_fraction));
        REQUIRE(stats[i].mean_data_rate_bps.has_value());
        CHECK(*stats[i].mean_data_rate_bps == doctest::Approx(*solo.mean_data_rate_bps));
    }
}

TEST_CASE("summary statistics arithmetic") {
    const SimConfig cfg = static_overhead_config();
    const auto res = run(cfg);
    // constant series: mean == min == max
    CHECK(*res.summary.mean_data_rate_bps == doctest::Approx(*res.summary.min_data_rate_bps));
    CHECK(*res.summary.mean_data_rate_bps == doctest::Approx(*res.summary.max_data_rate_bps));
    const double eff = res.samples[0].link->spectral_efficiency_bps_hz;
    CHECK(*res.summary.mean_spectral_efficiency == doctest::Approx(eff));
    CHECK(*res.summary.mean_data_rate_bps == doctest::Approx(eff * 25e6));
}
