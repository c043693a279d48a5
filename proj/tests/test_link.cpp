#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ngso/errors.hpp"
#include "ngso/link.hpp"

using namespace ngso;
using namespace ngso::link;

TEST_CASE("fspl hand-evaluated anchors") {
    // 92.45 + 20log10(f_GHz) + 20log10(d_km)
    CHECK(fspl_db(1000.0, 19e9) == doctest::Approx(178.03).epsilon(1e-4));
    CHECK(fspl_db(600.0, 19e9) == doctest::Approx(173.59).epsilon(1e-4));
    // distance-doubling scaling law
    const double delta = fspl_db(2468.0, 12e9) - fspl_db(1234.0, 12e9);
    CHECK(delta == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(fspl_db(0.0, 19e9), ValidationError);
}

TEST_CASE("downlink snr composition") {
    LinkBudgetParams p;
    p.eirpd_dbw_hz = -43.9;  // Kuiper
    p.gs_g_over_t_db_k = 20.0;
    p.extra_losses_db = 0.0;
    p.downlink_freq_hz = 19e9;
    CHECK(downlink_snr_db(p, 600.0) == doctest::Approx(31.11).epsilon(1e-3));

    // doubling distance costs exactly 20log10(2)
    CHECK(downlink_snr_db(p, 600.0) - downlink_snr_db(p, 1200.0) ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));

    // losses are linear
    LinkBudgetParams lossy = p;
    lossy.extra_losses_db = 3.7;
    CHECK(downlink_snr_db(p, 600.0) - downlink_snr_db(lossy, 600.0) ==
          doctest::Approx(3.7).epsilon(1e-12));

    LinkBudgetParams bad = p;
    bad.extra_losses_db = -1.0;
    CHECK_THROWS_AS(downlink_snr_db(bad, 600.0), ValidationError);
}

TEST_CASE("modcod lookup semantics") {
    const auto& table = ModcodTable::dvbs2x_default();
    CHECK(snr_to_spectral_efficiency(-50.0, table) == 0.0);
    CHECK(snr_to_spectral_efficiency(50.0, table) == doctest::Approx(5.90));
    CHECK(table.max_efficiency() == doctest::Approx(5.90));
    CHECK(table.max_efficiency() <= 6.0);

    // boundary inclusivity: exactly at a threshold takes that row
    for (const auto& row : table.rows()) {
        CHECK(snr_to_spectral_efficiency(row.snr_threshold_db, table) ==
              doctest::Approx(row.spectral_efficiency_bps_hz));
    }

    // monotone in snr
    double prev = -1.0;
    for (double snr = -10.0; snr <= 25.0; snr += 0.25) {
        const double eff = snr_to_spectral_efficiency(snr, table);
        CHECK(eff >= prev);
        prev = eff;
    }
}

TEST_CASE("modcod table validation") {
    CHECK_THROWS_AS(ModcodTable::from_rows({}), ValidationError);
    CHECK_THROWS_AS(ModcodTable::from_rows({{0.0, 1.0}, {1.0, 0.5}}), ValidationError);
    CHECK_THROWS_AS(ModcodTable::from_rows({{0.0, 1.0}, {0.0, 2.0}}), ValidationError);
    CHECK_THROWS_AS(ModcodTable::from_rows({{0.0, 6.5}}), ValidationError);
}

TEST_CASE("modcod file parsing") {
    const std::string shipped = std::string(NGSO_DATA_DIR) + "/dvbs2x_modcod.txt";
    const auto table = ModcodTable::from_file(shipped);
    // shipped file and embedded default are the same ladder
    const auto& def = ModcodTable::dvbs2x_default();
    REQUIRE(table.rows().size() == def.rows().size());
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        CHECK(table.rows()[i].snr_threshold_db ==
              doctest::Approx(def.rows()[i].snr_threshold_db));
        CHECK(table.rows()[i].spectral_efficiency_bps_hz ==
              doctest::Approx(def.rows()[i].spectral_efficiency_bps_hz));
    }

    // parse errors carry line numbers
    const std::string bad_path = "bad_modcod_test.txt";
    {
        std::ofstream f(bad_path);
        f << "# comment\n-2.0,0.4\nbogus line\n";
    }
    try {
        ModcodTable::from_file(bad_path);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }
    std::remove(bad_path.c_str());
}

TEST_CASE("data rate and delay") {
    CHECK(data_rate_bps(6.0, 155e6) == doctest::Approx(930e6));
    CHECK(data_rate_bps(0.0, 155e6) == 0.0);
    CHECK(data_rate_bps(1.0, 25e6) == doctest::Approx(25e6));

    CHECK(propagation_delay_ms(600.0) == doctest::Approx(2.0014).epsilon(1e-4));
    CHECK(propagation_delay_ms(26980.0) == doctest::Approx(90.0).epsilon(2e-3));
    CHECK_THROWS_AS(propagation_delay_ms(0.0), ValidationError);
}

TEST_CASE("doppler") {
    CHECK(doppler_hz(0.0, 19e9) == 0.0);
    CHECK(doppler_hz(7.5, 19e9) == doctest::Approx(475.3e3).epsilon(1e-4));
    CHECK(doppler_hz(-7.5, 19e9) == doctest::Approx(-475.3e3).epsilon(1e-4));
}

TEST_CASE("snr and efficiency monotone in distance") {
    LinkBudgetParams p;
    p.eirpd_dbw_hz = -36.3;
    const auto& table = ModcodTable::dvbs2x_default();
    double prev_snr = 1e9;
    double prev_eff = 7.0;
    for (double d = 500.0; d <= 30000.0; d += 250.0) {
        const double snr = downlink_snr_db(p, d);
        CHECK(snr < prev_snr);
        const double eff = snr_to_spectral_efficiency(snr, table);
        CHECK(eff <= prev_eff);
        prev_snr = snr;
        prev_eff = eff;
    }
}
