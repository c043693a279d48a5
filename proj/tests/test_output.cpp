#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "ngso/errors.hpp"
#include "ngso/output.hpp"

using namespace ngso;
using namespace ngso::output;

namespace {

simkit::SimConfig small_config(handover::StrategyId strategy) {
    const auto spec = constellation::load_catalog("oneweb_phase1");
    auto cfg = simkit::SimConfig::defaults_for(spec, strategy);
    cfg.duration_s = 120.0;
    cfg.step_s = 2.0;
    return cfg;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    // trailing empty field after a final comma
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

TEST_CASE("series csv shape") {
    const auto cfg = small_config(handover::StrategyId::closest_satellite);
    const auto res = simkit::run(cfg);
    const auto lines = split_lines(series_csv(res));
    REQUIRE(lines.size() == res.samples.size() + 1);
    CHECK(lines[0] == kSeriesHeader);

    int handover_flags = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_fields(lines[i]);
        REQUIRE(fields.size() == 11);
        const auto& s = res.samples[i - 1];
        CHECK(std::stod(fields[0]) == doctest::Approx(s.time_s));
        if (s.connected()) {
            CHECK(fields[2] == "1");
            CHECK(std::stoi(fields[1]) == s.link->sat_id);
            CHECK(std::stod(fields[4]) ==
                  doctest::Approx(s.link->slant_range_km).epsilon(1e-4));
            CHECK(std::stod(fields[8]) == doctest::Approx(s.link->delay_ms).epsilon(1e-4));
        } else {
            CHECK(fields[2] == "0");
            CHECK(fields[1].empty());
            for (int k = 3; k <= 9; ++k) CHECK(fields[k].empty());
        }
        handover_flags += (fields[10] == "1") ? 1 : 0;
    }
    CHECK(handover_flags == handover::handover_count(res.events));
}

TEST_CASE("series csv is deterministic") {
    const auto cfg = small_config(handover::StrategyId::max_remaining_visibility);
    const auto a = series_csv(simkit::run(cfg));
    const auto b = series_csv(simkit::run(cfg));
    CHECK(a == b);
}

TEST_CASE("write_series round trips through the filesystem") {
    const auto cfg = small_config(handover::StrategyId::closest_satellite);
    const auto res = simkit::run(cfg);
    const std::string path = "series_out_test.csv";
    write_series(res, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == series_csv(res));
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_series(res, "/nonexistent_dir/x.csv"), ValidationError);
}

TEST_CASE("summary json reflects the run") {
    const auto cfg = small_config(handover::StrategyId::closest_satellite);
    const auto res = simkit::run(cfg);
    SummaryEntry entry;
    entry.constellation = cfg.constellation.name;
    entry.strategy = handover::strategy_name(cfg.strategy);
    entry.config_digest = config_digest(cfg);
    entry.stats = res.summary;

    const std::vector<SummaryEntry> entries{entry};
    const std::string doc = summary_json(entries);
    CHECK(doc.find("oneweb_phase1/closest") != std::string::npos);
    CHECK(doc.find("handover_rate_per_hour") != std::string::npos);
    CHECK(doc.find("outage_fraction") != std::string::npos);

    const std::string path = "summary_out_test.json";
    write_summary(entries, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == doc);
    std::remove(path.c_str());
}

TEST_CASE("config digest tracks every field") {
    const auto base = small_config(handover::StrategyId::closest_satellite);
    const auto d0 = config_digest(base);
    CHECK(d0 == config_digest(base));  // stable

    auto c1 = base;
    c1.strategy = handover::StrategyId::max_remaining_visibility;
    CHECK(config_digest(c1) != d0);

    auto c2 = base;
    c2.duration_s += 1.0;
    CHECK(config_digest(c2) != d0);

    auto c3 = base;
    c3.ground_station.latitude_deg += 0.001;
    CHECK(config_digest(c3) != d0);

    auto c4 = base;
    c4.link.extra_losses_db = 0.5;
    CHECK(config_digest(c4) != d0);

    auto c5 = base;
    auto rows = c5.modcod.rows();
    rows.pop_back();
    c5.modcod = link::ModcodTable::from_rows(rows);
    CHECK(config_digest(c5) != d0);

    auto c6 = base;
    c6.constellation.min_elevation_deg += 5.0;
    CHECK(config_digest(c6) != d0);
}
