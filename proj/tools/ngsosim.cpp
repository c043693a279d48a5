// Command-line front end: catalog listing, single runs, and the
// constellation x strategy comparison grid, with CSV/JSON outputs.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngso/errors.hpp"
#include "ngso/output.hpp"
#include "ngso/simkit.hpp"

namespace {

using namespace ngso;

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

struct CommonOpts {
    std::string config_file;
    std::string modcod_file;
    std::string gs = "50.7753,6.0839";  // Aachen
    double duration_s = 10000.0;
    double step_s = 1.0;
    double g_over_t = -1000.0;      // sentinel: keep catalog default
    double extra_losses_db = 0.0;
    double min_elevation = -1000.0;  // sentinel: keep catalog default
    double freq_ghz = 0.0;           // sentinel: keep catalog default
};

geometry::GroundStation parse_gs(const std::string& text) {
    geometry::GroundStation gs;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> gs.latitude_deg >> c1 >> gs.longitude_deg) || c1 != ',') {
        throw ValidationError("--gs expects lat,lon[,alt_km], got '" + text + "'");
    }
    if (in >> c2) {
        if (c2 != ',' || !(in >> gs.altitude_km)) {
            throw ValidationError("--gs expects lat,lon[,alt_km], got '" + text + "'");
        }
    }
    gs.validate();
    return gs;
}

simkit::SimConfig build_config(const std::string& constellation_name,
                               handover::StrategyId strategy, const CommonOpts& opts) {
    constellation::ConstellationSpec spec =
        opts.config_file.empty() ? constellation::load_catalog(constellation_name)
                                 : constellation::load_spec_file(opts.config_file);
    if (opts.min_elevation > -999.0) {
        spec.min_elevation_deg = opts.min_elevation;
    }
    if (opts.freq_ghz > 0.0) {
        spec.downlink_freq_hz = opts.freq_ghz * 1.0e9;
    }
    simkit::SimConfig cfg = simkit::SimConfig::defaults_for(spec, strategy);
    cfg.ground_station = parse_gs(opts.gs);
    cfg.duration_s = opts.duration_s;
    cfg.step_s = opts.step_s;
    if (opts.g_over_t > -999.0) {
        cfg.link.gs_g_over_t_db_k = opts.g_over_t;
    }
    cfg.link.extra_losses_db = opts.extra_losses_db;
    if (!opts.modcod_file.empty()) {
        cfg.modcod = link::ModcodTable::from_file(opts.modcod_file);
    }
    cfg.validate();
    return cfg;
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_config) {
    if (with_config) {
        cmd->add_option("--config", opts.config_file,
                        "JSON constellation config overriding --constellation");
    }
    cmd->add_option("--modcod", opts.modcod_file, "custom MODCOD table file");
    cmd->add_option("--gs", opts.gs, "ground station lat,lon[,alt_km]")
        ->default_str("50.7753,6.0839 (Aachen)");
    cmd->add_option("--duration", opts.duration_s, "simulated duration [s]")
        ->default_val(10000.0);
    cmd->add_option("--step", opts.step_s, "time step [s]")->default_val(1.0);
    cmd->add_option("--g-over-t", opts.g_over_t,
                    "ground station G/T [dB/K], overrides the catalog value");
    cmd->add_option("--losses", opts.extra_losses_db, "extra link losses [dB]")
        ->default_val(0.0);
    cmd->add_option("--min-elevation", opts.min_elevation,
                    "elevation mask [deg], overrides the catalog value");
    cmd->add_option("--freq", opts.freq_ghz,
                    "downlink carrier [GHz], overrides the catalog value");
}

int cmd_list() {
    std::printf("%-15s %-22s %6s %13s %12s %8s %8s %6s\n", "name", "altitude_km", "sats",
                "eirpd_dbw_hz", "channel_mhz", "freq_ghz", "mask_deg", "g/t");
    for (const auto& name : constellation::catalog_names()) {
        const auto spec = constellation::load_catalog(name);
        std::string alt;
        for (const auto& shell : spec.shells) {
            if (!alt.empty()) alt += "/";
            if (shell.elliptical) {
                std::ostringstream s;
                s << shell.perigee_km << "x" << shell.apogee_km;
                alt += s.str();
            } else {
                std::ostringstream s;
                s << shell.altitude_km;
                alt += s.str();
            }
        }
        std::printf("%-15s %-22s %6d %13.1f %12.0f %8.1f %8.1f %6.1f\n", name.c_str(),
                    alt.c_str(), spec.total_satellites(), spec.eirpd_max_dbw_hz,
                    spec.channel_width_hz / 1e6, spec.downlink_freq_hz / 1e9,
                    spec.min_elevation_deg, spec.gs_g_over_t_db_k);
    }
    return kExitOk;
}

int cmd_run(const std::string& constellation_name, const std::string& strategy_name,
            const CommonOpts& opts, const std::string& out_path,
            const std::string& summary_path) {
    const auto strategy = handover::strategy_from_name(strategy_name);
    if (!strategy) {
        throw ValidationError("unknown strategy '" + strategy_name +
                              "'; use closest|max_visibility");
    }
    const auto cfg = build_config(constellation_name, *strategy, opts);
    const auto result = simkit::run(cfg);

    if (!out_path.empty()) {
        output::write_series(result, out_path);
    }
    output::SummaryEntry entry{cfg.constellation.name, handover::strategy_name(*strategy),
                               output::config_digest(cfg), result.summary};
    if (!summary_path.empty()) {
        output::write_summary({&entry, 1}, summary_path);
    }
    std::cout << output::summary_json({&entry, 1});
    return kExitOk;
}

int cmd_compare(const std::vector<std::string>& names, const CommonOpts& opts,
                const std::string& out_dir, const std::string& summary_path) {
    std::vector<simkit::SimConfig> configs;
    std::vector<output::SummaryEntry> entries;
    for (const auto& name : names) {
        for (const auto strategy : {handover::StrategyId::closest_satellite,
                                    handover::StrategyId::max_remaining_visibility}) {
            configs.push_back(build_config(name, strategy, opts));
        }
    }
    for (const auto& cfg : configs) {
        const auto result = simkit::run(cfg);
        const std::string strat = handover::strategy_name(cfg.strategy);
        if (!out_dir.empty()) {
            output::write_series(result,
                                 out_dir + "/" + cfg.constellation.name + "_" + strat + ".csv");
        }
        entries.push_back({cfg.constellation.name, strat, output::config_digest(cfg),
                           result.summary});
    }
    const std::string doc = output::summary_json(entries);
    if (!summary_path.empty()) {
        output::write_summary(entries, summary_path);
    }
    std::cout << doc;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NGSO constellation downlink / handover simulator"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "catalog entries and their parameters");

    CommonOpts run_opts;
    std::string run_constellation, run_strategy = "closest", run_out, run_summary;
    auto* run = app.add_subcommand("run", "simulate one constellation/strategy");
    run->add_option("--constellation", run_constellation, "catalog name")->required();
    run->add_option("--strategy", run_strategy, "closest|max_visibility")
        ->default_val("closest");
    run->add_option("--out", run_out, "series CSV output path");
    run->add_option("--summary-out", run_summary, "summary JSON output path");
    add_common_flags(run, run_opts, true);

    CommonOpts cmp_opts;
    std::vector<std::string> cmp_names = constellation::catalog_names();
    std::string cmp_out_dir, cmp_summary;
    auto* cmp = app.add_subcommand("compare", "grid over constellations x both strategies");
    cmp->add_option("--constellations", cmp_names, "catalog names (default: all)");
    cmp->add_option("--out-dir", cmp_out_dir, "directory for per-run series CSVs");
    cmp->add_option("--summary-out", cmp_summary, "summary JSON output path");
    add_common_flags(cmp, cmp_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (list->parsed()) {
            return cmd_list();
        }
        if (run->parsed()) {
            return cmd_run(run_constellation, run_strategy, run_opts, run_out, run_summary);
        }
        return cmd_compare(cmp_names, cmp_opts, cmp_out_dir, cmp_summary);
    } catch (const ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const CatalogError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}
