#pragma once

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zsep/report.hpp"
#include "zsep/simulator.hpp"

// Command-line front end. Three subcommands:
//   run      one protocol over a batch of seeds
//   compare  LEACH, SEP and Z-SEP side by side, with a comparison table
//   sweep    compare over a Cartesian product of m and alpha values
// Flag defaults reproduce the standard benchmark scenario (100x100 field,
// 100 nodes, BS at center, m=0.2, alpha=1, p_opt=0.1). Scenario flags can
// also come from a key=value config file (flags win on conflict), and
// ZSEP_SEED in the environment overrides the default seed.

namespace zsep::cli {

struct Invocation {
  ScenarioConfig cfg;
  std::string protocol = "zsep";
  int runs = 20;
  std::string out_dir = "out";
  std::string format = "both";  // csv | json | both
  std::vector<double> m_values{0.2};
  std::vector<double> alpha_values{1.0};
};

namespace detail {

inline void add_scenario_flags(CLI::App* sub, Invocation& inv, bool sweep_lists) {
  ScenarioConfig& cfg = inv.cfg;
  sub->set_config("--config")
      ->description("key=value config file; command-line flags win");
  sub->add_option("--field-width", cfg.field_width, "Field width in meters")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--field-height", cfg.field_height, "Field height in meters")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--bs-x", cfg.bs_pos.x, "Base station x")->capture_default_str();
  sub->add_option("--bs-y", cfg.bs_pos.y, "Base station y")->capture_default_str();
  sub->add_option("--n", cfg.n, "Node count")
      ->capture_default_str()->check(CLI::PositiveNumber);
  if (sweep_lists) {
    sub->add_option("--m", inv.m_values, "Advance-node fractions to sweep")
        ->delimiter(',')->capture_default_str()->check(CLI::Range(0.0, 1.0));
    sub->add_option("--alpha", inv.alpha_values, "Extra-energy multipliers to sweep")
        ->delimiter(',')->capture_default_str()->check(CLI::NonNegativeNumber);
  } else {
    sub->add_option("--m", cfg.m, "Fraction of advance nodes")
        ->capture_default_str()->check(CLI::Range(0.0, 1.0));
    sub->add_option("--alpha", cfg.alpha, "Advance extra-energy multiplier")
        ->capture_default_str()->check(CLI::NonNegativeNumber);
  }
  sub->add_option("--e0", cfg.e0, "Normal-node initial energy, J")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--p-opt", cfg.p_opt, "Cluster-head probability")
      ->capture_default_str()->check(CLI::Range(1e-9, 1.0));
  sub->add_option("--max-rounds", cfg.max_rounds, "Round limit")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--packet-bits", cfg.radio.packet_bits, "Data packet size, bits")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--e-elec", cfg.radio.e_elec, "Electronics energy, J/bit")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--e-fs", cfg.radio.e_fs, "Free-space amplifier, J/bit/m^2")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--e-amp", cfg.radio.e_amp, "Multipath amplifier, J/bit/m^4")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--e-da", cfg.radio.e_da, "Aggregation energy, J/bit/signal")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "Base RNG seed; run i uses seed+i")
      ->capture_default_str()->envname("ZSEP_SEED");
  sub->add_option("--runs", inv.runs, "Seeds per scenario")
      ->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--out-dir", inv.out_dir, "Output directory")
      ->capture_default_str();
  sub->add_option("--format", inv.format, "Output files: csv, json or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json", "both"}));
}

inline RunStats run_batch(ScenarioConfig cfg, int runs) {
  const std::uint64_t base_seed = cfg.seed;
  std::vector<RunSummary> summaries;
  summaries.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i) {
    cfg.seed = base_seed + static_cast<std::uint64_t>(i);
    summaries.push_back(run(cfg));
  }
  RunStats stats = aggregate_runs(std::move(summaries));
  stats.base_cfg.seed = base_seed;
  return stats;
}

inline void write_outputs(const RunStats& stats, const std::filesystem::path& dir,
                          const std::string& format) {
  std::filesystem::create_directories(dir);
  if (format != "json") {
    for (const RunSummary& s : stats.runs)
      write_series_csv((dir / series_filename(s.cfg)).string(), s.all_rounds);
  }
  if (format != "csv") {
    const std::string name = std::string(to_string(stats.base_cfg.protocol)) +
                             "_" + format_double(stats.base_cfg.m) + "_" +
                             format_double(stats.base_cfg.alpha) +
                             "_summary.json";
    write_summary_json((dir / name).string(), stats);
  }
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace detail

inline int cmd_run(Invocation inv) {
  inv.cfg.protocol = protocol_from_string(inv.protocol);
  validate(inv.cfg);
  const RunStats stats = detail::run_batch(inv.cfg, inv.runs);
  detail::write_outputs(stats, inv.out_dir, inv.format);
  std::cout << render_comparison({stats});
  return 0;
}

inline int cmd_compare(const Invocation& inv, const std::filesystem::path& dir) {
  std::vector<RunStats> all;
  for (Protocol proto : {Protocol::LEACH, Protocol::SEP, Protocol::ZSEP}) {
    ScenarioConfig cfg = inv.cfg;
    cfg.protocol = proto;
    validate(cfg);
    all.push_back(detail::run_batch(cfg, inv.runs));
    detail::write_outputs(all.back(), dir, inv.format);
  }
  const std::string table = render_comparison(all);
  std::cout << table;
  detail::write_text(dir / "comparison.txt", table);
  return 0;
}

inline int cmd_compare(const Invocation& inv) {
  return cmd_compare(inv, inv.out_dir);
}

inline int cmd_sweep(const Invocation& inv) {
  if (inv.m_values.empty() || inv.alpha_values.empty())
    throw CLI::ValidationError("sweep", "sweep lists must be non-empty");
  for (double m : inv.m_values) {
    for (double alpha : inv.alpha_values) {
      Invocation cell = inv;
      cell.cfg.m = m;
      cell.cfg.alpha = alpha;
      const std::filesystem::path dir =
          std::filesystem::path(inv.out_dir) /
          ("m" + format_double(m) + "_alpha" + format_double(alpha));
      std::cout << "# m=" << format_double(m) << " alpha=" << format_double(alpha)
                << "\n";
      cmd_compare(cell, dir);
    }
  }
  return 0;
}

inline int run_main(int argc, const char* const* argv) {
  CLI::App app{"Discrete-round energy simulator for LEACH, SEP and Z-SEP"};
  app.require_subcommand(1);

  Invocation run_inv, cmp_inv, sweep_inv;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one protocol over a seed batch");
  detail::add_scenario_flags(run_cmd, run_inv, false);
  run_cmd->add_option("--protocol", run_inv.protocol, "leach, sep or zsep")
      ->capture_default_str()
      ->check(CLI::IsMember({"leach", "sep", "zsep"}));

  CLI::App* cmp_cmd =
      app.add_subcommand("compare", "Run all three protocols and tabulate");
  detail::add_scenario_flags(cmp_cmd, cmp_inv, false);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "compare over the product of m and alpha lists");
  detail::add_scenario_flags(sweep_cmd, sweep_inv, true);

  try {
    app.parse(argc, argv);
    if (run_cmd->parsed()) return cmd_run(run_inv);
    if (cmp_cmd->parsed()) return cmd_compare(cmp_inv);
    return cmd_sweep(sweep_inv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zsep::cli
