#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsep/simulator.hpp"
#include "zsep/text.hpp"

// Serialization of per-round series (CSV, the plotting contract), batch
// summaries (JSON), and the plain-text protocol comparison table. The
// headline "Throughput" column is packets delivered to the base station;
// node-to-head packets are reported separately and never summed in.

namespace zsep {

inline constexpr const char* kSeriesHeader =
    "round,alive_normal,alive_advance,alive_total,ch_count,"
    "packets_bs_cum,packets_ch_cum,residual_energy_j";

inline void write_series_csv(std::ostream& out,
                             const std::vector<RoundRecord>& series) {
  out << kSeriesHeader << '\n';
  for (const RoundRecord& rec : series) {
    out << rec.round << ',' << rec.alive_normal << ',' << rec.alive_advance
        << ',' << rec.alive_total() << ',' << rec.ch_count << ','
        << rec.packets_to_bs_cum << ',' << rec.packets_to_ch_cum << ','
        << format_double(rec.total_residual_energy) << '\n';
  }
}

inline void write_series_csv(const std::string& path,
                             const std::vector<RoundRecord>& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_series_csv(out, series);
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<RoundRecord> read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSeriesHeader)
    throw std::runtime_error("bad series header");
  std::vector<RoundRecord> series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::runtime_error("bad series row: " + line);
    RoundRecord rec;
    rec.round = static_cast<int>(parse_int(f[0]));
    rec.alive_normal = static_cast<int>(parse_int(f[1]));
    rec.alive_advance = static_cast<int>(parse_int(f[2]));
    if (parse_int(f[3]) != rec.alive_total())
      throw std::runtime_error("alive_total mismatch: " + line);
    rec.ch_count = static_cast<int>(parse_int(f[4]));
    rec.packets_to_bs_cum = parse_int(f[5]);
    rec.packets_to_ch_cum = parse_int(f[6]);
    rec.total_residual_energy = parse_double(f[7]);
    series.push_back(rec);
  }
  return series;
}

inline std::vector<RoundRecord> read_series_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_series_csv(in);
}

// Per-run series file name: <protocol>_<m>_<alpha>_seed<k>.csv
inline std::string series_filename(const ScenarioConfig& cfg) {
  return std::string(to_string(cfg.protocol)) + "_" + format_double(cfg.m) +
         "_" + format_double(cfg.alpha) + "_seed" + std::to_string(cfg.seed) +
         ".csv";
}

namespace detail {

inline nlohmann::json config_json(const ScenarioConfig& cfg) {
  return nlohmann::json{
      {"field_width", cfg.field_width},
      {"field_height", cfg.field_height},
      {"bs_x", cfg.bs_pos.x},
      {"bs_y", cfg.bs_pos.y},
      {"n", cfg.n},
      {"m", cfg.m},
      {"alpha", cfg.alpha},
      {"e0", cfg.e0},
      {"p_opt", cfg.p_opt},
      {"max_rounds", cfg.max_rounds},
      {"protocol", to_string(cfg.protocol)},
      {"seed", cfg.seed},
      {"radio",
       {{"e_elec", cfg.radio.e_elec},
        {"e_fs", cfg.radio.e_fs},
        {"e_amp", cfg.radio.e_amp},
        {"e_da", cfg.radio.e_da},
        {"packet_bits", cfg.radio.packet_bits}}}};
}

inline nlohmann::json stats_json(const MetricStats& s) {
  return nlohmann::json{
      {"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

}  // namespace detail

inline nlohmann::json summary_json(const RunStats& stats) {
  nlohmann::json doc;
  doc["config"] = detail::config_json(stats.base_cfg);
  doc["runs"] = nlohmann::json::array();
  for (const RunSummary& s : stats.runs) {
    doc["runs"].push_back({{"seed", s.cfg.seed},
                           {"stability_period", s.stability_period},
                           {"instability_period", s.instability_period},
                           {"network_lifetime", s.network_lifetime},
                           {"throughput_bs", s.throughput_bs},
                           {"throughput_ch", s.throughput_ch},
                           {"rounds_executed", s.all_rounds.size()}});
  }
  doc["stats"] = {{"stability_period", detail::stats_json(stats.stability)},
                  {"network_lifetime", detail::stats_json(stats.lifetime)},
                  {"instability_period", detail::stats_json(stats.instability)},
                  {"throughput_bs", detail::stats_json(stats.throughput_bs)},
                  {"throughput_ch", detail::stats_json(stats.throughput_ch)}};
  doc["curves"] = {{"mean_alive", stats.mean_alive},
                   {"mean_packets_bs", stats.mean_packets_bs},
                   {"mean_packets_ch", stats.mean_packets_ch}};
  return doc;
}

inline void write_summary_json(const std::string& path, const RunStats& stats) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << summary_json(stats).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

// Plain-text comparison in the shape of the stability/lifetime/throughput
// tables: one row per protocol, means across seeds.
inline std::string render_comparison(const std::vector<RunStats>& per_protocol) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "Protocol" << std::right << std::setw(20)
      << "Stability (rounds)" << std::setw(20) << "Lifetime (rounds)"
      << std::setw(22) << "Throughput (packets)" << '\n';
  out << std::string(72, '-') << '\n';
  for (const RunStats& stats : per_protocol) {
    out << std::left << std::setw(10) << to_string(stats.base_cfg.protocol)
        << std::right << std::fixed << std::setprecision(1) << std::setw(20)
        << stats.stability.mean << std::setw(20) << stats.lifetime.mean
        << std::setw(22) << stats.throughput_bs.mean << '\n';
    out.unsetf(std::ios::fixed);
  }
  return out.str();
}

}  // namespace zsep
