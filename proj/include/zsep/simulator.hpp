#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "zsep/protocols.hpp"

// Drives the round loop and derives the summary metrics. Reported round
// indices are 1-based ("the first node died at round k"); the election
// threshold consumes the 0-based counter internally. Each RoundRecord holds
// end-of-round state, so a node dying mid-round is counted dead in that
// round's record.

namespace zsep {

struct RoundRecord {
  int round = 0;  // 1-based
  int alive_normal = 0;
  int alive_advance = 0;
  int ch_count = 0;
  long long packets_to_bs_cum = 0;
  long long packets_to_ch_cum = 0;
  double total_residual_energy = 0.0;

  int alive_total() const { return alive_normal + alive_advance; }
};

struct RunSummary {
  ScenarioConfig cfg;
  int stability_period = 0;
  int instability_period = 0;
  int network_lifetime = 0;
  long long throughput_bs = 0;
  long long throughput_ch = 0;
  std::vector<RoundRecord> all_rounds;
};

// First 1-based round whose record shows fewer than n alive; max_rounds if
// no node ever dies.
inline int stability_period(std::span<const RoundRecord> series, int n,
                            int max_rounds) {
  for (const RoundRecord& rec : series)
    if (rec.alive_total() < n) return rec.round;
  return max_rounds;
}

// First 1-based round whose record shows zero alive; max_rounds if the
// network never fully dies.
inline int network_lifetime(std::span<const RoundRecord> series, int max_rounds) {
  for (const RoundRecord& rec : series)
    if (rec.alive_total() == 0) return rec.round;
  return max_rounds;
}

inline RunSummary run(const ScenarioConfig& cfg) {
  World world = make_world(cfg);
  RunSummary summary;
  summary.cfg = cfg;
  summary.all_rounds.reserve(static_cast<std::size_t>(cfg.max_rounds));
  long long packets_bs = 0;
  long long packets_ch = 0;
  for (int r = 0; r < cfg.max_rounds; ++r) {
    const bool any_alive =
        std::any_of(world.nodes.begin(), world.nodes.end(),
                    [](const Node& node) { return node.alive; });
    if (!any_alive) break;
    const RoundOutcome outcome = step_round(world, r);
    packets_bs += outcome.packets_to_bs;
    packets_ch += outcome.packets_to_ch;
    RoundRecord rec;
    rec.round = r + 1;
    for (const Node& node : world.nodes) {
      if (!node.alive) continue;
      if (node.kind == NodeKind::Normal) ++rec.alive_normal;
      else ++rec.alive_advance;
    }
    rec.ch_count = outcome.ch_count;
    rec.packets_to_bs_cum = packets_bs;
    rec.packets_to_ch_cum = packets_ch;
    for (const Node& node : world.nodes) rec.total_residual_energy += node.energy;
    summary.all_rounds.push_back(rec);
  }
  summary.stability_period = stability_period(summary.all_rounds, cfg.n, cfg.max_rounds);
  summary.network_lifetime = network_lifetime(summary.all_rounds, cfg.max_rounds);
  summary.instability_period = summary.network_lifetime - summary.stability_period;
  summary.throughput_bs = packets_bs;
  summary.throughput_ch = packets_ch;
  return summary;
}

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
};

inline MetricStats metric_stats(const std::vector<double>& values) {
  MetricStats s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return s;
}

// Cross-seed statistics for a batch of runs of one scenario.
struct RunStats {
  ScenarioConfig base_cfg;  // seed field = first run's seed
  std::vector<RunSummary> runs;
  MetricStats stability;
  MetricStats lifetime;
  MetricStats instability;
  MetricStats throughput_bs;
  MetricStats throughput_ch;
  // Mean curves by round index; runs that ended early contribute zero
  // alive nodes and their final packet counts past their last round.
  std::vector<double> mean_alive;
  std::vector<double> mean_packets_bs;
  std::vector<double> mean_packets_ch;
};

namespace detail {

inline bool same_scenario_except_seed(const ScenarioConfig& a, const ScenarioConfig& b) {
  return a.field_width == b.field_width && a.field_height == b.field_height &&
         a.bs_pos.x == b.bs_pos.x && a.bs_pos.y == b.bs_pos.y && a.n == b.n &&
         a.m == b.m && a.alpha == b.alpha && a.e0 == b.e0 && a.p_opt == b.p_opt &&
         a.max_rounds == b.max_rounds && a.protocol == b.protocol &&
         a.radio.e_elec == b.radio.e_elec && a.radio.e_fs == b.radio.e_fs &&
         a.radio.e_amp == b.radio.e_amp && a.radio.e_da == b.radio.e_da &&
         a.radio.packet_bits == b.radio.packet_bits;
}

}  // namespace detail

inline RunStats aggregate_runs(std::vector<RunSummary> summaries) {
  if (summaries.empty())
    throw std::invalid_argument("aggregate_runs needs at least one summary");
  for (const RunSummary& s : summaries)
    if (!detail::same_scenario_except_seed(s.cfg, summaries.front().cfg))
      throw std::invalid_argument("aggregate_runs got mixed configs");
  RunStats stats;
  stats.base_cfg = summaries.front().cfg;
  std::vector<double> stab, life, instab, tbs, tch;
  std::size_t longest = 0;
  for (const RunSummary& s : summaries) {
    stab.push_back(s.stability_period);
    life.push_back(s.network_lifetime);
    instab.push_back(s.instability_period);
    tbs.push_back(static_cast<double>(s.throughput_bs));
    tch.push_back(static_cast<double>(s.throughput_ch));
    longest = std::max(longest, s.all_rounds.size());
  }
  stats.stability = metric_stats(stab);
  stats.lifetime = metric_stats(life);
  stats.instability = metric_stats(instab);
  stats.throughput_bs = metric_stats(tbs);
  stats.throughput_ch = metric_stats(tch);
  stats.mean_alive.assign(longest, 0.0);
  stats.mean_packets_bs.assign(longest, 0.0);
  stats.mean_packets_ch.assign(longest, 0.0);
  const double count = static_cast<double>(summaries.size());
  for (const RunSummary& s : summaries) {
    for (std::size_t i = 0; i < longest; ++i) {
      if (i < s.all_rounds.size()) {
        stats.mean_alive[i] += s.all_rounds[i].alive_total() / count;
        stats.mean_packets_bs[i] += s.all_rounds[i].packets_to_bs_cum / count;
        stats.mean_packets_ch[i] += s.all_rounds[i].packets_to_ch_cum / count;
      } else {
        stats.mean_packets_bs[i] += s.throughput_bs / count;
        stats.mean_packets_ch[i] += s.throughput_ch / count;
      }
    }
  }
  stats.runs = std::move(summaries);
  return stats;
}

}  // namespace zsep
