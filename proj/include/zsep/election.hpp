#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "zsep/model.hpp"

// Rotating cluster-head election. Each probability class (all nodes in
// LEACH; normal and advance separately in SEP; advance only in Z-SEP) runs
// the threshold rotation independently: within an epoch of round(1/p)
// rounds every candidate serves at most once, and the threshold climbs to
// force the remaining candidates through by the epoch's last round.

namespace zsep {

inline double p_optimal(int k_opt, int n) {
  if (k_opt < 1 || k_opt > n) throw std::invalid_argument("need 1 <= k_opt <= n");
  return static_cast<double>(k_opt) / static_cast<double>(n);
}

inline double p_advance(double p_opt, double m, double alpha) {
  const double p = p_opt * (1.0 + alpha) / (1.0 + alpha * m);
  if (p > 1.0) throw std::invalid_argument("advance probability exceeds 1");
  return p;
}

inline double p_normal(double p_opt, double m, double alpha) {
  return p_opt / (1.0 + alpha * m);
}

// One election probability class and its epoch window.
struct ElectionClass {
  double p = 0.0;
  int epoch_length = 0;

  static ElectionClass make(double p) {
    if (!(p > 0 && p <= 1)) throw std::invalid_argument("p must be in (0,1]");
    return {p, std::max(1, static_cast<int>(std::floor(1.0 / p + 0.5)))};
  }
};

inline double threshold(double p, int r, bool eligible) {
  if (!eligible) return 0.0;
  const int epoch_length = ElectionClass::make(p).epoch_length;
  const double denom = 1.0 - p * static_cast<double>(r % epoch_length);
  if (denom <= 0) throw std::logic_error("threshold denominator not positive");
  return p / denom;
}

// Draws one uniform per candidate, in ascending candidate order, whether or
// not the candidate is eligible; this keeps the random stream aligned with
// the reference simulations. Candidates must be alive. Returns elected ids
// and marks them ineligible for the rest of the epoch.
inline std::vector<int> elect_heads(std::span<Node> nodes,
                                    const std::vector<int>& candidate_ids,
                                    const ElectionClass& cls, int round,
                                    RandomSource& rng) {
  const int in_epoch = round % cls.epoch_length;
  if (in_epoch == 0) {
    for (int id : candidate_ids) nodes[id].ch_count_this_epoch = 0;
  }
  std::vector<int> heads;
  for (int id : candidate_ids) {
    Node& node = nodes[id];
    node.rounds_since_epoch_start = in_epoch;
    const double draw = rng.next_unit();
    if (node.eligible() && draw <= threshold(cls.p, round, true)) {
      node.ch_count_this_epoch = 1;
      heads.push_back(id);
    }
  }
  return heads;
}

}  // namespace zsep
