#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "zsep/deployment.hpp"
#include "zsep/election.hpp"
#include "zsep/model.hpp"
#include "zsep/radio.hpp"

// One round of each protocol: election, cluster formation, member
// transmission, aggregation at the head, and head-to-base-station
// transmission. Liveness is fixed at round start; a node alive then
// performs all of its scheduled transmissions this round even if they
// exhaust its battery (energy clamps at 0 and the node is dead from the
// next round on).
//
// Rule shared by all protocols: a round that elects no head falls back to
// direct transmission, every alive participant sending straight to the BS.

namespace zsep {

struct Cluster {
  int head = -1;
  std::vector<int> members;  // excludes the head
};

struct RoundOutcome {
  long long packets_to_bs = 0;
  long long packets_to_ch = 0;
  int ch_count = 0;
  double energy_spent = 0.0;        // sum of actual per-node deductions
  std::vector<int> head_ids;        // elected heads, ascending id
};

struct World {
  ScenarioConfig cfg;
  std::vector<Node> nodes;
  RandomSource rng;
};

// Deploys per the configured protocol: zonal bands for Z-SEP, uniform
// otherwise. Validates the config first.
inline World make_world(const ScenarioConfig& cfg) {
  validate(cfg);
  World world{cfg, {}, RandomSource(cfg.seed)};
  world.nodes = cfg.protocol == Protocol::ZSEP ? deploy_zonal(cfg, world.rng)
                                               : deploy_uniform(cfg, world.rng);
  return world;
}

namespace detail {

// Deducts up to `cost` from the node, clamping at zero; returns the amount
// actually drawn and flips the alive flag when the battery empties.
inline double spend(Node& node, double cost) {
  const double drawn = std::min(cost, node.energy);
  node.energy -= drawn;
  if (node.energy <= 0.0) {
    node.energy = 0.0;
    node.alive = false;
  }
  return drawn;
}

inline std::vector<int> alive_ids(const std::vector<Node>& nodes) {
  std::vector<int> ids;
  for (const Node& node : nodes)
    if (node.alive) ids.push_back(node.id);
  return ids;
}

inline std::vector<int> alive_ids(const std::vector<Node>& nodes, NodeKind kind) {
  std::vector<int> ids;
  for (const Node& node : nodes)
    if (node.alive && node.kind == kind) ids.push_back(node.id);
  return ids;
}

// Every alive node in `ids` sends one packet straight to the BS.
inline void direct_to_bs(World& world, const std::vector<int>& ids,
                         RoundOutcome& outcome) {
  for (int id : ids) {
    Node& node = world.nodes[id];
    outcome.energy_spent += spend(
        node, tx_energy(world.cfg.radio.packet_bits,
                        distance(node.pos, world.cfg.bs_pos), world.cfg.radio));
    outcome.packets_to_bs += 1;
  }
}

}  // namespace detail

// Each non-head node joins its minimum-distance head; ties go to the lowest
// head id. Heads must be non-empty (callers use the direct-send fallback
// for head-less rounds).
inline std::vector<Cluster> form_clusters(std::span<const Node> nodes,
                                          const std::vector<int>& heads,
                                          const std::vector<int>& others) {
  if (heads.empty()) throw std::invalid_argument("form_clusters needs heads");
  std::vector<Cluster> clusters;
  clusters.reserve(heads.size());
  for (int head : heads) clusters.push_back(Cluster{head, {}});
  for (int id : others) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_cluster = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      const double d = distance(nodes[id].pos, nodes[clusters[c].head].pos);
      if (d < best || (d == best && clusters[c].head < clusters[best_cluster].head)) {
        best = d;
        best_cluster = c;
      }
    }
    clusters[best_cluster].members.push_back(id);
  }
  return clusters;
}

// Executes the TDMA data phase for formed clusters: members transmit to
// their head; the head receives each member packet, aggregates all signals
// (members plus its own) into one packet, and transmits it to the BS.
inline void run_cluster_round(World& world, const std::vector<Cluster>& clusters,
                              RoundOutcome& outcome) {
  const RadioParams& radio = world.cfg.radio;
  const long k = radio.packet_bits;
  for (const Cluster& cluster : clusters) {
    Node& head = world.nodes[cluster.head];
    for (int id : cluster.members) {
      Node& member = world.nodes[id];
      outcome.energy_spent +=
          detail::spend(member, tx_energy(k, distance(member.pos, head.pos), radio));
      outcome.packets_to_ch += 1;
      outcome.energy_spent += detail::spend(head, rx_energy(k, radio));
    }
    const int signals = static_cast<int>(cluster.members.size()) + 1;
    outcome.energy_spent += detail::spend(head, aggregation_energy(k, signals, radio));
    outcome.energy_spent +=
        detail::spend(head, tx_energy(k, distance(head.pos, world.cfg.bs_pos), radio));
    outcome.packets_to_bs += 1;
  }
}

namespace detail {

// Shared clustered data phase: elected heads plus everyone else in
// `participants` forming clusters, with the no-head direct-send fallback.
inline void clustered_phase(World& world, const std::vector<int>& heads,
                            const std::vector<int>& participants,
                            RoundOutcome& outcome) {
  outcome.ch_count += static_cast<int>(heads.size());
  outcome.head_ids.insert(outcome.head_ids.end(), heads.begin(), heads.end());
  if (heads.empty()) {
    direct_to_bs(world, participants, outcome);
    return;
  }
  std::vector<int> others;
  for (int id : participants)
    if (!std::binary_search(heads.begin(), heads.end(), id)) others.push_back(id);
  const auto clusters = form_clusters(world.nodes, heads, others);
  run_cluster_round(world, clusters, outcome);
}

}  // namespace detail

// LEACH with heterogeneous energies: one shared probability class over all
// alive nodes, every node electing with p_opt.
inline RoundOutcome leach_round(World& world, int round) {
  RoundOutcome outcome;
  const auto candidates = detail::alive_ids(world.nodes);
  const auto cls = ElectionClass::make(world.cfg.p_opt);
  const auto heads = elect_heads(world.nodes, candidates, cls, round, world.rng);
  detail::clustered_phase(world, heads, candidates, outcome);
  return outcome;
}

// SEP: normal and advance nodes elect in separate classes with weighted
// probabilities (normal class draws first each round).
inline RoundOutcome sep_round(World& world, int round) {
  RoundOutcome outcome;
  const ScenarioConfig& cfg = world.cfg;
  const auto normals = detail::alive_ids(world.nodes, NodeKind::Normal);
  const auto advances = detail::alive_ids(world.nodes, NodeKind::Advance);
  std::vector<int> heads;
  if (!normals.empty()) {
    const auto cls = ElectionClass::make(p_normal(cfg.p_opt, cfg.m, cfg.alpha));
    const auto elected = elect_heads(world.nodes, normals, cls, round, world.rng);
    heads.insert(heads.end(), elected.begin(), elected.end());
  }
  if (!advances.empty()) {
    const auto cls = ElectionClass::make(p_advance(cfg.p_opt, cfg.m, cfg.alpha));
    const auto elected = elect_heads(world.nodes, advances, cls, round, world.rng);
    heads.insert(heads.end(), elected.begin(), elected.end());
  }
  std::sort(heads.begin(), heads.end());
  auto participants = normals;
  participants.insert(participants.end(), advances.begin(), advances.end());
  std::sort(participants.begin(), participants.end());
  detail::clustered_phase(world, heads, participants, outcome);
  return outcome;
}

// Z-SEP: zone-0 normal nodes send directly to the BS every round and never
// join clusters; advance nodes in the head zones run SEP-style election
// among themselves and cluster to the nearest head, wherever it is.
inline RoundOutcome zsep_round(World& world, int round) {
  RoundOutcome outcome;
  const ScenarioConfig& cfg = world.cfg;
  detail::direct_to_bs(world, detail::alive_ids(world.nodes, NodeKind::Normal),
                       outcome);
  const auto advances = detail::alive_ids(world.nodes, NodeKind::Advance);
  if (!advances.empty()) {
    const auto cls = ElectionClass::make(p_advance(cfg.p_opt, cfg.m, cfg.alpha));
    const auto heads = elect_heads(world.nodes, advances, cls, round, world.rng);
    detail::clustered_phase(world, heads, advances, outcome);
  }
  return outcome;
}

inline RoundOutcome step_round(World& world, int round) {
  switch (world.cfg.protocol) {
    case Protocol::LEACH: return leach_round(world, round);
    case Protocol::SEP: return sep_round(world, round);
    default: return zsep_round(world, round);
  }
}

}  // namespace zsep
