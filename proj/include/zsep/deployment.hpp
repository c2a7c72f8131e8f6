#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "zsep/model.hpp"
#include "zsep/text.hpp"

// Node placement. LEACH and SEP deploy all nodes uniformly over the field;
// Z-SEP splits the field into three Y bands: a middle band for normal nodes
// and two head zones (top and bottom) for the advance nodes.
//
// Node ids are assigned deterministically: 0..n_normal-1 are normal,
// n_normal..n-1 are advance. Coordinates are drawn in ascending id order,
// x before y, so a deployment is a pure function of (config, seed).

namespace zsep {

// Z-SEP band boundaries as fractions of field height. At the default
// 100 m field these are the literal 20/80 m bounds.
struct ZoneLayout {
  static constexpr double kLowFraction = 0.2;
  static constexpr double kHighFraction = 0.8;

  double field_height;

  double low() const { return kLowFraction * field_height; }
  double high() const { return kHighFraction * field_height; }

  // Zone 0 (normal nodes): low < y <= high.
  bool in_zone0(const Position& p) const { return p.y > low() && p.y <= high(); }
  // Head zone 1: 0 < y <= low.
  bool in_head_zone1(const Position& p) const { return p.y > 0 && p.y <= low(); }
  // Head zone 2: high < y <= field_height.
  bool in_head_zone2(const Position& p) const {
    return p.y > high() && p.y <= field_height;
  }
};

namespace detail {

inline Node make_node(int id, NodeKind kind, const ScenarioConfig& cfg) {
  Node node;
  node.id = id;
  node.kind = kind;
  node.energy = initial_energy(kind, cfg.e0, cfg.alpha);
  node.alive = true;
  return node;
}

}  // namespace detail

inline std::vector<Node> deploy_uniform(const ScenarioConfig& cfg, RandomSource& rng) {
  const int n_adv = advance_count(cfg);
  const int n_normal = cfg.n - n_adv;
  std::vector<Node> nodes;
  nodes.reserve(cfg.n);
  for (int id = 0; id < cfg.n; ++id) {
    const NodeKind kind = id < n_normal ? NodeKind::Normal : NodeKind::Advance;
    Node node = detail::make_node(id, kind, cfg);
    node.pos.x = rng.uniform(0.0, cfg.field_width);
    node.pos.y = rng.uniform(0.0, cfg.field_height);
    nodes.push_back(node);
  }
  return nodes;
}

inline std::vector<Node> deploy_zonal(const ScenarioConfig& cfg, RandomSource& rng) {
  const ZoneLayout zones{cfg.field_height};
  const int n_adv = advance_count(cfg);
  const int n_normal = cfg.n - n_adv;
  const int zone1_count = (n_adv + 1) / 2;  // odd count: head zone 1 gets the extra
  std::vector<Node> nodes;
  nodes.reserve(cfg.n);
  for (int id = 0; id < cfg.n; ++id) {
    const NodeKind kind = id < n_normal ? NodeKind::Normal : NodeKind::Advance;
    Node node = detail::make_node(id, kind, cfg);
    node.pos.x = rng.uniform(0.0, cfg.field_width);
    if (kind == NodeKind::Normal) {
      node.pos.y = rng.uniform_open_closed(zones.low(), zones.high());
    } else if (id - n_normal < zone1_count) {
      node.pos.y = rng.uniform_open_closed(0.0, zones.low());
    } else {
      node.pos.y = rng.uniform_open_closed(zones.high(), cfg.field_height);
    }
    nodes.push_back(node);
  }
  return nodes;
}

// Flat text node list, one node per line: id kind x y energy. Lets a
// deployment be frozen and replayed across protocol comparisons.
inline void write_nodes(std::ostream& out, const std::vector<Node>& nodes) {
  for (const Node& node : nodes) {
    out << node.id << ' ' << to_string(node.kind) << ' '
        << format_double(node.pos.x) << ' ' << format_double(node.pos.y) << ' '
        << format_double(node.energy) << '\n';
  }
}

inline void write_nodes(const std::string& path, const std::vector<Node>& nodes) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_nodes(out, nodes);
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::vector<Node> read_nodes(std::istream& in) {
  std::vector<Node> nodes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ' ');
    if (fields.size() != 5)
      throw std::runtime_error("bad node line: " + line);
    Node node;
    node.id = static_cast<int>(parse_int(fields[0]));
    if (fields[1] == "normal") node.kind = NodeKind::Normal;
    else if (fields[1] == "advance") node.kind = NodeKind::Advance;
    else throw std::runtime_error("bad node kind: " + std::string(fields[1]));
    node.pos.x = parse_double(fields[2]);
    node.pos.y = parse_double(fields[3]);
    node.energy = parse_double(fields[4]);
    node.alive = node.energy > 0;
    nodes.push_back(node);
  }
  return nodes;
}

inline std::vector<Node> read_nodes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_nodes(in);
}

}  // namespace zsep
