#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

// Shared domain records and the seeded random source used by every other
// module. A simulation run owns one RandomSource; nothing here touches
// global state.

namespace zsep {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

enum class NodeKind { Normal, Advance };

inline const char* to_string(NodeKind k) {
  return k == NodeKind::Normal ? "normal" : "advance";
}

// Initial battery charge: advance nodes carry alpha times extra energy.
inline double initial_energy(NodeKind kind, double e0, double alpha) {
  return kind == NodeKind::Advance ? e0 * (1.0 + alpha) : e0;
}

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::Normal;
  Position pos;
  double energy = 0.0;  // joules, clamped at 0 on death
  bool alive = true;
  // Election bookkeeping: a node serves as cluster head at most once per
  // epoch of its probability class.
  int ch_count_this_epoch = 0;
  int rounds_since_epoch_start = 0;

  bool eligible() const { return ch_count_this_epoch == 0; }
};

struct RadioParams {
  // First-order radio model constants, SEP-lineage defaults.
  double e_elec = 50e-9;     // J/bit, transmit/receive electronics
  double e_fs = 10e-12;      // J/bit/m^2, free-space amplifier (d^2)
  double e_amp = 0.0013e-12; // J/bit/m^4, multipath amplifier (d^4)
  double e_da = 5e-9;        // J/bit/signal, aggregation cost
  long packet_bits = 4000;   // data packet size
};

enum class Protocol { LEACH, SEP, ZSEP };

inline const char* to_string(Protocol p) {
  switch (p) {
    case Protocol::LEACH: return "leach";
    case Protocol::SEP: return "sep";
    default: return "zsep";
  }
}

inline Protocol protocol_from_string(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "leach") return Protocol::LEACH;
  if (t == "sep") return Protocol::SEP;
  if (t == "zsep" || t == "z-sep") return Protocol::ZSEP;
  throw std::invalid_argument("unknown protocol: " + s);
}

struct ScenarioConfig {
  double field_width = 100.0;   // meters
  double field_height = 100.0;  // meters
  Position bs_pos{50.0, 50.0};  // base station, field center by default
  int n = 100;                  // node count
  double m = 0.2;               // fraction of advance nodes
  double alpha = 1.0;           // advance extra-energy multiplier
  double e0 = 0.5;              // J, normal-node initial energy
  double p_opt = 0.1;           // per-round cluster-head probability
  int max_rounds = 8000;
  Protocol protocol = Protocol::ZSEP;
  RadioParams radio;
  std::uint64_t seed = 1;
};

// Number of advance nodes: round(m*n), ties half up.
inline int advance_count(const ScenarioConfig& cfg) {
  return static_cast<int>(std::floor(cfg.m * cfg.n + 0.5));
}

inline void validate(const ScenarioConfig& cfg) {
  if (cfg.field_width <= 0 || cfg.field_height <= 0)
    throw std::invalid_argument("field dimensions must be positive");
  if (!(cfg.bs_pos.x >= 0 && cfg.bs_pos.x <= cfg.field_width &&
        cfg.bs_pos.y >= 0 && cfg.bs_pos.y <= cfg.field_height))
    throw std::invalid_argument("bs position outside field");
  if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
  if (cfg.m < 0 || cfg.m > 1) throw std::invalid_argument("m must be in [0,1]");
  if (cfg.alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  if (cfg.e0 <= 0) throw std::invalid_argument("e0 must be positive");
  if (!(cfg.p_opt > 0 && cfg.p_opt <= 1))
    throw std::invalid_argument("p_opt must be in (0,1]");
  if (cfg.p_opt * cfg.n < 1)
    throw std::invalid_argument("p_opt*n must be >= 1");
  if (cfg.max_rounds < 0) throw std::invalid_argument("max_rounds must be >= 0");
  if (cfg.radio.e_elec <= 0 || cfg.radio.e_fs <= 0 || cfg.radio.e_amp <= 0 ||
      cfg.radio.e_da <= 0)
    throw std::invalid_argument("radio energy constants must be positive");
  if (cfg.radio.packet_bits <= 0)
    throw std::invalid_argument("packet_bits must be positive");
  if (cfg.protocol != Protocol::LEACH) {
    const double p_adv = cfg.p_opt * (1.0 + cfg.alpha) / (1.0 + cfg.alpha * cfg.m);
    if (p_adv > 1.0)
      throw std::invalid_argument("advance-node election probability exceeds 1");
  }
}

// Deterministic pseudo-random stream. mt19937_64 is fully specified by the
// standard, and uniforms are derived from the raw 64-bit output directly,
// so identical seeds give bit-identical traces on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Uniform in (lo, hi]; matches the zone bounds' open-closed intervals.
  double uniform_open_closed(double lo, double hi) {
    return hi - (hi - lo) * next_unit();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zsep
