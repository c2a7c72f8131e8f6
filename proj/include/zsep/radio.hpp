#pragma once

#include <stdexcept>

#include "zsep/model.hpp"

// First-order radio energy model: transmit electronics plus a free-space
// (d^2) or multipath (d^4) amplifier term, switching at the crossover
// distance d0 = sqrt(e_fs / e_amp). Control traffic carries no cost; only
// data packets are charged.

namespace zsep {

inline double crossover_distance(const RadioParams& radio) {
  if (radio.e_fs <= 0 || radio.e_amp <= 0)
    throw std::invalid_argument("amplifier constants must be positive");
  return std::sqrt(radio.e_fs / radio.e_amp);
}

inline double tx_energy(long k, double d, const RadioParams& radio) {
  const double bits = static_cast<double>(k);
  if (d < crossover_distance(radio))
    return radio.e_elec * bits + radio.e_fs * bits * (d * d);
  return radio.e_elec * bits + radio.e_amp * bits * (d * d) * (d * d);
}

inline double rx_energy(long k, const RadioParams& radio) {
  return radio.e_elec * static_cast<double>(k);
}

inline double aggregation_energy(long k, int n_signals, const RadioParams& radio) {
  return radio.e_da * static_cast<double>(k) * static_cast<double>(n_signals);
}

}  // namespace zsep
