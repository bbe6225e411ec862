#include "gravcat/correlations.hpp"

#include <cmath>

namespace gravcat {

const char* to_string(ConcurrenceBranch branch) {
  switch (branch) {
    case ConcurrenceBranch::Block23:
      return "rho23";
    case ConcurrenceBranch::Block14:
      return "rho14";
    case ConcurrenceBranch::Zero:
      break;
  }
  return "zero";
}

Concurrence concurrence_x(const ThermalState& s) {
  const double block23 = std::abs(s.rho23) - std::sqrt(s.rho11 * s.rho44);
  const double block14 = std::abs(s.rho14) - std::abs(s.rho22);
  if (block14 <= 0.0 && block23 <= 0.0) return {0.0, ConcurrenceBranch::Zero};
  if (block14 >= block23) return {2.0 * block14, ConcurrenceBranch::Block14};
  return {2.0 * block23, ConcurrenceBranch::Block23};
}

L1Coherence l1_coherence(const ThermalState& s) {
  L1Coherence c;
  c.g1 = 2.0 * std::abs(s.rho14);
  c.g2 = 2.0 * std::abs(s.rho23);
  c.l1 = c.g1 + c.g2;
  return c;
}

CorrelationReport report(const ModelParams& params, double temperature) {
  const ThermalState state = thermal_state(params, temperature);
  const Concurrence c = concurrence_x(state);
  const L1Coherence coh = l1_coherence(state);
  return {temperature, c.value, coh.l1, coh.g1, coh.g2, c.branch};
}

}  // namespace gravcat
