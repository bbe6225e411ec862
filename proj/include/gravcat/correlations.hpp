#pragma once

#include "gravcat/model.hpp"
#include "gravcat/thermal_state.hpp"

namespace gravcat {

/// Which argument of the X-state concurrence maximum won.
///   Block23: |rho23| - sqrt(rho11 rho44)
///   Block14: |rho14| - |rho22|   (also on ties between the two)
///   Zero:    neither is positive, C = 0
enum class ConcurrenceBranch { Block23, Block14, Zero };

const char* to_string(ConcurrenceBranch branch);

struct Concurrence {
  double value = 0.0;
  ConcurrenceBranch branch = ConcurrenceBranch::Zero;
};

/// l1-norm of coherence split into its anti-diagonal (g1 = 2|rho14|) and
/// inner-block (g2 = 2|rho23|) parts; l1 = g1 + g2.
struct L1Coherence {
  double l1 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

struct CorrelationReport {
  double temperature = 0.0;
  double concurrence = 0.0;
  double l1_norm = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  ConcurrenceBranch branch = ConcurrenceBranch::Zero;
};

/// C = 2 max{|rho23| - sqrt(rho11 rho44), |rho14| - |rho22|, 0}. The comparison
/// against zero is exact, so C hits 0 exactly past the threshold temperature.
Concurrence concurrence_x(const ThermalState& state);

L1Coherence l1_coherence(const ThermalState& state);

CorrelationReport report(const ModelParams& params, double temperature);

}  // namespace gravcat
