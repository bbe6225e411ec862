#pragma once

#include "gravcat/model.hpp"

namespace gravcat {

/// Temperatures below this are evaluated as the T = 0 ground-state limit.
inline constexpr double kTemperatureFloor = 1e-30;

/// Gibbs state exp(-H/T)/Z of the two-gravcat Hamiltonian. It has X shape in
/// the standard basis:
///
///   | rho11   0      0      rho14 |
///   | 0       rho22  rho23  0     |
///   | 0       rho23  rho22  0     |
///   | rho14   0      0      rho44 |
struct ThermalState {
  double rho11 = 0.0;
  double rho14 = 0.0;
  double rho22 = 0.0;
  double rho23 = 0.0;
  double rho44 = 0.0;
  /// Partition function; +inf when it overflows a double (see log_z).
  double z = 0.0;
  double log_z = 0.0;
  double temperature = 0.0;
  /// 1/T in the params' unit mode; +inf on the ground-state path.
  double beta = 0.0;
  /// Set on the ground-state path when the lowest level is degenerate (w = 0);
  /// the state is then the equal mixture of the degenerate ground eigenstates.
  bool degenerate_ground = false;

  double trace() const { return rho11 + 2.0 * rho22 + rho44; }
  double purity() const {
    return rho11 * rho11 + rho44 * rho44 + 2.0 * rho14 * rho14 + 2.0 * rho22 * rho22 +
           2.0 * rho23 * rho23;
  }
};

/// Z = 2 cosh(delta/T) + 2 cosh(omega/T). Throws std::invalid_argument for T <= 0.
double partition_function(const Eigensystem& eig, double temperature);

/// log Z, finite even where Z itself overflows.
double log_partition_function(const Eigensystem& eig, double temperature);

/// Closed-form Gibbs state. T = 0 (or below kTemperatureFloor) returns the
/// ground-state projector. Throws std::invalid_argument for negative or
/// non-finite T.
ThermalState thermal_state(const ModelParams& params, double temperature);

}  // namespace gravcat
