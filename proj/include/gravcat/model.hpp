#pragma once

#include <cmath>

namespace gravcat {

/// How energies and temperatures are interpreted.
/// Natural: k_B = 1, dimensionless. Physical: energies stored as E/k_B in Kelvin,
/// temperatures in Kelvin. The arithmetic is identical in both modes.
enum class UnitMode { Natural, Physical };

/// Prefactor in the gravitational coupling Delta = c * alpha * (1/d - 1/d').
/// Full uses c = 1, Half uses c = 1/2.
enum class DeltaConvention { Full, Half };

const char* to_string(UnitMode mode);
const char* to_string(DeltaConvention convention);

/// Energy gap w and gravitational coupling delta of the two-gravcat Hamiltonian
///   H = (w/2)(sz x I + I x sz) - delta (sx x sx).
class ModelParams {
 public:
  /// Throws std::invalid_argument unless both values are finite and non-negative.
  ModelParams(double w, double delta, UnitMode unit_mode = UnitMode::Natural);

  double w() const { return w_; }
  double delta() const { return delta_; }
  UnitMode unit_mode() const { return unit_mode_; }

  /// Omega = sqrt(delta^2 + w^2), the spectral scale.
  double omega() const { return std::hypot(delta_, w_); }

  ModelParams scaled(double c) const;

 private:
  double w_;
  double delta_;
  UnitMode unit_mode_;
};

/// Two equal masses in parallel double wells (minima separated by L), at
/// separation d when on the same side of their wells.
struct PhysicalSetup {
  double mass = 0.0;          // kg
  double d = 0.0;             // m
  double L = 0.0;             // m
  double G = 6.67430e-11;     // m^3 kg^-1 s^-2
  double k_B = 1.380649e-23;  // J/K
  double w_over_kB = 0.0;     // K
  DeltaConvention convention = DeltaConvention::Full;

  /// d' = sqrt(d^2 + L^2), the separation when the particles sit in opposite minima.
  double far_separation() const { return std::hypot(d, L); }
  double alpha() const { return G * mass * mass; }
};

/// Throws std::invalid_argument for non-positive d or L, negative mass or
/// non-finite inputs.
ModelParams params_from_physical(const PhysicalSetup& setup);

/// Spectrum of H. Eigenvalues follow the eigenstate labelling
///   phi1 = (|10> + |01>)/sqrt2            eps1 = -delta
///   phi2 = sin(th-)|11> + cos(th-)|00>    eps2 = +omega
///   phi3 = sin(th+)|11> + cos(th+)|00>    eps3 = -omega  (ground state)
///   phi4 = (-|10> + |01>)/sqrt2           eps4 = +delta
/// with tan(th+-) = delta / (w +- omega).
struct Eigensystem {
  double eps1;
  double eps2;
  double eps3;
  double eps4;
  double omega;
  double theta_plus;
  // -pi/2 in the decoupled limit delta -> 0, where w - omega vanishes.
  double theta_minus;
};

Eigensystem eigensystem(const ModelParams& params);

}  // namespace gravcat
