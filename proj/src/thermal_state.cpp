#include "gravcat/thermal_state.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace gravcat {
namespace {

// Boltzmann weights relative to the ground level eps3 = -omega, so every
// exponent is non-positive.
struct RelativeWeights {
  double w1;  // exp(-beta (eps1 - eps3))
  double w2;  // exp(-beta (eps2 - eps3))
  double w3;  // 1
  double w4;  // exp(-beta (eps4 - eps3))

  double sum() const { return w1 + w2 + w3 + w4; }
};

// omega - delta = w^2 / (omega + delta), exact when w = 0.
double gap_to_eps1(const ModelParams& p) {
  const double omega = p.omega();
  if (omega == 0.0) return 0.0;
  return p.w() * p.w() / (omega + p.delta());
}

RelativeWeights thermal_weights(const ModelParams& p, double beta) {
  const double omega = p.omega();
  return {std::exp(-beta * gap_to_eps1(p)), std::exp(-2.0 * beta * omega), 1.0,
          std::exp(-beta * (omega + p.delta()))};
}

// beta -> inf limit: every level degenerate with the ground level keeps weight 1.
RelativeWeights ground_weights(const ModelParams& p) {
  const double omega = p.omega();
  return {gap_to_eps1(p) == 0.0 ? 1.0 : 0.0, omega == 0.0 ? 1.0 : 0.0, 1.0,
          omega + p.delta() == 0.0 ? 1.0 : 0.0};
}

// Trigonometric factors of the mixing angles, in forms that stay exact at
// delta = 0 and avoid cancellation for delta << w:
//   sin^2(th+) = cos^2(th-) = delta^2 / (2 omega (omega + w))
//   cos^2(th+) = sin^2(th-) = (omega + w) / (2 omega)
//   sin(2 th+) = -sin(2 th-) = delta / omega
struct MixingFactors {
  double sin2_plus;
  double cos2_plus;
  double sin2_minus;
  double cos2_minus;
  double sin_double_plus;
  double sin_double_minus;
};

MixingFactors mixing_factors(const ModelParams& p) {
  const double omega = p.omega();
  if (omega == 0.0) {
    // H = 0; the labels are arbitrary, keep the delta -> 0 angles th+ = 0, th- = -pi/2.
    return {0.0, 1.0, 1.0, 0.0, 0.0, 0.0};
  }
  const double small = p.delta() * p.delta() / (2.0 * omega * (omega + p.w()));
  const double large = (omega + p.w()) / (2.0 * omega);
  const double s = p.delta() / omega;
  return {small, large, large, small, s, -s};
}

void check_temperature(double temperature) {
  if (!std::isfinite(temperature)) throw std::invalid_argument("temperature must be finite");
  if (temperature < 0.0) {
    throw std::invalid_argument("temperature must be non-negative, got " +
                                std::to_string(temperature));
  }
}

}  // namespace

double log_partition_function(const Eigensystem& eig, double temperature) {
  check_temperature(temperature);
  if (temperature == 0.0) throw std::invalid_argument("partition function needs T > 0");
  const double beta = 1.0 / temperature;
  const double omega = eig.omega;
  const double gap1 = eig.eps1 - eig.eps3;
  const double sum = 1.0 + std::exp(-beta * gap1) + std::exp(-2.0 * beta * omega) +
                     std::exp(-beta * (eig.eps4 - eig.eps3));
  return beta * omega + std::log(sum);
}

double partition_function(const Eigensystem& eig, double temperature) {
  return std::exp(log_partition_function(eig, temperature));
}

ThermalState thermal_state(const ModelParams& params, double temperature) {
  check_temperature(temperature);
  const Eigensystem eig = eigensystem(params);

  ThermalState s;
  s.temperature = temperature;
  const bool ground = temperature < kTemperatureFloor;
  RelativeWeights wt{};
  if (ground) {
    s.beta = std::numeric_limits<double>::infinity();
    wt = ground_weights(params);
    s.degenerate_ground = wt.sum() > 1.0;
    s.z = std::numeric_limits<double>::infinity();
    s.log_z = std::numeric_limits<double>::infinity();
  } else {
    s.beta = 1.0 / temperature;
    wt = thermal_weights(params, s.beta);
    s.log_z = s.beta * eig.omega + std::log(wt.sum());
    s.z = std::exp(s.log_z);
  }

  const double norm = wt.sum();
  const MixingFactors m = mixing_factors(params);

  s.rho11 = (wt.w2 * m.sin2_minus + wt.w3 * m.sin2_plus) / norm;
  s.rho14 = (wt.w2 * m.sin_double_minus + wt.w3 * m.sin_double_plus) / (2.0 * norm);
  s.rho22 = (wt.w1 + wt.w4) / (2.0 * norm);
  s.rho23 = (wt.w1 - wt.w4) / (2.0 * norm);
  s.rho44 = (wt.w2 * m.cos2_minus + wt.w3 * m.cos2_plus) / norm;
  return s;
}

}  // namespace gravcat
