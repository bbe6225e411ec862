#include "gravcat/model.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace gravcat {

const char* to_string(UnitMode mode) {
  return mode == UnitMode::Natural ? "natural" : "physical";
}

const char* to_string(DeltaConvention convention) {
  return convention == DeltaConvention::Full ? "full" : "half";
}

ModelParams::ModelParams(double w, double delta, UnitMode unit_mode)
    : w_(w), delta_(delta), unit_mode_(unit_mode) {
  if (!std::isfinite(w) || w < 0.0) {
    throw std::invalid_argument("w must be finite and non-negative, got " + std::to_string(w));
  }
  if (!std::isfinite(delta) || delta < 0.0) {
    throw std::invalid_argument("delta must be finite and non-negative, got " +
                                std::to_string(delta));
  }
}

ModelParams ModelParams::scaled(double c) const {
  if (!(c > 0.0)) throw std::invalid_argument("scale factor must be positive");
  return ModelParams(c * w_, c * delta_, unit_mode_);
}

ModelParams params_from_physical(const PhysicalSetup& s) {
  if (!std::isfinite(s.d) || s.d <= 0.0) throw std::invalid_argument("d must be positive");
  if (!std::isfinite(s.L) || s.L <= 0.0) throw std::invalid_argument("L must be positive");
  if (!std::isfinite(s.mass) || s.mass < 0.0) {
    throw std::invalid_argument("mass must be non-negative");
  }
  if (!std::isfinite(s.G) || s.G <= 0.0) throw std::invalid_argument("G must be positive");
  if (!std::isfinite(s.k_B) || s.k_B <= 0.0) throw std::invalid_argument("k_B must be positive");

  const double prefactor = s.convention == DeltaConvention::Full ? 1.0 : 0.5;
  // 1/d - 1/d' = (d' - d) / (d d'), and d' - d = L^2 / (d' + d) avoids cancellation for L << d.
  const double far = s.far_separation();
  const double inverse_gap = (s.L * s.L / (far + s.d)) / (s.d * far);
  const double delta_joule = prefactor * s.alpha() * inverse_gap;
  return ModelParams(s.w_over_kB, delta_joule / s.k_B, UnitMode::Physical);
}

Eigensystem eigensystem(const ModelParams& params) {
  const double w = params.w();
  const double delta = params.delta();
  const double omega = params.omega();

  Eigensystem e{};
  e.eps1 = -delta;
  e.eps2 = omega;
  e.eps3 = -omega;
  e.eps4 = delta;
  e.omega = omega;
  e.theta_plus = (omega == 0.0) ? 0.0 : std::atan(delta / (w + omega));
  // delta / (w - omega) = -(w + omega) / delta; the right side has no cancellation
  // and tends to -inf as delta -> 0.
  if (delta == 0.0) {
    e.theta_minus = -std::numbers::pi / 2.0;
  } else {
    e.theta_minus = std::atan(-(w + omega) / delta);
  }
  return e;
}

}  // namespace gravcat
