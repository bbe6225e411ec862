#pragma once

#include <vector>

#include "gravcat/correlations.hpp"
#include "gravcat/model.hpp"

namespace gravcat {

enum class Spacing { Log, Linear };

const char* to_string(Spacing spacing);

struct SweepSpec {
  ModelParams params;
  double t_min;
  double t_max;
  int n_points;
  Spacing spacing = Spacing::Log;

  /// Throws std::invalid_argument unless 0 < t_min < t_max and n_points >= 2.
  void validate() const;
};

/// Ascending grid with exact endpoints.
std::vector<double> temperature_grid(const SweepSpec& spec);

/// One report per grid point, ascending in T. Grid points are evaluated in
/// parallel (OpenMP when available); the result is identical to sweep_serial.
std::vector<CorrelationReport> sweep(const SweepSpec& spec);

/// Single-threaded reference for sweep.
std::vector<CorrelationReport> sweep_serial(const SweepSpec& spec);

enum class ThresholdStatus { Found, AlwaysZero, NeverZeroInRange };

const char* to_string(ThresholdStatus status);

struct ThresholdResult {
  double t_th = 0.0;
  double t_lo = 0.0;  // C(t_lo) > 0
  double t_hi = 0.0;  // C(t_hi) == 0
  int iterations = 0;
  ThresholdStatus status = ThresholdStatus::AlwaysZero;
};

/// Temperature at which the concurrence reaches exactly zero.
///
/// The upper bracket is found by geometric expansion from T = omega. A
/// 64-point log pre-scan between 1e-6 omega and that bracket then picks the
/// last positive-to-zero transition, which is bisected until
/// t_hi - t_lo <= rel_tol * t_th.
///
/// AlwaysZero if C already vanishes at 1e-6 omega (e.g. delta = 0),
/// NeverZeroInRange if C stays positive up to 1e12 omega.
/// Throws std::invalid_argument unless rel_tol is in (0, 1e-2].
ThresholdResult threshold_temperature(const ModelParams& params, double rel_tol = 1e-10);

enum class MaximumStatus { Interior, Boundary, Degenerate };

const char* to_string(MaximumStatus status);

struct CoherenceMaximum {
  double t_star = 0.0;
  double l1_max = 0.0;
  /// Largest l1 on the coarse scan; l1_max >= coarse_max.
  double coarse_max = 0.0;
  MaximumStatus status = MaximumStatus::Degenerate;
};

/// Maximum of l1(T): 200-point log scan over [1e-4, 1e4] omega, then
/// golden-section refinement (in log T) to 1e-8 relative width.
/// Degenerate when l1 vanishes on the whole scan, Boundary when the scan
/// maximum sits on a grid edge.
CoherenceMaximum coherence_maximum(const ModelParams& params);

namespace numerics {

/// Shrinks [lo, hi] around the boundary of a predicate that holds at lo and
/// fails at hi, until hi - lo <= rel_tol * (lo + hi) / 2. Returns the
/// number of bisection steps.
template <class Predicate>
int bisect_predicate(const Predicate& holds, double& lo, double& hi, double rel_tol,
                     int max_iterations = 400) {
  int it = 0;
  while (it < max_iterations && hi - lo > rel_tol * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (holds(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++it;
  }
  return it;
}

struct GoldenResult {
  double x;
  double fx;
};

/// Golden-section search for the maximum of a unimodal f on [a, b]; stops when
/// the bracket is narrower than abs_tol. Returns the best evaluated point.
template <class F>
GoldenResult golden_section_maximize(const F& f, double a, double b, double abs_tol,
                                     int max_iterations = 500) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  GoldenResult best = fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
  for (int i = 0; i < max_iterations && std::abs(b - a) > abs_tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best.fx) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best.fx) best = {d, fd};
    }
  }
  return best;
}

}  // namespace numerics
}  // namespace gravcat
