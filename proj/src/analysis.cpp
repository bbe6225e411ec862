#include "gravcat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gravcat {

const char* to_string(Spacing spacing) { return spacing == Spacing::Log ? "log" : "linear"; }

const char* to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::Found:
      return "found";
    case ThresholdStatus::AlwaysZero:
      return "always-zero";
    case ThresholdStatus::NeverZeroInRange:
      break;
  }
  return "never-zero-in-range";
}

const char* to_string(MaximumStatus status) {
  switch (status) {
    case MaximumStatus::Interior:
      return "interior";
    case MaximumStatus::Boundary:
      return "boundary";
    case MaximumStatus::Degenerate:
      break;
  }
  return "degenerate";
}

void SweepSpec::validate() const {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min > 0.0) || !(t_min < t_max)) {
    throw std::invalid_argument("sweep needs 0 < t_min < t_max");
  }
  if (n_points < 2) throw std::invalid_argument("sweep needs at least 2 points");
}

std::vector<double> temperature_grid(const SweepSpec& spec) {
  spec.validate();
  const int n = spec.n_points;
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double last = static_cast<double>(n - 1);
  if (spec.spacing == Spacing::Log) {
    const double lo = std::log(spec.t_min);
    const double hi = std::log(spec.t_max);
    for (int i = 0; i < n; ++i) grid[i] = std::exp(lo + (hi - lo) * (i / last));
  } else {
    for (int i = 0; i < n; ++i) grid[i] = spec.t_min + (spec.t_max - spec.t_min) * (i / last);
  }
  grid.front() = spec.t_min;
  grid.back() = spec.t_max;
  return grid;
}

std::vector<CorrelationReport> sweep_serial(const SweepSpec& spec) {
  const std::vector<double> grid = temperature_grid(spec);
  std::vector<CorrelationReport> rows;
  rows.reserve(grid.size());
  for (double t : grid) rows.push_back(report(spec.params, t));
  return rows;
}

namespace {

double concurrence_at(const ModelParams& params, double t) {
  return concurrence_x(thermal_state(params, t)).value;
}

double l1_at(const ModelParams& params, double t) {
  return l1_coherence(thermal_state(params, t)).l1;
}

}  // namespace

ThresholdResult threshold_temperature(const ModelParams& params, double rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw std::invalid_argument("threshold_temperature: rel_tol must be in (0, 1e-2]");
  }
  ThresholdResult result;
  const double omega = params.omega();
  const double t_floor = 1e-6 * omega;
  if (params.delta() == 0.0 || concurrence_at(params, t_floor) <= 0.0) {
    result.status = ThresholdStatus::AlwaysZero;
    return result;
  }

  const double t_ceiling = 1e12 * omega;
  double upper = omega;
  while (concurrence_at(params, upper) > 0.0) {
    upper *= 4.0;
    if (upper > t_ceiling) {
      result.status = ThresholdStatus::NeverZeroInRange;
      result.t_lo = upper / 4.0;
      return result;
    }
  }

  // Last positive grid point of the pre-scan; its right neighbour is zero.
  constexpr int kPrescan = 64;
  const SweepSpec prescan{params, t_floor, upper, kPrescan, Spacing::Log};
  const std::vector<double> grid = temperature_grid(prescan);
  int last_positive = 0;
  for (int i = 0; i < kPrescan; ++i) {
    if (concurrence_at(params, grid[i]) > 0.0) last_positive = i;
  }
  double lo = grid[last_positive];
  double hi = grid[last_positive + 1];

  result.iterations = numerics::bisect_predicate(
      [&](double t) { return concurrence_at(params, t) > 0.0; }, lo, hi, rel_tol);
  result.t_lo = lo;
  result.t_hi = hi;
  result.t_th = 0.5 * (lo + hi);
  result.status = ThresholdStatus::Found;
  return result;
}

CoherenceMaximum coherence_maximum(const ModelParams& params) {
  CoherenceMaximum result;
  const double omega = params.omega();
  if (omega == 0.0) return result;

  constexpr int kScan = 200;
  const SweepSpec scan{params, 1e-4 * omega, 1e4 * omega, kScan, Spacing::Log};
  const std::vector<double> grid = temperature_grid(scan);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = l1_at(params, grid[i]);

  const auto it = std::max_element(values.begin(), values.end());
  const auto k = static_cast<int>(it - values.begin());
  result.coarse_max = *it;
  result.t_star = grid[k];
  result.l1_max = *it;
  if (*it <= 0.0) {
    result.status = MaximumStatus::Degenerate;
    return result;
  }
  if (k == 0 || k == kScan - 1) {
    result.status = MaximumStatus::Boundary;
    return result;
  }

  // In log T the relative tolerance on T becomes an absolute one.
  constexpr double kRelTol = 1e-8;
  const auto refined = numerics::golden_section_maximize(
      [&](double log_t) { return l1_at(params, std::exp(log_t)); }, std::log(grid[k - 1]),
      std::log(grid[k + 1]), kRelTol);
  if (refined.fx > result.l1_max) {
    result.t_star = std::exp(refined.x);
    result.l1_max = refined.fx;
  }
  result.status = MaximumStatus::Interior;
  return result;
}

}  // namespace gravcat
