#include <exception>

#include "gravcat/analysis.hpp"

namespace gravcat {

std::vector<CorrelationReport> sweep(const SweepSpec& spec) {
  const std::vector<double> grid = temperature_grid(spec);
  const auto n = static_cast<long>(grid.size());
  std::vector<CorrelationReport> rows(grid.size());

  // Exceptions must not cross the parallel region; keep the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = report(spec.params, grid[i]);
    } catch (...) {
#pragma omp critical(gravcat_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace gravcat
