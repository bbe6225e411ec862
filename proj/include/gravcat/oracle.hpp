#pragma once

// Brute-force reference path: dense 4x4 matrices in the standard basis
// |00>, |01>, |10>, |11> (ordered so that index 0 carries +w on the diagonal).
// Everything here is independent of the closed forms in thermal_state and
// correlations, and exists to cross-check them.

#include <array>

#include "gravcat/model.hpp"
#include "gravcat/thermal_state.hpp"

namespace gravcat::oracle {

class Matrix4 {
 public:
  Matrix4() = default;

  static Matrix4 identity();
  static Matrix4 diagonal(const std::array<double, 4>& d);

  double& operator()(int r, int c) { return a_[r][c]; }
  double operator()(int r, int c) const { return a_[r][c]; }

  Matrix4 transposed() const;
  double trace() const;
  double max_abs() const;
  bool is_symmetric(double tol) const;

  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator+(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator-(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator*(double s, const Matrix4& x);

 private:
  std::array<std::array<double, 4>, 4> a_{};
};

/// Ascending eigenvalues; column k of `vectors` is the eigenvector of values[k].
struct SymmetricEigen {
  std::array<double, 4> values{};
  Matrix4 vectors;
  int sweeps = 0;
};

/// Pauli operators on qubit pairs.
Matrix4 kron(const std::array<std::array<double, 2>, 2>& a,
             const std::array<std::array<double, 2>, 2>& b);

/// sigma_y (x) sigma_y, which is real.
Matrix4 sigma_yy();

/// H = (w/2)(sz x I + I x sz) - delta (sx x sx), assembled from Kronecker products.
Matrix4 build_hamiltonian(const ModelParams& params);

/// Cyclic Jacobi. Throws std::invalid_argument if m is not symmetric within
/// 1e-12 (relative to its largest entry).
SymmetricEigen sym_eigen(const Matrix4& m);

/// exp(-H/T)/Z via the eigendecomposition, shifted by the lowest eigenvalue.
/// Throws std::invalid_argument for T <= 0.
Matrix4 gibbs_state(const Matrix4& h, double temperature);

/// Square root of a PSD matrix. Throws std::invalid_argument if an eigenvalue
/// is below -1e-10; small negatives are clamped to zero.
Matrix4 psd_sqrt(const Matrix4& rho);

/// Eigenvalues of R = rho (sy x sy) rho* (sy x sy), descending.
std::array<double, 4> r_eigenvalues(const Matrix4& rho);

/// Wootters concurrence max{s1 - s2 - s3 - s4, 0}, s_i = sqrt of the R
/// eigenvalues, descending.
double wootters_concurrence(const Matrix4& rho);

/// Sum of |off-diagonal| entries.
double l1_norm(const Matrix4& rho);

/// Embeds the five closed-form X-state elements into a dense matrix.
Matrix4 to_matrix(const ThermalState& state);

}  // namespace gravcat::oracle
