#include "gravcat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gravcat::oracle {

using Pauli = std::array<std::array<double, 2>, 2>;

namespace {

constexpr Pauli kIdentity2{{{1.0, 0.0}, {0.0, 1.0}}};
constexpr Pauli kSigmaX{{{0.0, 1.0}, {1.0, 0.0}}};
constexpr Pauli kSigmaZ{{{1.0, 0.0}, {0.0, -1.0}}};
// i * sigma_y, real; sigma_y (x) sigma_y = -(i sy) (x) (i sy).
constexpr Pauli kISigmaY{{{0.0, 1.0}, {-1.0, 0.0}}};

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-14;
constexpr double kSymmetryTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;

double off_diagonal_norm(const Matrix4& m) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (p != q) s += m(p, q) * m(p, q);
  return std::sqrt(s);
}

double frobenius_norm(const Matrix4& m) {
  double s = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) s += m(p, q) * m(p, q);
  return std::sqrt(s);
}

// Rotation in the (p, q) plane that zeroes a(p, q); a <- J^T a J, v <- v J.
void jacobi_rotate(Matrix4& a, Matrix4& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int r = 0; r < 4; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = arp - s * (arq + tau * arp);
    a(p, r) = a(r, p);
    a(r, q) = arq + s * (arp - tau * arq);
    a(q, r) = a(r, q);
  }
  for (int r = 0; r < 4; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = vrp - s * (vrq + tau * vrp);
    v(r, q) = vrq + s * (vrp - tau * vrq);
  }
}

// V f(D) V^T
Matrix4 spectral_map(const SymmetricEigen& e, const std::array<double, 4>& f) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += e.vectors(r, k) * f[k] * e.vectors(c, k);
      out(r, c) = s;
    }
  return out;
}

}  // namespace

Matrix4 Matrix4::identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

Matrix4 Matrix4::diagonal(const std::array<double, 4>& d) {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

Matrix4 Matrix4::transposed() const {
  Matrix4 t;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix4::trace() const { return a_[0][0] + a_[1][1] + a_[2][2] + a_[3][3]; }

double Matrix4::max_abs() const {
  double m = 0.0;
  for (const auto& row : a_)
    for (double x : row) m = std::max(m, std::abs(x));
  return m;
}

bool Matrix4::is_symmetric(double tol) const {
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c)
      if (std::abs(a_[r][c] - a_[c][r]) > tol) return false;
  return true;
}

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += x(r, k) * y(k, c);
      out(r, c) = s;
    }
  return out;
}

Matrix4 operator+(const Matrix4& x, const Matrix4& y) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = x(r, c) + y(r, c);
  return out;
}

Matrix4 operator-(const Matrix4& x, const Matrix4& y) { return x + (-1.0) * y; }

Matrix4 operator*(double s, const Matrix4& x) {
  Matrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = s * x(r, c);
  return out;
}

Matrix4 kron(const Pauli& a, const Pauli& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a[i][j] * b[k][l];
  return out;
}

Matrix4 sigma_yy() { return -1.0 * kron(kISigmaY, kISigmaY); }

Matrix4 build_hamiltonian(const ModelParams& params) {
  const Matrix4 zeeman = kron(kSigmaZ, kIdentity2) + kron(kIdentity2, kSigmaZ);
  return (params.w() / 2.0) * zeeman - params.delta() * kron(kSigmaX, kSigmaX);
}

SymmetricEigen sym_eigen(const Matrix4& m) {
  if (!m.is_symmetric(kSymmetryTol * std::max(1.0, m.max_abs()))) {
    throw std::invalid_argument("sym_eigen: matrix is not symmetric");
  }
  Matrix4 a = m;
  Matrix4 v = Matrix4::identity();
  const double target = kOffDiagonalTol * frobenius_norm(m);

  int sweep = 0;
  while (sweep < kMaxSweeps && off_diagonal_norm(a) > target) {
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    ++sweep;
  }

  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen e;
  e.sweeps = sweep;
  for (int k = 0; k < 4; ++k) {
    e.values[k] = a(order[k], order[k]);
    for (int r = 0; r < 4; ++r) e.vectors(r, k) = v(r, order[k]);
  }
  return e;
}

Matrix4 gibbs_state(const Matrix4& h, double temperature) {
  if (!(temperature > 0.0)) throw std::invalid_argument("gibbs_state: T must be positive");
  const SymmetricEigen e = sym_eigen(h);
  const double lowest = e.values[0];
  std::array<double, 4> weights{};
  double z = 0.0;
  for (int k = 0; k < 4; ++k) {
    weights[k] = std::exp(-(e.values[k] - lowest) / temperature);
    z += weights[k];
  }
  for (double& x : weights) x /= z;
  return spectral_map(e, weights);
}

Matrix4 psd_sqrt(const Matrix4& rho) {
  const SymmetricEigen e = sym_eigen(rho);
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) {
    if (e.values[k] < -kNegativeEigenTol) {
      throw std::invalid_argument("psd_sqrt: matrix is not positive semidefinite");
    }
    roots[k] = std::sqrt(std::max(e.values[k], 0.0));
  }
  return spectral_map(e, roots);
}

namespace {

// R = rho Y rho Y is similar to S = sqrt(rho) Y rho Y sqrt(rho) = M^2 with the
// symmetric M = sqrt(rho) Y sqrt(rho). |eig(M)| are the square roots of the R
// eigenvalues without squaring and re-rooting small values.
std::array<double, 4> r_singular_roots(const Matrix4& rho) {
  const Matrix4 root = psd_sqrt(rho);
  Matrix4 m = root * sigma_yy() * root;
  m = 0.5 * (m + m.transposed());
  const SymmetricEigen e = sym_eigen(m);
  std::array<double, 4> s{};
  for (int k = 0; k < 4; ++k) s[k] = std::abs(e.values[k]);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

std::array<double, 4> r_eigenvalues(const Matrix4& rho) {
  std::array<double, 4> s = r_singular_roots(rho);
  for (double& x : s) x *= x;
  return s;
}

double wootters_concurrence(const Matrix4& rho) {
  const std::array<double, 4> s = r_singular_roots(rho);
  return std::max(s[0] - s[1] - s[2] - s[3], 0.0);
}

double l1_norm(const Matrix4& rho) {
  double sum = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) sum += std::abs(rho(r, c));
  return sum;
}

Matrix4 to_matrix(const ThermalState& s) {
  Matrix4 m;
  m(0, 0) = s.rho11;
  m(1, 1) = s.rho22;
  m(2, 2) = s.rho22;
  m(3, 3) = s.rho44;
  m(0, 3) = m(3, 0) = s.rho14;
  m(1, 2) = m(2, 1) = s.rho23;
  return m;
}

}  // namespace gravcat::oracle
