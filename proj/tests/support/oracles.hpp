#pragma once

// Reference computations that share no code with the library. Kept naive on
// purpose: direct sums, permutation determinants, dense constraint matrices.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Coeffs = std::vector<cplx>;

inline Coeffs convolve(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i <= k; ++i)
      if (i < a.size() && k - i < b.size()) out[k] += a[i] * b[k - i];
  return out;
}

inline cplx horner(const Coeffs& c, cplx z) {
  cplx acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

inline double max_diff(const Coeffs& a, const Coeffs& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const cplx x = k < a.size() ? a[k] : cplx{};
    const cplx y = k < b.size() ? b[k] : cplx{};
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

inline double max_abs(const Coeffs& a) {
  double m = 0.0;
  for (auto c : a) m = std::max(m, std::abs(c));
  return m;
}

// Leibniz sum over all permutations.
inline cplx leibniz_det(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return 1.0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  cplx total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    cplx term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

using CoeffMatrix = std::vector<std::vector<Coeffs>>;

// Determinant coefficients: Leibniz values at N-th roots of unity, then an
// inverse DFT. N exceeds the degree bound so there is no aliasing.
inline Coeffs dft_det(const CoeffMatrix& a) {
  const std::size_t n = a.size();
  std::size_t deg = 0;
  for (const auto& row : a) {
    std::size_t rmax = 0;
    for (const auto& e : row) rmax = std::max(rmax, e.size());
    deg += rmax;
  }
  const std::size_t N = std::max<std::size_t>(deg + 1, 1);
  std::vector<cplx> vals(N);
  for (std::size_t k = 0; k < N; ++k) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N));
    Eigen::MatrixXcd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = horner(a[i][j], w);
    vals[k] = leibniz_det(m);
  }
  Coeffs c(N);
  for (std::size_t t = 0; t < N; ++t) {
    cplx acc{};
    for (std::size_t k = 0; k < N; ++k)
      acc += vals[k] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * t) / static_cast<double>(N));
    c[t] = acc / static_cast<double>(N);
  }
  return c;
}

// Zero multisets as flat lists with repeats.
using Multiset = std::vector<cplx>;

inline bool contains(Multiset big, const Multiset& small, double tol = 1e-7) {
  for (auto z : small) {
    auto it = std::find_if(big.begin(), big.end(), [&](cplx w) { return std::abs(w - z) <= tol; });
    if (it == big.end()) return false;
    big.erase(it);
  }
  return true;
}

inline Multiset intersection(const Multiset& a, Multiset b, double tol = 1e-7) {
  Multiset out;
  for (auto z : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](cplx w) { return std::abs(w - z) <= tol; });
    if (it != b.end()) {
      out.push_back(z);
      b.erase(it);
    }
  }
  return out;
}

// prod (a - z) / (1 - conj(a) z), constant 1, evaluated directly.
inline cplx blaschke(const Multiset& zeros, cplx z) {
  cplx v = 1.0;
  for (auto a : zeros) v *= (a - z) / (1.0 - std::conj(a) * z);
  return v;
}

// Taylor series of a Blaschke product by repeated division of power series.
inline Coeffs blaschke_taylor(const Multiset& zeros, std::size_t terms) {
  Coeffs s(terms);
  if (terms) s[0] = 1.0;
  for (auto a : zeros) {
    // multiply by (a - z), then divide by (1 - conj(a) z)
    Coeffs t(terms);
    for (std::size_t k = 0; k < terms; ++k) t[k] = a * s[k] - (k ? s[k - 1] : cplx{});
    for (std::size_t k = 1; k < terms; ++k) t[k] += std::conj(a) * t[k - 1];
    s = t;
  }
  return s;
}

// Rows of the linear conditions f^{(r)}(a) / r! = 0 on coefficient vectors of
// length n, one per zero counted with multiplicity.
inline Eigen::MatrixXcd taylor_rows(const Multiset& zeros, std::size_t n) {
  std::vector<std::pair<cplx, int>> grouped;
  for (auto z : zeros) {
    auto it = std::find_if(grouped.begin(), grouped.end(), [&](auto& g) { return std::abs(g.first - z) <= 1e-7; });
    if (it == grouped.end()) grouped.push_back({z, 1});
    else ++it->second;
  }
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(zeros.size()), static_cast<Eigen::Index>(n));
  rows.setZero();
  Eigen::Index r = 0;
  for (auto [a, m] : grouped)
    for (int order = 0; order < m; ++order, ++r)
      for (std::size_t t = static_cast<std::size_t>(order); t < n; ++t) {
        double binom = 1.0;
        for (int i = 0; i < order; ++i) binom = binom * static_cast<double>(t - static_cast<std::size_t>(i)) / (i + 1);
        cplx pw = 1.0;
        for (std::size_t e = static_cast<std::size_t>(order); e < t; ++e) pw *= a;
        rows(r, static_cast<Eigen::Index>(t)) = binom * pw;
      }
  return rows;
}

// Null space basis of a dense constraint matrix via full-pivot LU.
inline Eigen::MatrixXcd kernel(const Eigen::MatrixXcd& rows, Eigen::Index cols) {
  if (rows.rows() == 0) return Eigen::MatrixXcd::Identity(cols, cols);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(rows);
  lu.setThreshold(1e-10);
  return lu.kernel();
}

// Section of theta_1 H^2 e_1 + ... + theta_d H^2 e_d, each theta given by its
// zeros; an empty optional component is {0}.
struct Component {
  bool zero = false;
  Multiset zeros;
};

inline Eigen::MatrixXcd diagonal_section(const std::vector<Component>& comps, std::size_t n) {
  const auto d = comps.size();
  std::vector<Eigen::MatrixXcd> blocks;
  Eigen::Index total = 0;
  for (const auto& c : comps) {
    blocks.push_back(c.zero ? Eigen::MatrixXcd(static_cast<Eigen::Index>(n), 0)
                            : kernel(taylor_rows(c.zeros, n), static_cast<Eigen::Index>(n)));
    total += blocks.back().cols();
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d * n), total);
  Eigen::Index col = 0;
  for (std::size_t j = 0; j < d; ++j) {
    out.block(static_cast<Eigen::Index>(j * n), col, static_cast<Eigen::Index>(n), blocks[j].cols()) = blocks[j];
    col += blocks[j].cols();
  }
  return out;
}

// Distance of each column of u from the column span of v, by least squares.
inline double span_residual(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.cols() == 0) return 0.0;
  if (v.cols() == 0) return u.colwise().norm().maxCoeff();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(v);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < u.cols(); ++i) {
    const Eigen::VectorXcd x = qr.solve(u.col(i));
    worst = std::max(worst, (v * x - u.col(i)).norm() / std::max(1.0, u.col(i).norm()));
  }
  return worst;
}

inline Eigen::Index numeric_rank(const Eigen::MatrixXcd& m, double rel = 1e-10) {
  if (m.size() == 0) return 0;
  Eigen::FullPivHouseholderQR<Eigen::MatrixXcd> qr(m);
  qr.setThreshold(rel);
  return qr.rank();
}

// Least-squares Bezout residual: min || sum h_j phi_j - g || over deg h_j <= degree,
// with all series truncated to `terms` coefficients. Normal equations on Householder QR.
inline double bezout_residual(const std::vector<Multiset>& list, const Multiset& gcd, int degree, std::size_t terms) {
  const auto cols = static_cast<Eigen::Index>(list.size() * static_cast<std::size_t>(degree + 1));
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(terms), cols);
  Eigen::Index c = 0;
  for (const auto& phi : list) {
    const Coeffs s = blaschke_taylor(phi, terms);
    for (int k = 0; k <= degree; ++k, ++c)
      for (std::size_t t = static_cast<std::size_t>(k); t < terms; ++t) a(static_cast<Eigen::Index>(t), c) = s[t - static_cast<std::size_t>(k)];
  }
  const Coeffs g = blaschke_taylor(gcd, terms);
  Eigen::VectorXcd b(static_cast<Eigen::Index>(terms));
  for (std::size_t t = 0; t < terms; ++t) b(static_cast<Eigen::Index>(t)) = g[t];
  const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
  return (a * x - b).norm();
}

}  // namespace oracle
