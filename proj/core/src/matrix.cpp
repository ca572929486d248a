#include "hardy/matrix.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace hardy {

PolyMatrix::PolyMatrix(const std::vector<std::vector<Poly>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("PolyMatrix: ragged rows");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t d) {
  PolyMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = Poly::constant(1.0);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& diag) {
  PolyMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool PolyMatrix::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

int PolyMatrix::max_degree() const noexcept {
  int d = -1;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

double PolyMatrix::max_coeff() const noexcept {
  double s = 0.0;
  for (const auto& p : e_) s = std::max(s, p.max_abs());
  return s;
}

HVector PolyMatrix::row(std::size_t i) const {
  if (i >= rows_) throw Error("PolyMatrix::row: index out of range");
  return HVector(std::vector<Poly>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                   e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Eigen::MatrixXcd PolyMatrix::evaluate(cplx z) const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j)(z);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw Error("PolyMatrix: shape mismatch in product");
  PolyMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Poly acc;
      for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * other(k, j);
      out(i, j) = acc;
    }
  return out;
}

PolyMatrix operator*(cplx s, PolyMatrix m) {
  for (auto& p : m.e_) p *= s;
  return m;
}

std::vector<MultiIndex> combinations(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n) return out;
  MultiIndex idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Poly det(const PolyMatrix& b) {
  if (!b.is_square()) throw Error("det: matrix is not square");
  const std::size_t k = b.rows();
  if (k == 0) return Poly::constant(1.0);
  if (k == 1) return b(0, 0);
  if (k == 2) return b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  Poly acc;
  for (std::size_t j = 0; j < k; ++j) {
    if (b(0, j).is_zero()) continue;
    Poly term = b(0, j) * det(complement_minor(b, 0, j));
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

double det_zero_threshold(const PolyMatrix& b) {
  const std::size_t k = b.rows();
  double fact = 1.0;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  return 1e-9 * (1.0 + std::pow(b.max_coeff(), static_cast<double>(k)) * fact);
}

bool vanishes(const Poly& det_b, const PolyMatrix& b) { return det_b.max_abs() <= det_zero_threshold(b); }

bool det_vanishes(const PolyMatrix& b) { return vanishes(det(b), b); }

PolyMatrix minor(const PolyMatrix& a, const MultiIndex& rows, const MultiIndex& cols) {
  if (rows.size() != cols.size()) throw Error("minor: row and column index lengths differ");
  auto check = [](const MultiIndex& idx, std::size_t bound) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= bound) throw Error("minor: index out of range");
      if (i > 0 && idx[i] <= idx[i - 1]) throw Error("minor: indices must be strictly increasing");
    }
  };
  check(rows, a.rows());
  check(cols, a.cols());
  PolyMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = a(rows[i], cols[j]);
  return m;
}

PolyMatrix complement_minor(const PolyMatrix& a, std::size_t i, std::size_t j) {
  PolyMatrix m(a.rows() - 1, a.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < a.rows(); ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < a.cols(); ++c) {
      if (c == j) continue;
      m(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return m;
}

RankInfo rank_info(const PolyMatrix& b) {
  for (std::size_t k = std::min(b.rows(), b.cols()); k > 0; --k) {
    const auto rs = combinations(b.rows(), k);
    const auto cs = combinations(b.cols(), k);
    for (const auto& s : rs)
      for (const auto& j : cs)
        if (!det_vanishes(minor(b, s, j))) return {static_cast<int>(k), s, j};
  }
  return {};
}

int kronecker_rank(const PolyMatrix& b) { return rank_info(b).rank; }

ReducedMatrix reduce(const PolyMatrix& a) {
  if (a.is_zero()) throw Error("φ_A undefined for zero matrix");
  std::vector<BlaschkeProduct> parts;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) parts.push_back(inner_part(a(i, j)));
  ReducedMatrix out{gcd_inner(parts), PolyMatrix(a.rows(), a.cols()), a};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.reduced(i, j) = divide_out(a(i, j), out.entry_inner_gcd);
  return out;
}

namespace {

double conditioning(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  return sv(0) > 0 ? sv(sv.size() - 1) / sv(0) : 0.0;
}

// d/dz log det b(z) = trace(b(z)^{-1} b'(z)); steps that move far or fail to
// shrink the smallest singular value are rejected.
cplx polish_zero(const PolyMatrix& b, const PolyMatrix& db, cplx start) {
  cplx z = start;
  double best = conditioning(b.evaluate(z));
  for (int it = 0; it < 5; ++it) {
    const Eigen::MatrixXcd m = b.evaluate(z);
    const cplx tr = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).solve(db.evaluate(z)).trace();
    if (!std::isfinite(tr.real()) || !std::isfinite(tr.imag()) || tr == cplx{}) break;
    const cplx next = z - 1.0 / tr;
    if (std::abs(next - start) > 1e-6 || std::abs(next) >= 1.0 - kBoundaryBand) break;
    const double c = conditioning(b.evaluate(next));
    if (c >= best) break;
    z = next;
    best = c;
  }
  return z;
}

}  // namespace

BlaschkeProduct det_inner_part(const PolyMatrix& b) {
  const BlaschkeProduct raw = inner_part(det(b));
  if (raw.is_constant() || b.rows() < 2) return raw;
  PolyMatrix db(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) db(i, j) = b(i, j).derivative();
  std::vector<Zero> zeros = raw.zeros();
  for (auto& z : zeros)
    if (z.multiplicity == 1) z.point = polish_zero(b, db, z.point);
  return {raw.constant(), std::move(zeros)};
}

}  // namespace hardy
