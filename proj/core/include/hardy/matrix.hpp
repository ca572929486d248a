#pragma once

// Matrices with polynomial entries: determinants, minors, Kronecker rank and
// the reduced matrix obtained by dividing out the entry inner GCD.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "hardy/inner.hpp"

namespace hardy {

/// Strictly increasing, 0-based index list.
using MultiIndex = std::vector<std::size_t>;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  /// Row-major nested initialization; all rows must have the same length.
  explicit PolyMatrix(const std::vector<std::vector<Poly>>& rows);

  static PolyMatrix identity(std::size_t d);
  static PolyMatrix diagonal(const std::vector<Poly>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }
  Poly& operator()(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }

  bool is_zero() const noexcept;
  int max_degree() const noexcept;
  double max_coeff() const noexcept;
  /// Row i as an element of the cols()-fold sum.
  HVector row(std::size_t i) const;
  Eigen::MatrixXcd evaluate(cplx z) const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  friend PolyMatrix operator*(cplx s, PolyMatrix m);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<MultiIndex> combinations(std::size_t n, std::size_t k);

/// Cofactor expansion along the first row; the 0x0 determinant is 1.
Poly det(const PolyMatrix& b);

/// Threshold below which every coefficient of det(b) counts as zero:
/// 1e-9 * (1 + s^k k!) with s the largest entry coefficient and k the size.
double det_zero_threshold(const PolyMatrix& b);
bool vanishes(const Poly& det_b, const PolyMatrix& b);
/// det(b) identically zero within det_zero_threshold.
bool det_vanishes(const PolyMatrix& b);

PolyMatrix minor(const PolyMatrix& a, const MultiIndex& rows, const MultiIndex& cols);
/// a with row i and column j removed.
PolyMatrix complement_minor(const PolyMatrix& a, std::size_t i, std::size_t j);

struct RankInfo {
  int rank = 0;
  /// First non-vanishing rank x rank minor in lexicographic (rows, cols) order.
  MultiIndex rows, cols;
};

RankInfo rank_info(const PolyMatrix& b);
int kronecker_rank(const PolyMatrix& b);

/// Inner part of det(b) with each simple zero polished by Newton steps on
/// z -> det b(z) evaluated through LU, which avoids the cancellation in the
/// expanded determinant coefficients.
BlaschkeProduct det_inner_part(const PolyMatrix& b);

struct ReducedMatrix {
  BlaschkeProduct entry_inner_gcd;
  PolyMatrix reduced;
  PolyMatrix original;
};

ReducedMatrix reduce(const PolyMatrix& a);

}  // namespace hardy
