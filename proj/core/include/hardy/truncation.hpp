#pragma once

// Finite sections of the d-fold sum of H^2: coefficient vectors of length
// d*n laid out component-major (index j*n + t holds the z^t coefficient of
// component j). Subspaces are stored as orthonormal column bases.

#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "hardy/subspace.hpp"

namespace hardy {

/// Relative singular value cutoff for every orthogonalization.
inline constexpr double kRankTol = 1e-10;

class TruncatedSubspace {
 public:
  TruncatedSubspace(std::size_t d, std::size_t n, Eigen::MatrixXcd basis);

  /// Orthonormal basis of the column span of `vectors` (rows d*n).
  static TruncatedSubspace span_of(std::size_t d, std::size_t n, const Eigen::MatrixXcd& vectors, double rel_tol = kRankTol);
  static TruncatedSubspace whole(std::size_t d, std::size_t n);

  std::size_t d() const noexcept { return d_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t ambient() const noexcept { return d_ * n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  const Eigen::MatrixXcd& basis() const noexcept { return basis_; }
  HVector vector(std::size_t i) const;

  /// Distance from v to the span.
  double residual(const Eigen::VectorXcd& v) const;
  /// Orthonormal basis of the orthogonal complement in the section.
  Eigen::MatrixXcd complement() const;

 private:
  std::size_t d_, n_;
  Eigen::MatrixXcd basis_;
};

Eigen::VectorXcd to_coeffs(const HVector& f, std::size_t n);
HVector from_coeffs(const Eigen::VectorXcd& v, std::size_t d, std::size_t n);

/// {F in the degree-n section : member(spec, F)} as a null space.
TruncatedSubspace truncate_membership(const SubspaceSpec& spec, std::size_t n);

enum class Verdict { equal, subset, superset, incomparable };
const char* to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::incomparable;
  /// Largest distance from a U basis vector to span(V), and vice versa.
  double u_in_v = 0.0;
  double v_in_u = 0.0;
};

Comparison compare(const TruncatedSubspace& u, const TruncatedSubspace& v, double tol);
/// Largest distance from a basis vector of u to span(v).
double inclusion_residual(const TruncatedSubspace& u, const TruncatedSubspace& v);

std::size_t codim(const TruncatedSubspace& u);

/// The same vectors viewed in a section of degree n2 >= n.
TruncatedSubspace embed(const TruncatedSubspace& u, std::size_t n2);
/// Vectors of u whose coefficients of degree >= m vanish, as a degree-m section.
TruncatedSubspace intersect_low_degree(const TruncatedSubspace& u, std::size_t m);

/// Span of z^t * row_i over all t with deg(row_i) + t < n.
TruncatedSubspace generated_basis(const PolyMatrix& a, std::size_t n);

/// Largest distance from an orthonormal basis vector of the degree-n section
/// of the spec to the span of O times the degree-2n section.
double outer_density_check(const SubspaceSpec& spec, const Poly& outer, std::size_t n);

/// JSON-friendly export: one coefficient list per basis vector.
std::vector<std::vector<cplx>> basis_vectors(const TruncatedSubspace& u);
/// Row-major complex doubles (re, im interleaved), little-endian.
void write_binary(const TruncatedSubspace& u, std::ostream& out);

}  // namespace hardy
