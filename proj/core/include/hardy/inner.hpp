#pragma once

// Finite Blaschke products: the rational inner functions.
//
// A BlaschkeProduct is c * prod_i ((a_i - z) / (1 - conj(a_i) z))^{m_i} with
// |c| = 1 and |a_i| < 1. Divisibility and GCDs only look at the zero multisets;
// the unimodular constant is carried along but never constrains divisibility.

#include <span>
#include <vector>

#include "hardy/series.hpp"

namespace hardy {

/// Roots with modulus above 1 - kBoundaryBand are classified outside the disc.
inline constexpr double kBoundaryBand = 1e-8;
/// Zeros closer than this are identified (root clustering, divisibility, GCD).
inline constexpr double kZeroMatchRadius = 1e-7;

struct Zero {
  cplx point;
  int multiplicity = 1;
};

class BlaschkeProduct {
 public:
  /// The constant inner function 1.
  BlaschkeProduct() = default;
  /// Validates |c| = 1 and |a_i| <= 1 - kBoundaryBand; merges zeros within kZeroMatchRadius.
  BlaschkeProduct(cplx constant, std::vector<Zero> zeros);

  /// The single factor (a - z) / (1 - conj(a) z).
  static BlaschkeProduct factor(cplx a, int multiplicity = 1);

  cplx constant() const noexcept { return c_; }
  const std::vector<Zero>& zeros() const noexcept { return zeros_; }
  /// Number of zeros counted with multiplicity.
  int zero_count() const noexcept;
  bool is_constant() const noexcept { return zeros_.empty(); }

  cplx operator()(cplx z) const;

  /// c * prod (a_i - z)^{m_i}.
  Poly numerator() const;
  /// prod (1 - conj(a_i) z)^{m_i}; outer, no zeros in the closed disc.
  Poly denominator() const;
  /// prod (z - a_i)^{m_i}, the monic polynomial sharing the zeros.
  Poly zero_polynomial() const;

  BlaschkeProduct operator*(const BlaschkeProduct& other) const;

 private:
  void canonicalize();
  cplx c_{1.0, 0.0};
  std::vector<Zero> zeros_;
};

cplx blaschke_eval(const BlaschkeProduct& phi, cplx z);

/// All roots of p with multiplicities (companion eigenvalues, clustered).
std::vector<Zero> poly_roots(const Poly& p);

struct Factorization {
  BlaschkeProduct inner;
  Poly outer;
};

/// p = inner * outer with outer(0) > 0 and no roots of outer in the open disc.
Factorization inner_outer_factor(const Poly& p);
BlaschkeProduct inner_part(const Poly& p);

/// True when phi's zero multiset is contained in psi's.
bool divides(const BlaschkeProduct& phi, const BlaschkeProduct& psi);

/// Zeros: intersection of the zero multisets. The constant makes the result
/// prod ((z - a) / (1 - conj(a) z)), so gcd(z, z^2) is z itself.
BlaschkeProduct gcd_inner(std::span<const BlaschkeProduct> list);

/// psi / phi for phi | psi; the constant is psi's constant over phi's.
BlaschkeProduct blaschke_quotient(const BlaschkeProduct& psi, const BlaschkeProduct& phi);

/// True when f vanishes to the required order at every zero of phi, judged by
/// Taylor coefficients against tol * (1 + ||f||).
bool inner_divides_poly(const BlaschkeProduct& phi, const Poly& f, double tol = 1e-8);

/// f / phi as a polynomial of the same degree.
Poly divide_out(const Poly& f, const BlaschkeProduct& phi);

/// Removes one zero (largest modulus, then largest argument) from phi.
BlaschkeProduct proper_divisor(const BlaschkeProduct& phi);

struct CoronaResult {
  std::vector<Poly> coefficients;
  double residual = 0.0;
};

/// Least-squares h_j of degree <= degree minimizing ||sum h_j phi_j - gcd(phi_j)||_{H^2}.
CoronaResult corona_approx(std::span<const BlaschkeProduct> list, int degree);

/// Power series of phi truncated to `terms` coefficients.
std::vector<cplx> blaschke_series(const BlaschkeProduct& phi, std::size_t terms);

}  // namespace hardy
