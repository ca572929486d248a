#pragma once

// Polynomials as finitely supported elements of H^2(D), and vectors in the
// d-fold direct sum of H^2(D) on which the shift acts componentwise.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

/// Raised for violated preconditions and malformed input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative zero threshold for coefficients: |c| <= kCoeffZeroTol * (1 + max |c_k|).
inline constexpr double kCoeffZeroTol = 1e-12;

/// Complex polynomial with ascending coefficients; coeffs()[k] multiplies z^k.
///
/// Trailing coefficients below the scale-relative zero threshold are trimmed
/// on construction, so the zero polynomial has an empty coefficient list and
/// degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs);
  Poly(std::initializer_list<cplx> coeffs);

  static Poly constant(cplx c);
  static Poly monomial(std::size_t k, cplx c = 1.0);
  /// The linear factor (z - root).
  static Poly linear(cplx root);

  const std::vector<cplx>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }

  /// Coefficient of z^k; zero past the degree.
  cplx operator[](std::size_t k) const noexcept { return k < c_.size() ? c_[k] : cplx{}; }

  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept;

  /// order-th Taylor coefficient at z, i.e. p^{(order)}(z) / order!.
  cplx taylor(cplx z, int order) const noexcept;

  Poly derivative() const;
  /// Multiply by z^k.
  Poly shifted(std::size_t k) const;
  double max_abs() const noexcept;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(cplx s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= -1.0; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, cplx s) { return a *= s; }
  friend Poly operator*(cplx s, Poly a) { return a *= s; }

 private:
  void trim();
  std::vector<cplx> c_;
};

enum class RingOp { add, sub, mul };

Poly poly_ring(const Poly& a, const Poly& b, RingOp op);

/// <f, g> = sum_k f_k conj(g_k).
cplx h2_inner(const Poly& f, const Poly& g);
double h2_norm(const Poly& f);

/// Maximum of |f| on a uniform grid of the unit circle; a lower estimate of the sup norm.
double circle_sup(const Poly& f, int grid_size = 1024);

/// Element f_1 e_1 + ... + f_d e_d of the d-fold direct sum of H^2(D).
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::size_t d) : comps_(d) {}
  explicit HVector(std::vector<Poly> comps);

  /// g e_j.
  static HVector unit(std::size_t d, std::size_t j, const Poly& g = Poly::constant(1.0));

  std::size_t dim() const noexcept { return comps_.size(); }
  const Poly& operator[](std::size_t j) const { return comps_.at(j); }
  Poly& operator[](std::size_t j) { return comps_.at(j); }
  const std::vector<Poly>& components() const noexcept { return comps_; }

  bool is_zero() const noexcept;
  int degree() const noexcept;

  HVector& operator+=(const HVector& other);
  HVector& operator*=(cplx s);
  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator*(cplx s, HVector a) { return a *= s; }
  /// Componentwise product with a scalar function g.
  friend HVector operator*(const Poly& g, const HVector& v);

 private:
  std::vector<Poly> comps_;
};

/// Multiplication by z, componentwise.
HVector shift(const HVector& v);
Poly shift(const Poly& f);

cplx h2_inner(const HVector& a, const HVector& b);
double h2_norm(const HVector& v);

}  // namespace hardy
