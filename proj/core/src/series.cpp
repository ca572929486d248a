#include "hardy/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hardy {

Poly::Poly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(cplx c) { return Poly(std::vector<cplx>{c}); }

Poly Poly::monomial(std::size_t k, cplx c) {
  std::vector<cplx> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(cplx root) { return Poly({-root, 1.0}); }

void Poly::trim() {
  double scale = 0.0;
  for (const auto& c : c_) scale = std::max(scale, std::abs(c));
  const double tol = kCoeffZeroTol * (1.0 + scale);
  while (!c_.empty() && std::abs(c_.back()) <= tol) c_.pop_back();
}

cplx Poly::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

cplx Poly::taylor(cplx z, int order) const noexcept {
  // Repeated synthetic division by (w - z): the remainders are the Taylor
  // coefficients at z in increasing order.
  std::vector<cplx> work = c_;
  for (int r = 0; r <= order; ++r) {
    if (work.empty()) return {};
    cplx acc{};
    std::vector<cplx> quot(work.size() > 1 ? work.size() - 1 : 0);
    for (std::size_t i = work.size(); i-- > 0;) {
      acc = acc * z + work[i];
      if (i > 0) quot[i - 1] = acc;
    }
    if (r == order) return acc;
    work = std::move(quot);
  }
  return {};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<cplx> v(k, cplx{});
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

double Poly::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly poly_ring(const Poly& a, const Poly& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
  }
  return {};
}

cplx h2_inner(const Poly& f, const Poly& g) {
  cplx acc{};
  const std::size_t n = std::min(f.size(), g.size());
  for (std::size_t k = 0; k < n; ++k) acc += f[k] * std::conj(g[k]);
  return acc;
}

double h2_norm(const Poly& f) {
  double acc = 0.0;
  for (const auto& c : f.coeffs()) acc += std::norm(c);
  return std::sqrt(acc);
}

double circle_sup(const Poly& f, int grid_size) {
  if (grid_size < 1) throw Error("circle_sup: grid size must be positive");
  double best = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid_size;
    best = std::max(best, std::abs(f(std::polar(1.0, theta))));
  }
  return best;
}

HVector::HVector(std::vector<Poly> comps) : comps_(std::move(comps)) {}

HVector HVector::unit(std::size_t d, std::size_t j, const Poly& g) {
  if (j >= d) throw Error("HVector::unit: index out of range");
  HVector v(d);
  v.comps_[j] = g;
  return v;
}

bool HVector::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const Poly& p) { return p.is_zero(); });
}

int HVector::degree() const noexcept {
  int d = -1;
  for (const auto& p : comps_) d = std::max(d, p.degree());
  return d;
}

HVector& HVector::operator+=(const HVector& other) {
  if (other.dim() != dim()) throw Error("HVector: dimension mismatch");
  for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += other.comps_[j];
  return *this;
}

HVector& HVector::operator*=(cplx s) {
  for (auto& p : comps_) p *= s;
  return *this;
}

HVector operator*(const Poly& g, const HVector& v) {
  HVector out(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) out[j] = g * v[j];
  return out;
}

Poly shift(const Poly& f) { return f.shifted(1); }

HVector shift(const HVector& v) {
  HVector out(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) out[j] = v[j].shifted(1);
  return out;
}

cplx h2_inner(const HVector& a, const HVector& b) {
  if (a.dim() != b.dim()) throw Error("h2_inner: dimension mismatch");
  cplx acc{};
  for (std::size_t j = 0; j < a.dim(); ++j) acc += h2_inner(a[j], b[j]);
  return acc;
}

double h2_norm(const HVector& v) {
  double acc = 0.0;
  for (const auto& p : v.components()) acc += std::norm(h2_norm(p));
  return std::sqrt(acc);
}

}  // namespace hardy
