#include "hardy/inner.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {
namespace {

std::vector<cplx> deflate(const std::vector<cplx>& c, cplx a) {
  if (c.size() <= 1) return {};
  std::vector<cplx> q(c.size() - 1);
  cplx acc{};
  for (std::size_t i = c.size(); i-- > 1;) {
    acc = acc * a + c[i];
    q[i - 1] = acc;
  }
  return q;
}

bool zero_order_less(const Zero& a, const Zero& b) {
  const double ma = std::abs(a.point), mb = std::abs(b.point);
  if (ma != mb) return ma < mb;
  return std::arg(a.point) < std::arg(b.point);
}

const Zero* find_match(const std::vector<Zero>& zeros, cplx z) {
  for (const auto& w : zeros)
    if (std::abs(w.point - z) <= kZeroMatchRadius) return &w;
  return nullptr;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(cplx constant, std::vector<Zero> zeros) : c_(constant), zeros_(std::move(zeros)) {
  canonicalize();
}

BlaschkeProduct BlaschkeProduct::factor(cplx a, int multiplicity) { return {1.0, {{a, multiplicity}}}; }

void BlaschkeProduct::canonicalize() {
  const double m = std::abs(c_);
  if (std::abs(m - 1.0) > 1e-9) throw Error("Blaschke constant must be unimodular");
  c_ /= m;
  for (const auto& z : zeros_) {
    if (z.multiplicity < 1) throw Error("Blaschke zero multiplicity must be positive");
    if (std::abs(z.point) > 1.0 - kBoundaryBand) throw Error("Blaschke zero must lie inside the unit disc");
  }
  std::vector<Zero> merged;
  for (const auto& z : zeros_) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Zero& w) { return std::abs(w.point - z.point) <= kZeroMatchRadius; });
    if (it == merged.end()) {
      merged.push_back(z);
    } else {
      const double total = it->multiplicity + z.multiplicity;
      it->point = (it->point * static_cast<double>(it->multiplicity) + z.point * static_cast<double>(z.multiplicity)) / total;
      it->multiplicity += z.multiplicity;
    }
  }
  std::sort(merged.begin(), merged.end(), zero_order_less);
  zeros_ = std::move(merged);
}

int BlaschkeProduct::zero_count() const noexcept {
  int n = 0;
  for (const auto& z : zeros_) n += z.multiplicity;
  return n;
}

cplx BlaschkeProduct::operator()(cplx z) const {
  cplx v = c_;
  for (const auto& w : zeros_) {
    const cplx f = (w.point - z) / (1.0 - std::conj(w.point) * z);
    for (int k = 0; k < w.multiplicity; ++k) v *= f;
  }
  return v;
}

Poly BlaschkeProduct::numerator() const {
  Poly p = Poly::constant(c_);
  for (const auto& w : zeros_)
    for (int k = 0; k < w.multiplicity; ++k) p = p * Poly({w.point, -1.0});
  return p;
}

Poly BlaschkeProduct::denominator() const {
  Poly p = Poly::constant(1.0);
  for (const auto& w : zeros_)
    for (int k = 0; k < w.multiplicity; ++k) p = p * Poly({1.0, -std::conj(w.point)});
  return p;
}

Poly BlaschkeProduct::zero_polynomial() const {
  Poly p = Poly::constant(1.0);
  for (const auto& w : zeros_)
    for (int k = 0; k < w.multiplicity; ++k) p = p * Poly::linear(w.point);
  return p;
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& other) const {
  std::vector<Zero> z = zeros_;
  z.insert(z.end(), other.zeros_.begin(), other.zeros_.end());
  return {c_ * other.c_, std::move(z)};
}

cplx blaschke_eval(const BlaschkeProduct& phi, cplx z) {
  if (std::abs(z) > 1.0 + 1e-9) throw Error("blaschke_eval: point outside the closed disc");
  return phi(z);
}

Factorization inner_outer_factor(const Poly& p) {
  if (p.is_zero()) throw Error("cannot factor zero");
  std::vector<Zero> inside;
  for (const auto& z : poly_roots(p))
    if (std::abs(z.point) < 1.0 - kBoundaryBand) inside.push_back(z);

  // p = prod (z - a) * q and (z - a) = -b_a(z) (1 - conj(a) z).
  std::vector<cplx> q = p.coeffs();
  int count = 0;
  for (const auto& z : inside)
    for (int k = 0; k < z.multiplicity; ++k) {
      q = deflate(q, z.point);
      ++count;
    }
  Poly outer(std::move(q));
  for (const auto& z : inside)
    for (int k = 0; k < z.multiplicity; ++k) outer = outer * Poly({1.0, -std::conj(z.point)});
  if (count % 2 == 1) outer *= -1.0;

  const cplx at0 = outer[0];
  const cplx phase = at0 == cplx{} ? cplx{1.0} : at0 / std::abs(at0);
  outer *= std::conj(phase);
  return {BlaschkeProduct(phase, std::move(inside)), std::move(outer)};
}

BlaschkeProduct inner_part(const Poly& p) { return inner_outer_factor(p).inner; }

bool divides(const BlaschkeProduct& phi, const BlaschkeProduct& psi) {
  for (const auto& z : phi.zeros()) {
    const Zero* m = find_match(psi.zeros(), z.point);
    if (m == nullptr || m->multiplicity < z.multiplicity) return false;
  }
  return true;
}

BlaschkeProduct gcd_inner(std::span<const BlaschkeProduct> list) {
  if (list.empty()) throw Error("gcd_inner: empty list");
  std::vector<Zero> common = list.front().zeros();
  for (const auto& phi : list.subspan(1)) {
    std::vector<Zero> next;
    for (const auto& z : common) {
      if (const Zero* m = find_match(phi.zeros(), z.point)) next.push_back({z.point, std::min(z.multiplicity, m->multiplicity)});
    }
    common = std::move(next);
  }
  // Constant chosen so the result is prod ((z - a) / (1 - conj(a) z)).
  int count = 0;
  for (const auto& z : common) count += z.multiplicity;
  return {count % 2 ? -1.0 : 1.0, std::move(common)};
}

BlaschkeProduct blaschke_quotient(const BlaschkeProduct& psi, const BlaschkeProduct& phi) {
  if (!divides(phi, psi)) throw Error("inner factor does not divide");
  std::vector<Zero> rest;
  for (const auto& z : psi.zeros()) {
    int m = z.multiplicity;
    if (const Zero* w = find_match(phi.zeros(), z.point)) m -= w->multiplicity;
    if (m > 0) rest.push_back({z.point, m});
  }
  return {psi.constant() / phi.constant(), std::move(rest)};
}

bool inner_divides_poly(const BlaschkeProduct& phi, const Poly& f, double tol) {
  if (f.is_zero()) return true;
  const double bound = tol * (1.0 + h2_norm(f));
  for (const auto& z : phi.zeros())
    for (int r = 0; r < z.multiplicity; ++r)
      if (std::abs(f.taylor(z.point, r)) > bound) return false;
  return true;
}

Poly divide_out(const Poly& f, const BlaschkeProduct& phi) {
  if (f.is_zero()) return {};
  if (!inner_divides_poly(phi, f)) throw Error("inner factor does not divide");
  std::vector<cplx> q = f.coeffs();
  int count = 0;
  for (const auto& z : phi.zeros())
    for (int k = 0; k < z.multiplicity; ++k) {
      q = deflate(q, z.point);
      ++count;
    }
  Poly out = Poly(std::move(q)) * phi.denominator();
  out *= (count % 2 == 1 ? -1.0 : 1.0) / phi.constant();
  return out;
}

BlaschkeProduct proper_divisor(const BlaschkeProduct& phi) {
  if (phi.zero_count() < 2) throw Error("codimension below two");
  std::vector<Zero> zeros = phi.zeros();
  auto pick = std::max_element(zeros.begin(), zeros.end(), zero_order_less);
  if (--pick->multiplicity == 0) zeros.erase(pick);
  return {phi.constant(), std::move(zeros)};
}

std::vector<cplx> blaschke_series(const BlaschkeProduct& phi, std::size_t terms) {
  std::vector<cplx> s(terms, cplx{});
  if (terms == 0) return s;
  s[0] = phi.constant();
  std::vector<cplx> fac(terms), next(terms);
  for (const auto& z : phi.zeros()) {
    const cplx a = z.point, ca = std::conj(a);
    // (a - z) / (1 - conj(a) z) = a + sum_{t>=1} conj(a)^{t-1} (|a|^2 - 1) z^t
    fac[0] = a;
    cplx pw = 1.0;
    for (std::size_t t = 1; t < terms; ++t) {
      fac[t] = pw * (std::norm(a) - 1.0);
      pw *= ca;
    }
    for (int k = 0; k < z.multiplicity; ++k) {
      std::fill(next.begin(), next.end(), cplx{});
      for (std::size_t i = 0; i < terms; ++i) {
        if (s[i] == cplx{}) continue;
        for (std::size_t j = 0; i + j < terms; ++j) next[i + j] += s[i] * fac[j];
      }
      s.swap(next);
    }
  }
  return s;
}

}  // namespace hardy
