#pragma once

#include <random>

#include "hardy/sampling.hpp"
#include "hardy/subspace.hpp"
#include "oracles.hpp"

namespace fx {

using hardy::cplx;

inline oracle::Coeffs coeffs(const hardy::Poly& p) { return p.coeffs(); }

inline oracle::CoeffMatrix coeffs(const hardy::PolyMatrix& a) {
  oracle::CoeffMatrix m(a.rows(), std::vector<oracle::Coeffs>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).coeffs();
  return m;
}

inline oracle::Multiset zeros(const hardy::BlaschkeProduct& phi) {
  oracle::Multiset out;
  for (const auto& z : phi.zeros())
    for (int k = 0; k < z.multiplicity; ++k) out.push_back(z.point);
  return out;
}

inline hardy::BlaschkeProduct blaschke(const oracle::Multiset& zs) {
  std::vector<hardy::Zero> v;
  for (auto z : zs) v.push_back({z, 1});
  return {1.0, v};
}

inline cplx gauss(hardy::Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline cplx in_disc(hardy::Rng& rng, double rmax) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(rmax * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline hardy::Poly random_poly(hardy::Rng& rng, int degree) {
  std::vector<cplx> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = gauss(rng);
  return hardy::Poly(c);
}

inline hardy::HVector random_vector(hardy::Rng& rng, std::size_t d, int degree) {
  hardy::HVector f(d);
  for (std::size_t j = 0; j < d; ++j) f[j] = random_poly(rng, degree);
  return f;
}

// Poly with the given roots and constant 1.
inline hardy::Poly from_roots(const oracle::Multiset& roots) {
  hardy::Poly p = hardy::Poly::constant(1.0);
  for (auto r : roots) p = p * hardy::Poly::linear(r);
  return p;
}

inline hardy::PolyMatrix diag3(const hardy::Poly& a, const hardy::Poly& b, const hardy::Poly& c) {
  return hardy::PolyMatrix::diagonal({a, b, c});
}

inline hardy::PolyMatrix scale(const hardy::Poly& g, hardy::PolyMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = g * m(i, j);
  return m;
}

// The running example diag(z, 1/2 - z, 0).
inline hardy::PolyMatrix worked_diag() { return diag3(hardy::Poly({0.0, 1.0}), hardy::Poly({0.5, -1.0}), {}); }

// [[phi,0,0],[0,psi,psi],[0,1,1]] with phi = z, psi = 1/2 - z as polynomials.
inline hardy::PolyMatrix worked_rank_two() {
  const hardy::Poly p({0.0, 1.0}), q({0.5, -1.0}), one = hardy::Poly::constant(1.0);
  return hardy::PolyMatrix({{p, {}, {}}, {{}, q, q}, {{}, one, one}});
}

}  // namespace fx
