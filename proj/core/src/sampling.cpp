#include "hardy/sampling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/SVD>

namespace hardy {
namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

cplx unit_phase(Rng& rng) { return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi)); }

cplx inner_root(Rng& rng, double radius) { return radius * std::sqrt(uniform(rng, 0.0, 1.0)) * unit_phase(rng); }

cplx outer_root(Rng& rng) { return uniform(rng, 6.0, 12.0) * unit_phase(rng); }

// Product of `degree` linear factors with roots inside radius 0.85 or outside
// radius 6, times a scale of modulus in [0.5, 1.5].
Poly controlled_poly(Rng& rng, int degree, bool allow_inner = true) {
  Poly p = Poly::constant(uniform(rng, 0.5, 1.5) * unit_phase(rng));
  for (int i = 0; i < degree; ++i) {
    const bool inner = allow_inner && uniform(rng, 0.0, 1.0) < 0.5;
    p = p * Poly::linear(inner ? inner_root(rng, 0.85) : outer_root(rng));
  }
  return p;
}

Poly sparse_poly(Rng& rng, int max_degree) {
  if (uniform(rng, 0.0, 1.0) < 0.3) return {};
  return random_poly(rng, uniform_int(rng, 0, max_degree));
}

// Constant matrix with condition number at most 50.
PolyMatrix constant_matrix(Rng& rng, std::size_t d) {
  while (true) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx{uniform(rng, -1, 1), uniform(rng, -1, 1)};
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) * 50.0 < s(0)) continue;
    PolyMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out(i, j) = Poly::constant(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    return out;
  }
}

// Upper triangular with controlled diagonal.
PolyMatrix triangular(Rng& rng, std::size_t k, int max_degree, bool allow_inner = true) {
  PolyMatrix t(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i) = controlled_poly(rng, uniform_int(rng, 0, max_degree), allow_inner);
    for (std::size_t j = i + 1; j < k; ++j) t(i, j) = sparse_poly(rng, max_degree);
  }
  return t;
}

bool has_zero_row(const PolyMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.row(i).is_zero()) return true;
  return false;
}

Poly common_factor(Rng& rng) { return Poly::linear(inner_root(rng, 0.8)); }

// Rank-k conditioned matrix P [[T, T C], [0, 0]] Q.
PolyMatrix conditioned_degenerate(Rng& rng, std::size_t d, std::size_t k, int max_degree, bool allow_inner) {
  const PolyMatrix t = triangular(rng, k, max_degree, allow_inner);
  PolyMatrix c(k, d - k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d - k; ++j) c(i, j) = sparse_poly(rng, 1);
  const PolyMatrix tc = t * c;
  PolyMatrix core(d, d);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) core(i, j) = t(i, j);
    for (std::size_t j = k; j < d; ++j) core(i, j) = tc(i, j - k);
  }
  return constant_matrix(rng, d) * core * constant_matrix(rng, d);
}

PolyMatrix scaled(const Poly& g, PolyMatrix a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = g * a(i, j);
  return a;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

const char* to_string(SamplerKind k) { return k == SamplerKind::plain ? "plain" : "conditioned"; }

SamplerKind sampler_from_string(const std::string& s) {
  if (s == "plain") return SamplerKind::plain;
  if (s == "conditioned") return SamplerKind::conditioned;
  throw Error("unknown sampler: " + s);
}

Poly random_poly(Rng& rng, int degree) {
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return Poly(std::move(c));
}

PolyMatrix sample_full_rank(Rng& rng, std::size_t d, int max_degree, SamplerKind kind) {
  if (d == 0) throw Error("sample_full_rank: d must be positive");
  while (true) {
    PolyMatrix a(d, d);
    if (kind == SamplerKind::plain) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = sparse_poly(rng, max_degree);
    } else {
      const bool factor = max_degree >= 1 && uniform(rng, 0.0, 1.0) < 1.0 / 3.0;
      const int budget = factor ? max_degree - 1 : max_degree;
      a = constant_matrix(rng, d) * triangular(rng, d, budget) * constant_matrix(rng, d);
      if (factor) a = scaled(common_factor(rng), a);
    }
    if (!has_zero_row(a) && !det_vanishes(a)) return a;
  }
}

PolyMatrix sample_degenerate(Rng& rng, std::size_t d, int max_degree, SamplerKind kind) {
  if (d < 2) throw Error("sample_degenerate: d must be at least 2");
  while (true) {
    PolyMatrix a(d, d);
    if (kind == SamplerKind::plain) {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = sparse_poly(rng, max_degree);
      // Replace one column with a constant combination of the others.
      const auto m = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(d) - 1));
      std::vector<cplx> h(d);
      for (auto& x : h) x = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
      for (std::size_t i = 0; i < d; ++i) {
        Poly acc;
        for (std::size_t c = 0; c < d; ++c)
          if (c != m) acc += h[c] * a(i, c);
        a(i, m) = acc;
      }
    } else {
      const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(d) - 1));
      const bool factor = max_degree >= 1 && uniform(rng, 0.0, 1.0) < 1.0 / 3.0;
      const int budget = factor ? max_degree - 1 : max_degree;
      a = conditioned_degenerate(rng, d, k, std::max(budget - 1, 0), true);
      if (factor) a = scaled(common_factor(rng), a);
    }
    if (a.is_zero()) continue;
    const int k = kronecker_rank(a);
    if (k >= 1 && k < static_cast<int>(d)) return a;
  }
}

const char* to_string(EnclosureFamily f) {
  switch (f) {
    case EnclosureFamily::rank_space: return "rank_space";
    case EnclosureFamily::bordered_rank_space: return "bordered_rank_space";
    case EnclosureFamily::bordered_brick: return "bordered_brick";
    case EnclosureFamily::first_coordinate: return "first_coordinate";
    case EnclosureFamily::proper_divisor: return "proper_divisor";
    case EnclosureFamily::determinantal_brick: return "determinantal_brick";
    case EnclosureFamily::divisor_brick: return "divisor_brick";
    case EnclosureFamily::adjoint_eigenvector: return "adjoint_eigenvector";
    case EnclosureFamily::generic_full_rank: return "generic_full_rank";
  }
  return "generic_full_rank";
}

PolyMatrix sample_enclosure_instance(Rng& rng, EnclosureFamily family) {
  switch (family) {
    case EnclosureFamily::rank_space: {
      // A common inner factor makes N a proper part of the rank space.
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(d) - 1));
      return scaled(common_factor(rng), conditioned_degenerate(rng, d, k, 1, false));
    }
    case EnclosureFamily::bordered_rank_space: {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 3, 4));
      const auto k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(d) - 2));
      return conditioned_degenerate(rng, d, k, 1, false);
    }
    case EnclosureFamily::bordered_brick: {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      return conditioned_degenerate(rng, d, d - 1, 1, false);
    }
    case EnclosureFamily::first_coordinate: {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      PolyMatrix a = constant_matrix(rng, d) * triangular(rng, d, 1, false) * constant_matrix(rng, d);
      return scaled(common_factor(rng), a);
    }
    case EnclosureFamily::proper_divisor: {
      Poly p = common_factor(rng) * common_factor(rng) * controlled_poly(rng, uniform_int(rng, 0, 1), false);
      return PolyMatrix({{p}});
    }
    case EnclosureFamily::determinantal_brick: {
      // diag(z - a, z - b, 1) mixed on the right: each row brick constrains
      // one zero only, so N sits strictly inside it.
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 3));
      std::vector<Poly> diag(d, Poly::constant(1.0));
      diag[0] = common_factor(rng);
      diag[1] = common_factor(rng);
      return PolyMatrix::diagonal(diag) * constant_matrix(rng, d);
    }
    case EnclosureFamily::divisor_brick: {
      // A double zero of the determinant in one column.
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 3));
      std::vector<Poly> diag(d, Poly::constant(1.0));
      diag[0] = common_factor(rng) * common_factor(rng);
      return constant_matrix(rng, d) * PolyMatrix::diagonal(diag);
    }
    case EnclosureFamily::adjoint_eigenvector: {
      // Simple zeros split across columns and mixed on the left: every row
      // brick equals N and each quotient has a single zero.
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 3));
      std::vector<Poly> diag(d, Poly::constant(1.0));
      diag[0] = common_factor(rng);
      diag[1] = common_factor(rng);
      return constant_matrix(rng, d) * PolyMatrix::diagonal(diag);
    }
    case EnclosureFamily::generic_full_rank: {
      const auto d = static_cast<std::size_t>(uniform_int(rng, 2, 4));
      std::vector<Poly> diag(d);
      for (auto& p : diag) p = controlled_poly(rng, 1, false);
      diag[0] = common_factor(rng) * common_factor(rng);
      PolyMatrix t = PolyMatrix::diagonal(diag);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) t(i, j) = sparse_poly(rng, 1);
      return constant_matrix(rng, d) * t * constant_matrix(rng, d);
    }
  }
  throw Error("unknown enclosure family");
}

PolyMatrix sample_codim_one_instance(Rng& rng) {
  const int pick = uniform_int(rng, 0, 2);
  if (pick == 0) return PolyMatrix({{Poly::linear(inner_root(rng, 0.8))}});
  const auto d = static_cast<std::size_t>(pick + 1);
  std::vector<Poly> diag(d, Poly::constant(1.0));
  diag[0] = Poly::linear(inner_root(rng, 0.8));
  return constant_matrix(rng, d) * PolyMatrix::diagonal(diag) * constant_matrix(rng, d);
}

}  // namespace hardy
