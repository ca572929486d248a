#include "hardy/subspace.hpp"

#include <algorithm>

namespace hardy {

const char* to_string(SpecKind k) {
  switch (k) {
    case SpecKind::full_rank: return "full_rank";
    case SpecKind::degenerate: return "degenerate";
    case SpecKind::raw_span: return "raw_span";
  }
  return "raw_span";
}

SpecKind spec_kind_from_string(const std::string& s) {
  if (s == "full_rank") return SpecKind::full_rank;
  if (s == "degenerate") return SpecKind::degenerate;
  if (s == "raw_span") return SpecKind::raw_span;
  throw Error("unknown spec kind: " + s);
}

SubspaceSpec build_spec(const PolyMatrix& a, const std::optional<MultiIndex>& cols) {
  if (!a.is_square()) throw Error("build_spec: matrix must be square");
  if (a.is_zero()) throw Error("build_spec: zero matrix");
  const std::size_t d = a.rows();
  const ReducedMatrix red = reduce(a);

  SubspaceSpec spec;
  spec.dim = d;
  spec.entry_inner_gcd = red.entry_inner_gcd;
  spec.generators = a;

  const Poly full = det(red.reduced);
  if (!vanishes(full, red.reduced)) {
    if (cols) throw Error("build_spec: a column multi-index is only meaningful for rank-deficient matrices");
    spec.kind = SpecKind::full_rank;
    spec.det_inner = det_inner_part(red.reduced);
    for (std::size_t j = 0; j < d; ++j) spec.bricks.push_back({make_operator(red.reduced, j), spec.det_inner});
    return spec;
  }

  spec.kind = SpecKind::degenerate;
  const auto good = good_multi_indices(red);
  MultiIndex chosen = good.front();
  if (cols) {
    if (std::find(good.begin(), good.end(), *cols) == good.end()) throw Error("build_spec: multi-index is not good");
    chosen = *cols;
  }
  const BlaschkeProduct phi = phi_JA(red, chosen);
  spec.det_inner = phi;
  spec.good_index = chosen;
  for (const auto& s : jgood_rows(red, chosen)) {
    const PolyMatrix b = minor(red.reduced, s, chosen);
    for (std::size_t j = 0; j < chosen.size(); ++j) spec.bricks.push_back({make_operator(b, j, chosen, d), phi});
  }
  spec.rank_space = make_rank_space(red);
  return spec;
}

SubspaceSpec brick_spec(std::size_t d, std::vector<BrickSpec> bricks) {
  SubspaceSpec spec;
  spec.kind = SpecKind::raw_span;
  spec.dim = d;
  spec.bricks = std::move(bricks);
  return spec;
}

bool member(const SubspaceSpec& spec, const HVector& f) {
  if (f.dim() != spec.dim) throw Error("member: dimension mismatch");
  HVector g(spec.dim);
  for (std::size_t j = 0; j < spec.dim; ++j) {
    if (!inner_divides_poly(spec.entry_inner_gcd, f[j])) return false;
    g[j] = divide_out(f[j], spec.entry_inner_gcd);
  }
  for (const auto& b : spec.bricks)
    if (!brick_member(b, g)) return false;
  if (spec.rank_space && !rank_space_member(*spec.rank_space, g)) return false;
  const double scale = 1.0 + h2_norm(g);
  for (const auto& fn : spec.functionals) {
    if (fn.weights.size() != spec.dim) throw Error("member: functional weight length mismatch");
    cplx v{};
    for (std::size_t j = 0; j < spec.dim; ++j) v += std::conj(fn.weights[j]) * g[j](fn.point);
    if (std::abs(v) > 1e-8 * scale) return false;
  }
  return true;
}

}  // namespace hardy
