#include "hardy/determinantal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hardy {

DeterminantalOperatorSpec make_operator(PolyMatrix b, std::size_t row, MultiIndex cols, std::size_t d) {
  const std::size_t m = b.rows();
  if (!b.is_square() || m == 0) throw Error("determinantal operator: matrix must be square and nonempty");
  if (row >= m) throw Error("determinantal operator: row out of range");
  if (cols.size() != m) throw Error("determinantal operator: column index length must equal matrix size");
  for (std::size_t i = 0; i < m; ++i) {
    if (cols[i] >= d) throw Error("determinantal operator: column index out of range");
    if (i > 0 && cols[i] <= cols[i - 1]) throw Error("determinantal operator: column indices must be strictly increasing");
  }
  DeterminantalOperatorSpec op{std::move(b), row, std::move(cols), d, {}};
  op.cofactors.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    Poly c = det(complement_minor(op.matrix, row, k));
    if ((row + k) % 2 == 1) c *= -1.0;
    op.cofactors.push_back(std::move(c));
  }
  return op;
}

DeterminantalOperatorSpec make_operator(PolyMatrix b, std::size_t row) {
  const std::size_t d = b.cols();
  MultiIndex cols(d);
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return make_operator(std::move(b), row, std::move(cols), d);
}

Poly apply_L(const DeterminantalOperatorSpec& op, const HVector& f) {
  if (f.dim() != op.d) throw Error("apply_L: dimension mismatch");
  Poly acc;
  for (std::size_t k = 0; k < op.cols.size(); ++k) acc += op.cofactors[k] * f[op.cols[k]];
  return acc;
}

bool brick_member(const BrickSpec& brick, const HVector& f) {
  const Poly v = apply_L(brick.op, f);
  // Judge against the size of the terms in the Laplace sum, not of the result:
  // a vanishing determinant is computed as a cancellation of large terms.
  double scale = h2_norm(v);
  {
    double terms = 0.0;
    for (std::size_t k = 0; k < brick.op.cols.size(); ++k) terms += h2_norm(brick.op.cofactors[k]) * h2_norm(f[brick.op.cols[k]]);
    scale = std::max(scale, terms);
  }
  const double bound = 1e-8 * (1.0 + scale);
  if (!brick.target) return v.max_abs() <= bound;
  for (const auto& z : brick.target->zeros())
    for (int r = 0; r < z.multiplicity; ++r)
      if (std::abs(v.taylor(z.point, r)) > bound) return false;
  return true;
}

RankSpaceSpec make_rank_space(const ReducedMatrix& reduced) {
  const PolyMatrix& a = reduced.reduced;
  const RankInfo info = rank_info(a);
  if (info.rank == 0) throw Error("rank space: zero matrix");
  RankSpaceSpec spec{reduced, info.rank, info.rows, info.cols, {}};
  const auto k = static_cast<std::size_t>(info.rank);
  for (std::size_t m = 0; m < a.cols(); ++m) {
    if (std::find(info.cols.begin(), info.cols.end(), m) != info.cols.end()) continue;
    MultiIndex cols = info.cols;
    cols.insert(std::upper_bound(cols.begin(), cols.end(), m), m);
    // Row 0 is replaced by F; the others are the pivot rows restricted to cols.
    PolyMatrix b(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c <= k; ++c) b(i + 1, c) = a(info.rows[i], cols[c]);
    spec.borders.push_back({make_operator(std::move(b), 0, std::move(cols), a.cols()), std::nullopt});
  }
  return spec;
}

bool rank_space_member(const RankSpaceSpec& spec, const HVector& f) {
  return std::all_of(spec.borders.begin(), spec.borders.end(), [&](const BrickSpec& b) { return brick_member(b, f); });
}

std::vector<MultiIndex> jgood_rows(const ReducedMatrix& reduced, const MultiIndex& cols) {
  std::vector<MultiIndex> out;
  for (const auto& s : combinations(reduced.reduced.rows(), cols.size()))
    if (!det_vanishes(minor(reduced.reduced, s, cols))) out.push_back(s);
  return out;
}

std::vector<MultiIndex> good_multi_indices(const ReducedMatrix& reduced) {
  const PolyMatrix& a = reduced.reduced;
  const int k = kronecker_rank(a);
  if (k == 0 || k >= static_cast<int>(a.cols())) throw Error("not in degenerate case");
  std::vector<MultiIndex> out;
  for (const auto& j : combinations(a.cols(), static_cast<std::size_t>(k)))
    if (!jgood_rows(reduced, j).empty()) out.push_back(j);
  return out;
}

BlaschkeProduct phi_JA(const ReducedMatrix& reduced, const MultiIndex& cols) {
  if (static_cast<int>(cols.size()) != kronecker_rank(reduced.reduced)) throw Error("multi-index is not good");
  const auto rows = jgood_rows(reduced, cols);
  if (rows.empty()) throw Error("multi-index is not good");
  std::vector<BlaschkeProduct> parts;
  for (const auto& s : rows) parts.push_back(det_inner_part(minor(reduced.reduced, s, cols)));
  return gcd_inner(parts);
}

}  // namespace hardy
