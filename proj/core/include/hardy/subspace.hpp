#pragma once

// Symbolic descriptions of closed shift-invariant subspaces with exact
// membership tests.

#include <optional>
#include <string>
#include <vector>

#include "hardy/determinantal.hpp"

namespace hardy {

enum class SpecKind { full_rank, degenerate, raw_span };

const char* to_string(SpecKind k);
SpecKind spec_kind_from_string(const std::string& s);

/// The linear condition sum_j conj(weights[j]) g_j(point) = 0.
struct PointFunctional {
  cplx point;
  std::vector<cplx> weights;
};

/// F is a member when entry_inner_gcd divides every component and
/// G = F / entry_inner_gcd satisfies every brick, the rank space (if any)
/// and every functional.
struct SubspaceSpec {
  SpecKind kind = SpecKind::raw_span;
  std::size_t dim = 0;
  BlaschkeProduct entry_inner_gcd;
  /// Full rank: inner part of det of the reduced matrix. Degenerate: the
  /// GCD over good row sets for the chosen column index.
  std::optional<BlaschkeProduct> det_inner;
  std::vector<BrickSpec> bricks;
  std::optional<RankSpaceSpec> rank_space;
  PolyMatrix generators;
  std::optional<MultiIndex> good_index;
  std::vector<PointFunctional> functionals;
};

/// Full-rank or degenerate spec for a square nonzero matrix. In the
/// degenerate case `cols` selects the good multi-index (first one if absent).
SubspaceSpec build_spec(const PolyMatrix& a, const std::optional<MultiIndex>& cols = std::nullopt);

bool member(const SubspaceSpec& spec, const HVector& f);

/// The subspace {G : brick_i(G) for all i}, as a raw span spec.
SubspaceSpec brick_spec(std::size_t d, std::vector<BrickSpec> bricks);

}  // namespace hardy
