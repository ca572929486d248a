#pragma once

// Determinantal operators L_{B,j,J}: F maps to det(B) with row j replaced by
// (f_{J[0]}, ..., f_{J[m-1]}). Bricks are preimages of phi H^2 or of {0}.

#include <optional>
#include <vector>

#include "hardy/matrix.hpp"

namespace hardy {

struct DeterminantalOperatorSpec {
  PolyMatrix matrix;        // m x m
  std::size_t row = 0;      // replaced row, 0-based
  MultiIndex cols;          // length m, into 0..d-1
  std::size_t d = 0;        // ambient index
  std::vector<Poly> cofactors;  // (-1)^{row+k} det(B^{row,k}), filled by make_operator
};

DeterminantalOperatorSpec make_operator(PolyMatrix b, std::size_t row, MultiIndex cols, std::size_t d);
/// The full-width operator L_{B,j} with cols = 0..d-1.
DeterminantalOperatorSpec make_operator(PolyMatrix b, std::size_t row);

Poly apply_L(const DeterminantalOperatorSpec& op, const HVector& f);

struct BrickSpec {
  DeterminantalOperatorSpec op;
  /// nullopt marks the zero subspace target.
  std::optional<BlaschkeProduct> target;
};

bool brick_member(const BrickSpec& brick, const HVector& f);

/// The rank space of a reduced matrix: F such that stacking F on the rows of
/// the reduced matrix keeps the rank. Encoded as one zero-target brick per
/// column outside the pivot columns (the bordered determinants R_m).
struct RankSpaceSpec {
  ReducedMatrix reduced;
  int rank = 0;
  MultiIndex pivot_rows, pivot_cols;
  std::vector<BrickSpec> borders;
};

RankSpaceSpec make_rank_space(const ReducedMatrix& reduced);
bool rank_space_member(const RankSpaceSpec& spec, const HVector& f);

std::vector<MultiIndex> good_multi_indices(const ReducedMatrix& reduced);
std::vector<MultiIndex> jgood_rows(const ReducedMatrix& reduced, const MultiIndex& cols);
BlaschkeProduct phi_JA(const ReducedMatrix& reduced, const MultiIndex& cols);

}  // namespace hardy
