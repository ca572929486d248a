#pragma once

// Seeded random test matrices.

#include <cstdint>
#include <random>
#include <string>

#include "hardy/matrix.hpp"

namespace hardy {

using Rng = std::mt19937_64;

/// splitmix64 of base + index; per-trial seeds independent of scheduling.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

enum class SamplerKind {
  /// Products P T Q with constant well-conditioned P, Q and triangular T whose
  /// diagonal roots are either inside radius 0.85 or outside radius 6.
  conditioned,
  /// Coefficients uniform in [-1, 1]^2 with 30% of entries zeroed.
  plain,
};

const char* to_string(SamplerKind k);
SamplerKind sampler_from_string(const std::string& s);

/// Uniform coefficients in the complex square [-1, 1]^2.
Poly random_poly(Rng& rng, int degree);

/// det not identically zero; entry degree <= max_degree.
PolyMatrix sample_full_rank(Rng& rng, std::size_t d, int max_degree, SamplerKind kind);
/// det identically zero with rank in 1..d-1; requires d >= 2.
PolyMatrix sample_degenerate(Rng& rng, std::size_t d, int max_degree, SamplerKind kind);

/// Instance families for the enclosure procedure, each aimed at one case.
enum class EnclosureFamily {
  rank_space,
  bordered_rank_space,
  bordered_brick,
  first_coordinate,
  proper_divisor,
  determinantal_brick,
  divisor_brick,
  adjoint_eigenvector,
  generic_full_rank,
};
inline constexpr std::size_t kEnclosureFamilies = 9;
const char* to_string(EnclosureFamily f);

/// Matrix with truncated codimension at least two.
PolyMatrix sample_enclosure_instance(Rng& rng, EnclosureFamily family);

/// Codimension-one instances: [[z - a]] and variants.
PolyMatrix sample_codim_one_instance(Rng& rng);

}  // namespace hardy
