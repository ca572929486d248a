#pragma once

// Randomized check that the generated span of a matrix and the truncated
// membership set of its spec agree away from the truncation boundary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hardy/json_io.hpp"
#include "hardy/sampling.hpp"

namespace hardy {

enum class TrialMix { alternate, full_rank, degenerate };

struct TheoremConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  /// Fixed ambient index; drawn per trial from 1..4 (2..4 when degenerate) if absent.
  std::optional<std::size_t> d;
  int max_degree = 3;
  std::size_t n = 32;
  std::size_t buffer = 16;
  double tol = 1e-7;
  SamplerKind sampler = SamplerKind::conditioned;
  TrialMix mix = TrialMix::alternate;
  /// Divide entries by the largest circle_sup before checking.
  bool normalize = false;
  unsigned threads = 1;
};

struct TrialReport {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string branch;
  std::size_t d = 0;
  int rank = 0;
  PolyMatrix matrix;
  std::size_t dim_generated = 0, dim_membership = 0, dim_low_generated = 0, dim_low_membership = 0;
  /// Generated span inside the membership set.
  double generated_in_membership = 0.0;
  /// Low-degree generated vectors failing the symbolic membership test.
  std::size_t low_member_failures = 0;
  /// Low-degree membership set inside the generated span.
  double membership_in_generated = 0.0;
  std::size_t good_indices = 0;
  /// Largest two-sided residual between membership sets of distinct good indices.
  double j_independence = 0.0;
  bool pass = false;
  std::string error;
};

PolyMatrix normalized(const PolyMatrix& a);

TrialReport check_theorem(const PolyMatrix& a, std::size_t n, std::size_t buffer, double tol);

/// The matrix of trial `index` and its branch label.
PolyMatrix trial_matrix(const TheoremConfig& cfg, std::size_t index, std::string& branch);

/// Reports ordered by trial index regardless of thread count.
std::vector<TrialReport> verify_theorem(const TheoremConfig& cfg);

json to_json(const TrialReport& r);
json theorem_report(const TheoremConfig& cfg, const std::vector<TrialReport>& trials);

}  // namespace hardy
