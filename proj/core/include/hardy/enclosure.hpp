#pragma once

// Strictly larger proper invariant subspaces containing the row span of a
// square matrix, with witnesses checked by membership.

#include <string>

#include "hardy/truncation.hpp"

namespace hardy {

struct EnclosureOptions {
  std::size_t n = 32;
  /// Codimension is certified at n and n + stabilization.
  std::size_t stabilization = 4;
};

struct EnclosureResult {
  SubspaceSpec n_spec;
  SubspaceSpec m_spec;
  std::string case_tag;
  HVector w_in, w_out;
  std::size_t dim_n = 0, dim_m = 0, ambient = 0;
  std::size_t codim_n = 0, codim_next = 0;
  /// Largest distance from the truncated N basis to the truncated M.
  double containment = 0.0;
  bool w_in_in_m = false, w_in_in_n = true, w_out_in_m = true;

  bool verified() const {
    return w_in_in_m && !w_in_in_n && !w_out_in_m && dim_n < dim_m && dim_m < ambient && containment <= 1e-7;
  }
};

/// Throws Error("maximal: codimension one") when the truncated codimension is
/// one at both degrees.
EnclosureResult enclosure(const PolyMatrix& a, const EnclosureOptions& opt = {});

}  // namespace hardy
