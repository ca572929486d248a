#pragma once

// JSON encodings. Complex numbers are [re, im]; index lists are 1-based.

#include <nlohmann/json.hpp>

#include "hardy/subspace.hpp"
#include "hardy/truncation.hpp"

namespace hardy {

using json = nlohmann::json;

json to_json(cplx c);
cplx complex_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const HVector& f);
HVector hvector_from_json(const json& j);

json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

json to_json(const BlaschkeProduct& phi);
BlaschkeProduct blaschke_from_json(const json& j);

json index_to_json(const MultiIndex& idx);
MultiIndex index_from_json(const json& j);

json to_json(const BrickSpec& b);
/// `d` is used when the object carries no "dim" field.
BrickSpec brick_from_json(const json& j, std::size_t d = 0);

json to_json(const RankSpaceSpec& r);
RankSpaceSpec rank_space_from_json(const json& j, std::size_t d);

json to_json(const SubspaceSpec& s);
SubspaceSpec spec_from_json(const json& j);

json to_json(const TruncatedSubspace& u);

}  // namespace hardy
