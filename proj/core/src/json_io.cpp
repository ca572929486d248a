#include "hardy/json_io.hpp"

namespace hardy {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_value(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw Error("indices must be positive integers (1-based)");
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

}  // namespace

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw Error("complex number must be [re, im] or a real number");
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error("polynomial must be an array of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(complex_from_json(x));
  return Poly(std::move(c));
}

json to_json(const HVector& f) {
  json out = json::array();
  for (const auto& p : f.components()) out.push_back(to_json(p));
  return out;
}

HVector hvector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("vector must be a nonempty array of polynomials");
  std::vector<Poly> comps;
  for (const auto& x : j) comps.push_back(poly_from_json(x));
  return HVector(std::move(comps));
}

json to_json(const PolyMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

PolyMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("matrix must be a nonempty 2-D array of polynomials");
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.empty()) throw Error("matrix rows must be nonempty arrays");
    std::vector<Poly> row;
    for (const auto& x : r) row.push_back(poly_from_json(x));
    rows.push_back(std::move(row));
  }
  return PolyMatrix(rows);
}

json to_json(const BlaschkeProduct& phi) {
  json zeros = json::array();
  for (const auto& z : phi.zeros()) zeros.push_back(json::array({to_json(z.point), z.multiplicity}));
  return {{"constant", to_json(phi.constant())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  if (!j.is_object()) throw Error("Blaschke product must be an object");
  const cplx c = j.contains("constant") ? complex_from_json(j.at("constant")) : cplx{1.0};
  std::vector<Zero> zeros;
  if (j.contains("zeros")) {
    const json& zs = j.at("zeros");
    if (!zs.is_array()) throw Error("\"zeros\" must be an array");
    for (const auto& z : zs) {
      if (!z.is_array() || z.size() != 2 || !z[1].is_number_integer()) throw Error("zero must be [[re, im], multiplicity]");
      zeros.push_back({complex_from_json(z[0]), z[1].get<int>()});
    }
  }
  return {c, std::move(zeros)};
}

json index_to_json(const MultiIndex& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

MultiIndex index_from_json(const json& j) {
  if (!j.is_array()) throw Error("multi-index must be an array of integers");
  MultiIndex out;
  for (const auto& x : j) {
    out.push_back(index_value(x));
    if (out.size() > 1 && out[out.size() - 2] >= out.back()) throw Error("multi-index must be strictly increasing");
  }
  return out;
}

json to_json(const BrickSpec& b) {
  json out = {{"matrix", to_json(b.op.matrix)},
              {"row", b.op.row + 1},
              {"cols", index_to_json(b.op.cols)},
              {"dim", b.op.d}};
  out["target"] = b.target ? to_json(*b.target) : json("zero");
  return out;
}

BrickSpec brick_from_json(const json& j, std::size_t d) {
  PolyMatrix m = matrix_from_json(field(j, "matrix"));
  const std::size_t row = index_value(field(j, "row"));
  MultiIndex cols;
  if (j.contains("cols")) {
    cols = index_from_json(j.at("cols"));
  } else {
    for (std::size_t i = 0; i < m.cols(); ++i) cols.push_back(i);
  }
  if (j.contains("dim")) d = j.at("dim").get<std::size_t>();
  if (d == 0) d = cols.empty() ? 0 : cols.back() + 1;
  std::optional<BlaschkeProduct> target;
  const json& t = field(j, "target");
  if (!(t.is_string() && t.get<std::string>() == "zero")) target = blaschke_from_json(t);
  return {make_operator(std::move(m), row, std::move(cols), d), std::move(target)};
}

json to_json(const RankSpaceSpec& r) {
  json borders = json::array();
  for (const auto& b : r.borders) borders.push_back(to_json(b));
  return {{"rank", r.rank},
          {"pivot_rows", index_to_json(r.pivot_rows)},
          {"pivot_cols", index_to_json(r.pivot_cols)},
          {"entry_inner_gcd", to_json(r.reduced.entry_inner_gcd)},
          {"reduced", to_json(r.reduced.reduced)},
          {"original", to_json(r.reduced.original)},
          {"borders", borders}};
}

RankSpaceSpec rank_space_from_json(const json& j, std::size_t d) {
  RankSpaceSpec r;
  r.rank = field(j, "rank").get<int>();
  r.pivot_rows = index_from_json(field(j, "pivot_rows"));
  r.pivot_cols = index_from_json(field(j, "pivot_cols"));
  r.reduced.entry_inner_gcd = blaschke_from_json(field(j, "entry_inner_gcd"));
  r.reduced.reduced = matrix_from_json(field(j, "reduced"));
  r.reduced.original = matrix_from_json(field(j, "original"));
  for (const auto& b : field(j, "borders")) r.borders.push_back(brick_from_json(b, d));
  return r;
}

json to_json(const SubspaceSpec& s) {
  json bricks = json::array();
  for (const auto& b : s.bricks) bricks.push_back(to_json(b));
  json fns = json::array();
  for (const auto& f : s.functionals) {
    json w = json::array();
    for (const auto& x : f.weights) w.push_back(to_json(x));
    fns.push_back({{"point", to_json(f.point)}, {"weights", w}});
  }
  json out = {{"kind", to_string(s.kind)},
              {"dim", s.dim},
              {"entry_inner_gcd", to_json(s.entry_inner_gcd)},
              {"bricks", bricks},
              {"functionals", fns}};
  out["det_inner"] = s.det_inner ? to_json(*s.det_inner) : json(nullptr);
  out["rank_space"] = s.rank_space ? to_json(*s.rank_space) : json(nullptr);
  out["generators"] = s.generators.rows() > 0 ? to_json(s.generators) : json(nullptr);
  out["good_index"] = s.good_index ? index_to_json(*s.good_index) : json(nullptr);
  return out;
}

SubspaceSpec spec_from_json(const json& j) {
  SubspaceSpec s;
  s.kind = spec_kind_from_string(field(j, "kind").get<std::string>());
  s.dim = field(j, "dim").get<std::size_t>();
  if (s.dim == 0) throw Error("spec dimension must be positive");
  if (j.contains("entry_inner_gcd")) s.entry_inner_gcd = blaschke_from_json(j.at("entry_inner_gcd"));
  if (j.contains("det_inner") && !j.at("det_inner").is_null()) s.det_inner = blaschke_from_json(j.at("det_inner"));
  if (j.contains("bricks"))
    for (const auto& b : j.at("bricks")) s.bricks.push_back(brick_from_json(b, s.dim));
  if (j.contains("rank_space") && !j.at("rank_space").is_null()) s.rank_space = rank_space_from_json(j.at("rank_space"), s.dim);
  if (j.contains("generators") && !j.at("generators").is_null()) s.generators = matrix_from_json(j.at("generators"));
  if (j.contains("good_index") && !j.at("good_index").is_null()) s.good_index = index_from_json(j.at("good_index"));
  if (j.contains("functionals"))
    for (const auto& f : j.at("functionals")) {
      PointFunctional fn{complex_from_json(field(f, "point")), {}};
      for (const auto& w : field(f, "weights")) fn.weights.push_back(complex_from_json(w));
      s.functionals.push_back(std::move(fn));
    }
  return s;
}

json to_json(const TruncatedSubspace& u) {
  json vecs = json::array();
  for (const auto& v : basis_vectors(u)) {
    json col = json::array();
    for (const auto& c : v) col.push_back(to_json(c));
    vecs.push_back(std::move(col));
  }
  return {{"d", u.d()}, {"n", u.n()}, {"dim", u.dim()}, {"basis", vecs}};
}

}  // namespace hardy
