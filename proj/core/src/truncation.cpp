#include "hardy/truncation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>

#include <Eigen/SVD>

namespace hardy {
namespace {

using Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Block-diagonal multiplication by p: degree-n_in section -> degree-n_out section.
Eigen::MatrixXcd multiplication(const Poly& p, std::size_t d, std::size_t n_in, std::size_t n_out) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(idx(d * n_out), idx(d * n_in));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t s = 0; s < n_in; ++s)
      for (std::size_t t = 0; t < p.size() && s + t < n_out; ++t) m(idx(j * n_out + s + t), idx(j * n_in + s)) = p[t];
  return m;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& c) {
  const Index cols = c.cols();
  if (c.rows() == 0 || cols == 0) return Eigen::MatrixXcd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? kRankTol * sv(0) : 0.0;
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

class ConstraintRows {
 public:
  ConstraintRows(std::size_t d, std::size_t n) : d_(d), n_(n) {}

  Eigen::RowVectorXcd blank() const { return Eigen::RowVectorXcd::Zero(idx(d_ * n_)); }
  // `scale` is the size the row would have without cancellation; rows that
  // are pure rounding noise stay small after dividing by it.
  void add(Eigen::RowVectorXcd row, double scale) {
    if (scale == 0.0 || row.norm() == 0.0) return;
    rows_.push_back(row / scale);
  }
  Eigen::MatrixXcd matrix() const {
    Eigen::MatrixXcd m(idx(rows_.size()), idx(d_ * n_));
    for (std::size_t i = 0; i < rows_.size(); ++i) m.row(idx(i)) = rows_[i];
    return m;
  }
  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t d_, n_;
  std::vector<Eigen::RowVectorXcd> rows_;
};

// Taylor coefficients of order r at a of L(G) = sum_k c_k g_{cols[k]}, as
// linear forms in the coefficients of G.
void add_vanishing_rows(ConstraintRows& rows, const DeterminantalOperatorSpec& op, const BlaschkeProduct& target) {
  const std::size_t n = rows.n();
  for (const auto& z : target.zeros()) {
    const cplx a = z.point;
    const auto m = static_cast<std::size_t>(z.multiplicity);
    std::vector<cplx> pw(n + 1);
    pw[0] = 1.0;
    for (std::size_t e = 1; e <= n; ++e) pw[e] = pw[e - 1] * a;
    // binom[t][s] for s < m
    std::vector<std::vector<double>> binom(n, std::vector<double>(m, 0.0));
    for (std::size_t t = 0; t < n; ++t) {
      binom[t][0] = 1.0;
      for (std::size_t s = 1; s < m && s <= t; ++s) binom[t][s] = binom[t][s - 1] * static_cast<double>(t - s + 1) / static_cast<double>(s);
    }
    // ct_abs: the same Taylor coefficients with every term taken in modulus
    std::vector<std::vector<cplx>> ct(op.cols.size(), std::vector<cplx>(m));
    std::vector<std::vector<double>> ct_abs(op.cols.size(), std::vector<double>(m));
    for (std::size_t k = 0; k < op.cols.size(); ++k) {
      std::vector<cplx> mod;
      for (const auto& c : op.cofactors[k].coeffs()) mod.push_back(std::abs(c));
      const Poly bound(std::move(mod));
      for (std::size_t q = 0; q < m; ++q) {
        ct[k][q] = op.cofactors[k].taylor(a, static_cast<int>(q));
        ct_abs[k][q] = bound.taylor(std::abs(a), static_cast<int>(q)).real();
      }
    }

    for (std::size_t r = 0; r < m; ++r) {
      auto row = rows.blank();
      double scale = 0.0;
      for (std::size_t k = 0; k < op.cols.size(); ++k) {
        const std::size_t j = op.cols[k];
        for (std::size_t t = 0; t < n; ++t) {
          cplx v{};
          double v_abs = 0.0;
          for (std::size_t s = 0; s <= r && s <= t; ++s) {
            v += ct[k][r - s] * binom[t][s] * pw[t - s];
            v_abs += ct_abs[k][r - s] * binom[t][s] * std::abs(pw[t - s]);
          }
          row(idx(j * n + t)) = v;
          scale += v_abs * v_abs;
        }
      }
      rows.add(std::move(row), std::sqrt(scale));
    }
  }
}

// Every coefficient of L(G) vanishes.
void add_zero_rows(ConstraintRows& rows, const DeterminantalOperatorSpec& op) {
  const std::size_t n = rows.n();
  std::size_t top = 0;
  double scale = 0.0;
  for (const auto& c : op.cofactors) {
    top = std::max(top, c.size());
    scale = std::max(scale, h2_norm(c));
  }
  for (std::size_t q = 0; q + 1 < n + top; ++q) {
    auto row = rows.blank();
    for (std::size_t k = 0; k < op.cols.size(); ++k) {
      const Poly& c = op.cofactors[k];
      const std::size_t j = op.cols[k];
      for (std::size_t t = 0; t < n && t <= q; ++t) row(idx(j * n + t)) += c[q - t];
    }
    rows.add(std::move(row), scale);
  }
}

void add_functional_row(ConstraintRows& rows, const PointFunctional& fn) {
  const std::size_t n = rows.n();
  if (fn.weights.size() != rows.d()) throw Error("functional weight length mismatch");
  auto row = rows.blank();
  for (std::size_t j = 0; j < rows.d(); ++j) {
    cplx pw = 1.0;
    for (std::size_t t = 0; t < n; ++t) {
      row(idx(j * n + t)) = std::conj(fn.weights[j]) * pw;
      pw *= fn.point;
    }
  }
  const double nrm = row.norm();
  rows.add(std::move(row), nrm);
}

}  // namespace

TruncatedSubspace::TruncatedSubspace(std::size_t d, std::size_t n, Eigen::MatrixXcd basis) : d_(d), n_(n), basis_(std::move(basis)) {
  if (basis_.rows() != idx(d * n)) throw Error("TruncatedSubspace: basis row count must be d*n");
}

TruncatedSubspace TruncatedSubspace::span_of(std::size_t d, std::size_t n, const Eigen::MatrixXcd& vectors, double rel_tol) {
  if (vectors.rows() != idx(d * n)) throw Error("span_of: vector length must be d*n");
  if (vectors.cols() == 0) return {d, n, Eigen::MatrixXcd(idx(d * n), 0)};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0)
    while (rank < sv.size() && sv(rank) > rel_tol * sv(0)) ++rank;
  return {d, n, svd.matrixU().leftCols(rank)};
}

TruncatedSubspace TruncatedSubspace::whole(std::size_t d, std::size_t n) {
  return {d, n, Eigen::MatrixXcd::Identity(idx(d * n), idx(d * n))};
}

HVector TruncatedSubspace::vector(std::size_t i) const {
  if (i >= dim()) throw Error("TruncatedSubspace::vector: index out of range");
  return from_coeffs(basis_.col(idx(i)), d_, n_);
}

double TruncatedSubspace::residual(const Eigen::VectorXcd& v) const {
  if (v.size() != basis_.rows()) throw Error("residual: length mismatch");
  if (dim() == 0) return v.norm();
  return (v - basis_ * (basis_.adjoint() * v)).norm();
}

Eigen::MatrixXcd TruncatedSubspace::complement() const {
  if (dim() == 0) return Eigen::MatrixXcd::Identity(basis_.rows(), basis_.rows());
  return null_space(basis_.adjoint());
}

Eigen::VectorXcd to_coeffs(const HVector& f, std::size_t n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(idx(f.dim() * n));
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (static_cast<std::size_t>(f[j].degree() + 1) > n) throw Error("to_coeffs: component degree exceeds the section");
    for (std::size_t t = 0; t < f[j].size(); ++t) v(idx(j * n + t)) = f[j][t];
  }
  return v;
}

HVector from_coeffs(const Eigen::VectorXcd& v, std::size_t d, std::size_t n) {
  if (v.size() != idx(d * n)) throw Error("from_coeffs: length mismatch");
  HVector f(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<cplx> c(n);
    for (std::size_t t = 0; t < n; ++t) c[t] = v(idx(j * n + t));
    f[j] = Poly(std::move(c));
  }
  return f;
}

TruncatedSubspace truncate_membership(const SubspaceSpec& spec, std::size_t n) {
  const std::size_t d = spec.dim;
  if (d == 0) throw Error("truncate_membership: empty ambient index");
  // F = D P with D the monic zero polynomial of the entry GCD; then
  // F / gcd is a unimodular multiple of R P with R the reflected factors.
  const Poly zero_poly = spec.entry_inner_gcd.zero_polynomial();
  const auto shift_deg = static_cast<std::size_t>(zero_poly.degree());
  if (shift_deg >= n) return {d, n, Eigen::MatrixXcd(idx(d * n), 0)};
  const std::size_t np = n - shift_deg;

  ConstraintRows rows(d, n);
  for (const auto& b : spec.bricks) {
    if (b.op.d != d) throw Error("truncate_membership: brick dimension mismatch");
    if (b.target) add_vanishing_rows(rows, b.op, *b.target);
    else add_zero_rows(rows, b.op);
  }
  if (spec.rank_space)
    for (const auto& b : spec.rank_space->borders) add_zero_rows(rows, b.op);
  for (const auto& fn : spec.functionals) add_functional_row(rows, fn);

  const Eigen::MatrixXcd to_g = multiplication(spec.entry_inner_gcd.denominator(), d, np, n);
  const Eigen::MatrixXcd p_null = null_space(rows.matrix() * to_g);
  const Eigen::MatrixXcd to_f = multiplication(zero_poly, d, np, n);
  return TruncatedSubspace::span_of(d, n, to_f * p_null);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::subset: return "subset";
    case Verdict::superset: return "superset";
    case Verdict::incomparable: return "incomparable";
  }
  return "incomparable";
}

double inclusion_residual(const TruncatedSubspace& u, const TruncatedSubspace& v) {
  if (u.d() != v.d() || u.n() != v.n()) throw Error("compare: shape mismatch");
  if (u.dim() == 0) return 0.0;
  const Eigen::MatrixXcd& ub = u.basis();
  Eigen::MatrixXcd r = ub;
  if (v.dim() > 0) r -= v.basis() * (v.basis().adjoint() * ub);
  return r.colwise().norm().maxCoeff();
}

Comparison compare(const TruncatedSubspace& u, const TruncatedSubspace& v, double tol) {
  Comparison c;
  c.u_in_v = inclusion_residual(u, v);
  c.v_in_u = inclusion_residual(v, u);
  const bool sub = c.u_in_v <= tol, sup = c.v_in_u <= tol;
  c.verdict = sub && sup ? Verdict::equal : sub ? Verdict::subset : sup ? Verdict::superset : Verdict::incomparable;
  return c;
}

std::size_t codim(const TruncatedSubspace& u) { return u.ambient() - u.dim(); }

TruncatedSubspace embed(const TruncatedSubspace& u, std::size_t n2) {
  if (n2 < u.n()) throw Error("embed: target degree below source degree");
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(idx(u.d() * n2), idx(u.dim()));
  for (std::size_t j = 0; j < u.d(); ++j) b.middleRows(idx(j * n2), idx(u.n())) = u.basis().middleRows(idx(j * u.n()), idx(u.n()));
  return {u.d(), n2, std::move(b)};
}

TruncatedSubspace intersect_low_degree(const TruncatedSubspace& u, std::size_t m) {
  const std::size_t d = u.d(), n = u.n();
  if (m > n) throw Error("intersect_low_degree: degree above the section");
  const std::size_t hi = n - m;
  Eigen::MatrixXcd top(idx(d * hi), idx(u.dim()));
  Eigen::MatrixXcd low(idx(d * m), idx(u.dim()));
  for (std::size_t j = 0; j < d; ++j) {
    top.middleRows(idx(j * hi), idx(hi)) = u.basis().middleRows(idx(j * n + m), idx(hi));
    low.middleRows(idx(j * m), idx(m)) = u.basis().middleRows(idx(j * n), idx(m));
  }
  if (u.dim() == 0) return {d, m, low};
  Eigen::MatrixXcd keep;
  if (hi == 0) {
    keep = Eigen::MatrixXcd::Identity(idx(u.dim()), idx(u.dim()));
  } else {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(top, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Index first = 0;
    while (first < sv.size() && sv(first) > kRankTol) ++first;
    keep = svd.matrixV().rightCols(idx(u.dim()) - first);
  }
  return TruncatedSubspace::span_of(d, m, low * keep);
}

TruncatedSubspace generated_basis(const PolyMatrix& a, std::size_t n) {
  const int top = a.max_degree();
  if (static_cast<long>(n) < top + 1) throw Error("generated_basis: degree bound below entry degree");
  const std::size_t d = a.cols();
  std::vector<Eigen::VectorXcd> cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const HVector r = a.row(i);
    if (r.is_zero()) continue;
    const auto deg = static_cast<std::size_t>(r.degree());
    const Eigen::VectorXcd base = to_coeffs(r, n);
    for (std::size_t t = 0; deg + t < n; ++t) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(idx(d * n));
      for (std::size_t j = 0; j < d; ++j) v.segment(idx(j * n + t), idx(n - t)) = base.segment(idx(j * n), idx(n - t));
      cols.push_back(std::move(v));
    }
  }
  Eigen::MatrixXcd m(idx(d * n), idx(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) m.col(idx(i)) = cols[i];
  return TruncatedSubspace::span_of(d, n, m);
}

double outer_density_check(const SubspaceSpec& spec, const Poly& outer, std::size_t n) {
  if (outer.is_zero()) throw Error("outer_density_check: O is zero");
  if (inner_part(outer).zero_count() > 0) throw Error("outer_density_check: O has zeros in the open disc");
  const std::size_t d = spec.dim;
  const auto deg = static_cast<std::size_t>(outer.degree());
  const TruncatedSubspace small = truncate_membership(spec, n);
  const TruncatedSubspace big = truncate_membership(spec, 2 * n);
  const std::size_t n_out = 2 * n + deg;
  const Eigen::MatrixXcd times = multiplication(outer, d, 2 * n, n_out) * big.basis();
  const TruncatedSubspace image = TruncatedSubspace::span_of(d, n_out, times);
  return inclusion_residual(embed(small, n_out), image);
}

std::vector<std::vector<cplx>> basis_vectors(const TruncatedSubspace& u) {
  std::vector<std::vector<cplx>> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto col = u.basis().col(idx(i));
    out[i].assign(col.data(), col.data() + col.size());
  }
  return out;
}

void write_binary(const TruncatedSubspace& u, std::ostream& out) {
  auto put = [&](double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
    out.write(buf, 8);
  };
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (Index r = 0; r < u.basis().rows(); ++r) {
      const cplx v = u.basis()(r, idx(i));
      put(v.real());
      put(v.imag());
    }
}

}  // namespace hardy
