#include "hardy/enclosure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hardy {
namespace {

struct Candidate {
  SubspaceSpec spec;
  std::string tag;
  HVector w_in, w_out;  // w_in may be empty: filled generically
};

BrickSpec full_brick(const PolyMatrix& b, std::size_t row, std::optional<BlaschkeProduct> target) {
  return {make_operator(b, row), std::move(target)};
}

bool brick_trivial(const DeterminantalOperatorSpec& op, const BlaschkeProduct& target) {
  return std::all_of(op.cofactors.begin(), op.cofactors.end(), [&](const Poly& c) { return inner_divides_poly(target, c); });
}

// First point of 0, r, ri, -r, -ri, 2r, ... away from the zeros of phi.
cplx search_point(const BlaschkeProduct& phi) {
  const std::array<cplx, 4> dirs{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};
  auto clear = [&](cplx z) {
    return std::all_of(phi.zeros().begin(), phi.zeros().end(), [&](const Zero& w) { return std::abs(w.point - z) > 1e-3; });
  };
  if (clear(0.0)) return 0.0;
  for (int ring = 1; ring <= 3; ++ring)
    for (const auto& dir : dirs) {
      const cplx z = 0.3 * ring * dir;
      if (clear(z)) return z;
    }
  throw Error("enclosure: no admissible point for the auxiliary factor");
}

HVector new_direction(const TruncatedSubspace& m, const TruncatedSubspace& n) {
  Eigen::MatrixXcd p = m.basis();
  if (n.dim() > 0) p -= n.basis() * (n.basis().adjoint() * p);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p, Eigen::ComputeThinU);
  return from_coeffs(svd.matrixU().col(0), m.d(), m.n());
}

HVector constant_vector(const std::vector<cplx>& w) {
  HVector v(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) v[j] = Poly::constant(w[j]);
  return v;
}

std::vector<cplx> normalized_null_vector(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  Eigen::VectorXcd v = svd.matrixV().col(m.cols() - 1).conjugate();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      break;
    }
  v.normalize();
  return {v.data(), v.data() + v.size()};
}

class Builder {
 public:
  Builder(const PolyMatrix& a, const EnclosureOptions& opt)
      : opt_(opt), d_(a.rows()), red_(reduce(a)), n_spec_(build_spec(a)), n_trunc_(truncate_membership(n_spec_, opt.n)) {}

  EnclosureResult run() {
    const TruncatedSubspace next = truncate_membership(n_spec_, opt_.n + opt_.stabilization);
    const std::size_t c1 = codim(n_trunc_), c2 = codim(next);
    if (c1 == 0 && c2 == 0) throw Error("enclosure: N is the whole space");
    if (std::max(c1, c2) <= 1) throw Error("maximal: codimension one");
    if (std::min(c1, c2) < 2) throw Error("enclosure: codimension not stable");
    codims_ = {c1, c2};
    return finish(n_spec_.kind == SpecKind::degenerate ? degenerate() : full_rank());
  }

 private:
  std::size_t truncated_dim(const SubspaceSpec& s) const { return truncate_membership(s, opt_.n).dim(); }

  SubspaceSpec rank_space_spec(const ReducedMatrix& r) const {
    SubspaceSpec s = brick_spec(d_, {});
    s.rank_space = make_rank_space(r);
    return s;
  }

  Candidate degenerate() {
    const RankSpaceSpec rs = make_rank_space(red_);
    const auto k = static_cast<std::size_t>(rs.rank);
    std::size_t m = 0;
    while (std::find(rs.pivot_cols.begin(), rs.pivot_cols.end(), m) != rs.pivot_cols.end()) ++m;

    SubspaceSpec r_spec = rank_space_spec(red_);
    if (n_trunc_.dim() < truncated_dim(r_spec)) return {std::move(r_spec), "rank_space", {}, HVector::unit(d_, m)};

    const BlaschkeProduct pivot_inner = det_inner_part(minor(red_.reduced, rs.pivot_rows, rs.pivot_cols));
    const cplx z0 = search_point(pivot_inner);
    const Poly theta{z0, -1.0};

    std::size_t drop = d_;
    for (std::size_t i = d_; i-- > 0;)
      if (std::find(rs.pivot_rows.begin(), rs.pivot_rows.end(), i) == rs.pivot_rows.end()) {
        drop = i;
        break;
      }
    PolyMatrix b(d_, d_);
    b(0, m) = theta;
    for (std::size_t i = 0, r = 1; i < d_; ++i) {
      if (i == drop) continue;
      for (std::size_t c = 0; c < d_; ++c) b(r, c) = red_.reduced(i, c);
      ++r;
    }
    const HVector w_in = HVector::unit(d_, m, theta);

    if (k + 1 < d_) {
      std::size_t m2 = 0;
      while (m2 == m || std::find(rs.pivot_cols.begin(), rs.pivot_cols.end(), m2) != rs.pivot_cols.end()) ++m2;
      return {rank_space_spec(reduce(b)), "bordered_rank_space", w_in, HVector::unit(d_, m2)};
    }
    std::vector<BrickSpec> bricks;
    const BlaschkeProduct target = BlaschkeProduct::factor(z0);
    for (std::size_t j = 0; j < d_; ++j) bricks.push_back(full_brick(b, j, target));
    return {brick_spec(d_, std::move(bricks)), "bordered_brick", w_in, HVector::unit(d_, m)};
  }

  Candidate full_rank() {
    const BlaschkeProduct& phi_a = red_.entry_inner_gcd;
    const BlaschkeProduct varphi = *n_spec_.det_inner;

    std::optional<std::size_t> r;
    for (std::size_t j = d_; j-- > 0;)
      if (!brick_trivial(n_spec_.bricks[j].op, varphi)) {
        r = j;
        break;
      }

    if (!r) {
      if (d_ == 1) {
        const BlaschkeProduct smaller = proper_divisor(phi_a);
        SubspaceSpec s = brick_spec(1, {full_brick(PolyMatrix::identity(1), 0, smaller)});
        return {std::move(s), "proper_divisor", HVector::unit(1, 0, smaller.zero_polynomial()), HVector::unit(1, 0)};
      }
      SubspaceSpec s = brick_spec(d_, {{make_operator(PolyMatrix::identity(1), 0, {0}, d_), phi_a}});
      return {std::move(s), "first_coordinate", HVector::unit(d_, 1), HVector::unit(d_, 0)};
    }

    const DeterminantalOperatorSpec& op = n_spec_.bricks[*r].op;
    std::size_t bad = 0;
    while (inner_divides_poly(varphi, op.cofactors[bad])) ++bad;

    SubspaceSpec brick = brick_spec(d_, {n_spec_.bricks[*r]});
    if (n_trunc_.dim() < truncated_dim(brick)) return {std::move(brick), "determinantal_brick", {}, HVector::unit(d_, bad)};

    for (std::size_t j = 0; j < d_; ++j) {
      BlaschkeProduct theta = varphi;
      const Poly& c = op.cofactors[j];
      if (!c.is_zero()) {
        const std::array<BlaschkeProduct, 2> pair{varphi, inner_part(c)};
        theta = blaschke_quotient(varphi, gcd_inner(pair));
      } else {
        theta = BlaschkeProduct{};
      }
      if (theta.zero_count() < 2) continue;
      const BlaschkeProduct phi1 = proper_divisor(theta);
      Candidate cand{brick_spec(d_, {{op, phi1}}), "divisor_brick", HVector::unit(d_, j, phi1.zero_polynomial()), HVector::unit(d_, j)};
      if (acceptable(cand)) return cand;
      break;
    }
    return adjoint_eigenvector();
  }

  bool acceptable(const Candidate& c) const {
    const TruncatedSubspace mt = truncate_membership(c.spec, opt_.n);
    return n_trunc_.dim() < mt.dim() && mt.dim() < n_trunc_.ambient() && inclusion_residual(n_trunc_, mt) <= 1e-7 &&
           member(c.spec, c.w_in) && !member(n_spec_, c.w_in) && !member(c.spec, c.w_out);
  }

  Candidate adjoint_eigenvector() {
    if (codims_[0] != codims_[1]) throw Error("enclosure: complement did not stabilize");
    const std::size_t n = opt_.n;
    const Eigen::MatrixXcd u = n_trunc_.complement();
    Eigen::MatrixXcd back = Eigen::MatrixXcd::Zero(u.rows(), u.rows());
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t t = 0; t + 1 < n; ++t) back(static_cast<Eigen::Index>(j * n + t), static_cast<Eigen::Index>(j * n + t + 1)) = 1.0;
    const Eigen::MatrixXcd c = u.adjoint() * back * u;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
    const auto& ev = es.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < ev.size(); ++i)
      if (std::abs(ev(i)) > std::abs(ev(best))) best = i;
    const cplx guess = std::conj(ev(best));

    const auto& zeros = n_spec_.det_inner->zeros();
    if (zeros.empty()) throw Error("enclosure: no zero of the determinant in the disc");
    cplx lambda = zeros.front().point;
    for (const auto& z : zeros)
      if (std::abs(z.point - guess) < std::abs(lambda - guess)) lambda = z.point;

    const auto w = normalized_null_vector(red_.reduced.evaluate(lambda));
    SubspaceSpec s = brick_spec(d_, {});
    s.functionals.push_back({lambda, w});

    auto ell = [&](const HVector& f) {
      cplx v{};
      for (std::size_t j = 0; j < d_; ++j) v += std::conj(w[j]) * f[j](lambda);
      return v;
    };
    const HVector u1 = from_coeffs(u.col(0), d_, n), u2 = from_coeffs(u.col(1), d_, n);
    const cplx l1 = ell(u1), l2 = ell(u2);
    HVector w_in = u1;
    if (std::abs(l1) + std::abs(l2) > 1e-12) {
      w_in = l2 * u1 + (-l1) * u2;
      w_in *= 1.0 / h2_norm(w_in);
    }
    return {std::move(s), "adjoint_eigenvector", std::move(w_in), constant_vector(w)};
  }

  EnclosureResult finish(Candidate c) {
    EnclosureResult out;
    const TruncatedSubspace mt = truncate_membership(c.spec, opt_.n);
    if (c.w_in.dim() == 0) c.w_in = new_direction(mt, n_trunc_);
    out.codim_n = codims_[0];
    out.codim_next = codims_[1];
    out.dim_n = n_trunc_.dim();
    out.dim_m = mt.dim();
    out.ambient = n_trunc_.ambient();
    out.containment = inclusion_residual(n_trunc_, mt);
    out.w_in_in_m = member(c.spec, c.w_in);
    out.w_in_in_n = member(n_spec_, c.w_in);
    out.w_out_in_m = member(c.spec, c.w_out);
    out.case_tag = std::move(c.tag);
    out.w_in = std::move(c.w_in);
    out.w_out = std::move(c.w_out);
    out.n_spec = n_spec_;
    out.m_spec = std::move(c.spec);
    return out;
  }

  EnclosureOptions opt_;
  std::size_t d_;
  ReducedMatrix red_;
  SubspaceSpec n_spec_;
  TruncatedSubspace n_trunc_;
  std::array<std::size_t, 2> codims_{};
};

}  // namespace

EnclosureResult enclosure(const PolyMatrix& a, const EnclosureOptions& opt) {
  if (!a.is_square()) throw Error("enclosure: matrix must be square");
  if (a.is_zero()) throw Error("enclosure: zero matrix");
  return Builder(a, opt).run();
}

}  // namespace hardy
