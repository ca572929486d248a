#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hardy/harness.hpp"
#include "hardy/truncation.hpp"

using namespace hardy;

namespace {
const Poly z({0.0, 1.0});
const Poly half({0.5, -1.0});
const Poly one = Poly::constant(1.0);
}  // namespace

TEST(Spec, WorkedDiagonal) {
  const auto s = build_spec(fx::worked_diag());
  EXPECT_EQ(s.kind, SpecKind::degenerate);
  ASSERT_TRUE(s.det_inner.has_value());
  const auto phi = fx::zeros(*s.det_inner);
  EXPECT_TRUE(oracle::contains(phi, {0.0, 0.5}) && oracle::contains({0.0, 0.5}, phi));
  ASSERT_TRUE(s.rank_space.has_value());

  EXPECT_TRUE(member(s, HVector::unit(3, 0, z)));
  EXPECT_FALSE(member(s, HVector::unit(3, 0)));
  EXPECT_TRUE(member(s, HVector::unit(3, 1, half)));
  EXPECT_FALSE(member(s, HVector::unit(3, 1)));
  EXPECT_FALSE(member(s, HVector::unit(3, 2, z)));
  EXPECT_TRUE(member(s, HVector(3)));
}

TEST(Spec, DiagonalWithSingleOne) {
  const auto s = build_spec(fx::diag3(one, {}, {}));
  Rng rng(2);
  EXPECT_TRUE(member(s, HVector::unit(3, 0, fx::random_poly(rng, 5))));
  EXPECT_FALSE(member(s, HVector::unit(3, 1)));
  EXPECT_FALSE(member(s, HVector::unit(3, 2)));
}

TEST(Spec, IdentityIsWholeSpace) {
  const auto s = build_spec(PolyMatrix::identity(2));
  EXPECT_EQ(s.kind, SpecKind::full_rank);
  EXPECT_TRUE(s.det_inner->is_constant());
  Rng rng(3);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(member(s, fx::random_vector(rng, 2, 4)));
}

TEST(Spec, GeneratorsAreMembers) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 4);
    const PolyMatrix a = (trial % 2 || d == 1) ? sample_full_rank(rng, d, 3, SamplerKind::conditioned)
                                               : sample_degenerate(rng, d, 3, SamplerKind::conditioned);
    const auto s = build_spec(a);
    HVector combo(d);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_TRUE(member(s, a.row(i)));
      combo += fx::random_poly(rng, 3) * a.row(i);
    }
    EXPECT_TRUE(member(s, combo));
    EXPECT_TRUE(member(s, shift(combo)));
  }
}

TEST(Spec, Errors) {
  EXPECT_THROW(build_spec(PolyMatrix(2, 3)), Error);
  EXPECT_THROW(build_spec(PolyMatrix(2, 2)), Error);
  EXPECT_THROW(build_spec(PolyMatrix::identity(2), MultiIndex{0}), Error);
  EXPECT_THROW(build_spec(fx::worked_diag(), MultiIndex{1, 2}), Error);
  EXPECT_THROW(member(build_spec(PolyMatrix::identity(2)), HVector(3)), Error);
}

TEST(Spec, JIndependenceOnWorkedExample) {
  const auto a = build_spec(fx::worked_rank_two(), MultiIndex{0, 1});
  const auto b = build_spec(fx::worked_rank_two(), MultiIndex{0, 2});
  const auto ta = truncate_membership(a, 16), tb = truncate_membership(b, 16);
  const auto c = compare(ta, tb, 1e-7);
  EXPECT_EQ(c.verdict, Verdict::equal);
}

TEST(Generated, Dimensions) {
  EXPECT_EQ(generated_basis(PolyMatrix({{z * z}}), 6).dim(), 4u);
  EXPECT_EQ(generated_basis(PolyMatrix::identity(2), 10).dim(), 20u);
  EXPECT_THROW(generated_basis(PolyMatrix({{Poly::monomial(5)}}), 5), Error);
}

TEST(Truncation, Dimensions) {
  EXPECT_EQ(truncate_membership(build_spec(PolyMatrix({{z * z}})), 8).dim(), 6u);
  EXPECT_EQ(truncate_membership(build_spec(PolyMatrix::identity(3)), 7).dim(), 21u);
  EXPECT_EQ(codim(TruncatedSubspace::whole(2, 5)), 0u);
  for (std::size_t n : {3u, 8u, 20u}) EXPECT_EQ(codim(truncate_membership(build_spec(PolyMatrix({{z}})), n)), 1u);
  EXPECT_EQ(codim(truncate_membership(build_spec(fx::scale(z * z, PolyMatrix::identity(2))), 9)), 4u);
}

TEST(Truncation, WorkedDiagonalMatchesConstraintOracle) {
  const std::size_t n = 16;
  const auto t = truncate_membership(build_spec(fx::worked_diag()), n);
  const Eigen::MatrixXcd ref = oracle::diagonal_section({{false, {0.0}}, {false, {0.5}}, {true, {}}}, n);
  EXPECT_EQ(t.dim(), static_cast<std::size_t>(ref.cols()));
  EXPECT_EQ(t.dim(), 30u);
  EXPECT_LE(oracle::span_residual(t.basis(), ref), 1e-10);
  EXPECT_LE(oracle::span_residual(ref, t.basis()), 1e-10);

  const auto one_only = truncate_membership(build_spec(fx::diag3(one, {}, {})), n);
  const Eigen::MatrixXcd ref1 = oracle::diagonal_section({{false, {}}, {true, {}}, {true, {}}}, n);
  EXPECT_EQ(one_only.dim(), 16u);
  EXPECT_LE(oracle::span_residual(one_only.basis(), ref1), 1e-10);
}

TEST(Truncation, BasisIsOrthonormalAndMembers) {
  Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const PolyMatrix a = trial % 2 ? sample_full_rank(rng, d, 2, SamplerKind::conditioned) : sample_degenerate(rng, d, 2, SamplerKind::conditioned);
    const auto s = build_spec(a);
    const auto t = truncate_membership(s, 12);
    const Eigen::MatrixXcd gram = t.basis().adjoint() * t.basis();
    EXPECT_LE((gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).norm(), 1e-10);
    for (std::size_t i = 0; i < t.dim(); i += 3) EXPECT_TRUE(member(s, t.vector(i)));
  }
}

TEST(Compare, Examples) {
  const auto u = truncate_membership(build_spec(PolyMatrix({{z}})), 10);
  const auto u2 = truncate_membership(build_spec(PolyMatrix({{z * z}})), 10);
  const auto eq = compare(u, u, 1e-10);
  EXPECT_EQ(eq.verdict, Verdict::equal);
  EXPECT_LE(eq.u_in_v, 1e-12);
  const auto c = compare(u2, u, 1e-10);
  EXPECT_EQ(c.verdict, Verdict::subset);
  EXPECT_GT(c.v_in_u, 0.5);
  EXPECT_EQ(compare(u, u2, 1e-10).verdict, Verdict::superset);
  const auto e1 = TruncatedSubspace::span_of(2, 3, to_coeffs(HVector::unit(2, 0), 3));
  const auto e2 = TruncatedSubspace::span_of(2, 3, to_coeffs(HVector::unit(2, 1), 3));
  EXPECT_EQ(compare(e1, e2, 1e-10).verdict, Verdict::incomparable);
  EXPECT_THROW(compare(e1, u, 1e-10), Error);
}

TEST(Truncation, SelfConsistencyAcrossDegrees) {
  Rng rng(27);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 4);
    const PolyMatrix a = (trial % 2 || d == 1) ? sample_full_rank(rng, d, 2, SamplerKind::conditioned) : sample_degenerate(rng, d, 2, SamplerKind::conditioned);
    const auto s = build_spec(a);
    const std::size_t n = 12;
    const auto lo = truncate_membership(s, n);
    const auto hi = intersect_low_degree(truncate_membership(s, n + 4), n);
    const auto c = compare(lo, hi, 1e-10);
    EXPECT_EQ(c.verdict, Verdict::equal) << c.u_in_v << " " << c.v_in_u;
    EXPECT_EQ(embed(lo, n + 4).dim(), lo.dim());
    EXPECT_EQ(intersect_low_degree(embed(lo, n + 4), n).dim(), lo.dim());
  }
}

TEST(Truncation, NestedBrickSpecsAreSubsets) {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(trial % 3);
    const PolyMatrix b = sample_full_rank(rng, d, 2, SamplerKind::conditioned);
    const BlaschkeProduct phi = BlaschkeProduct::factor(fx::in_disc(rng, 0.8));
    const BlaschkeProduct psi = phi * BlaschkeProduct::factor(fx::in_disc(rng, 0.8));
    std::vector<BrickSpec> small, big;
    for (std::size_t j = 0; j < d; ++j) {
      small.push_back({make_operator(b, j), psi});
      big.push_back({make_operator(b, j), phi});
    }
    const auto u = truncate_membership(brick_spec(d, small), 10);
    const auto v = truncate_membership(brick_spec(d, big), 10);
    EXPECT_EQ(compare(u, v, 1e-8).verdict, Verdict::subset);
  }
}

TEST(Theorem, RandomMatricesAgree) {
  Rng rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 2);
    const PolyMatrix a = trial % 2 ? sample_full_rank(rng, d, 3, SamplerKind::conditioned) : sample_degenerate(rng, d, 3, SamplerKind::conditioned);
    const auto r = check_theorem(a, 24, 12, 1e-7);
    EXPECT_TRUE(r.pass) << r.error << " " << r.generated_in_membership << " " << r.membership_in_generated;
  }
}

TEST(Theorem, WorkedDiagonalGeneratedSpan) {
  const std::size_t n = 24, m = 12;
  const auto g = intersect_low_degree(generated_basis(fx::worked_diag(), n), m);
  const Eigen::MatrixXcd ref = oracle::diagonal_section({{false, {0.0}}, {false, {0.5}}, {true, {}}}, m);
  EXPECT_EQ(g.dim(), static_cast<std::size_t>(ref.cols()));
  EXPECT_LE(oracle::span_residual(ref, g.basis()), 1e-7);
}

TEST(OuterDensity, Examples) {
  const auto zspec = build_spec(PolyMatrix({{z}}));
  EXPECT_LE(outer_density_check(zspec, one, 24), 1e-12);
  EXPECT_LE(outer_density_check(zspec, Poly({1.0, -0.5}), 24), 1e-6);
  EXPECT_LE(outer_density_check(build_spec(fx::worked_diag()), Poly({2.0, -1.0}), 24), 1e-5);
  EXPECT_THROW(outer_density_check(zspec, Poly(), 8), Error);
  EXPECT_THROW(outer_density_check(zspec, Poly::linear(0.5), 8), Error);
}

TEST(Export, BinaryLayout) {
  const auto t = truncate_membership(build_spec(PolyMatrix({{z}})), 4);
  std::ostringstream out;
  write_binary(t, out);
  EXPECT_EQ(out.str().size(), t.dim() * 4 * 2 * sizeof(double));
  const auto vs = basis_vectors(t);
  ASSERT_EQ(vs.size(), 3u);
  for (const auto& v : vs) {
    ASSERT_EQ(v.size(), 4u);
    EXPECT_NEAR(std::abs(v[0]), 0.0, 1e-14);
  }
}
