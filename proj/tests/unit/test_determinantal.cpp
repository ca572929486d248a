#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hardy/determinantal.hpp"

using namespace hardy;

namespace {

const Poly z({0.0, 1.0});
const Poly half({0.5, -1.0});
const Poly one = Poly::constant(1.0);

// Substitute F's selected components into row `row` and take the determinant by the DFT oracle.
oracle::Coeffs substituted_det(const DeterminantalOperatorSpec& op, const HVector& f) {
  auto m = fx::coeffs(op.matrix);
  for (std::size_t k = 0; k < op.cols.size(); ++k) m[op.row][k] = f[op.cols[k]].coeffs();
  return oracle::dft_det(m);
}

DeterminantalOperatorSpec random_operator(Rng& rng, std::size_t& d) {
  std::uniform_int_distribution<std::size_t> pick(1, 4);
  const std::size_t m = pick(rng);
  d = m + pick(rng) % 2;
  PolyMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = fx::random_poly(rng, static_cast<int>(pick(rng)) - 1);
  auto subsets = combinations(d, m);
  const MultiIndex cols = subsets[pick(rng) % subsets.size()];
  return make_operator(b, pick(rng) % m, cols, d);
}

}  // namespace

TEST(Operator, IdentityInDimensionOne) {
  const auto op = make_operator(PolyMatrix({{one}}), 0, {0}, 1);
  const HVector f = HVector::unit(1, 0, Poly({1.0, 2.0, 3.0}));
  EXPECT_EQ(apply_L(op, f).coeffs(), f[0].coeffs());
}

TEST(Operator, DiagonalExample) {
  const auto op = make_operator(PolyMatrix::diagonal({z, half}), 0, {0, 1}, 2);
  Rng rng(3);
  const HVector f = fx::random_vector(rng, 2, 3);
  EXPECT_LE(oracle::max_diff(apply_L(op, f).coeffs(), oracle::convolve(f[0].coeffs(), half.coeffs())), 1e-14);
}

TEST(Operator, MatchesSubstitutedDeterminant) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 0;
    const auto op = random_operator(rng, d);
    const HVector f = fx::random_vector(rng, d, 3);
    const auto ref = substituted_det(op, f);
    EXPECT_LE(oracle::max_diff(apply_L(op, f).coeffs(), ref), 1e-10 * (1.0 + oracle::max_abs(ref)));
  }
}

TEST(Operator, IntertwinesLinearAndBounded) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t d = 0;
    const auto op = random_operator(rng, d);
    const HVector f = fx::random_vector(rng, d, 4), g = fx::random_vector(rng, d, 2);
    const cplx lambda = fx::gauss(rng);
    const Poly lf = apply_L(op, f);
    const double scale = 1.0 + lf.max_abs();
    EXPECT_LE(oracle::max_diff(apply_L(op, shift(f)).coeffs(), shift(lf).coeffs()), 1e-12 * scale);
    const Poly lin = apply_L(op, f + lambda * g);
    const Poly sum = lf + lambda * apply_L(op, g);
    EXPECT_LE(oracle::max_diff(lin.coeffs(), sum.coeffs()), 1e-10 * (1.0 + sum.max_abs()));
    double c = 0.0;
    for (const auto& cof : op.cofactors) c = std::max(c, circle_sup(cof));
    EXPECT_LE(h2_norm(lf), c * std::sqrt(static_cast<double>(op.cols.size())) * h2_norm(f) * (1.0 + 1e-9));
  }
}

TEST(Operator, Validation) {
  EXPECT_THROW(make_operator(PolyMatrix(2, 3), 0), Error);
  EXPECT_THROW(make_operator(PolyMatrix::identity(2), 2), Error);
  EXPECT_THROW(make_operator(PolyMatrix::identity(2), 0, {1, 0}, 2), Error);
  EXPECT_THROW(make_operator(PolyMatrix::identity(2), 0, {0, 2}, 2), Error);
  const auto op = make_operator(PolyMatrix::identity(2), 0);
  EXPECT_THROW(apply_L(op, HVector(3)), Error);
}

TEST(Brick, Examples) {
  const BrickSpec b{make_operator(PolyMatrix({{one}}), 0), BlaschkeProduct::factor(0.0)};
  EXPECT_TRUE(brick_member(b, HVector::unit(1, 0, Poly({0.0, 1.0, 1.0}))));
  EXPECT_FALSE(brick_member(b, HVector::unit(1, 0, one)));
  EXPECT_TRUE(brick_member(b, HVector(1)));

  // L(F) = f1 (1/2 - z), target z * b_{1/2}: member iff f1(0) = 0
  const BrickSpec p{make_operator(PolyMatrix::diagonal({z, half}), 0), BlaschkeProduct::factor(0.0) * BlaschkeProduct::factor(0.5)};
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    HVector f = fx::random_vector(rng, 2, 3);
    EXPECT_FALSE(brick_member(p, f));
    f[0] = z * f[0];
    EXPECT_TRUE(brick_member(p, f));
  }
}

TEST(Brick, ClosedUnderShiftAndSum) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const cplx a = fx::in_disc(rng, 0.9);
    const PolyMatrix b = sample_full_rank(rng, 2, 2, SamplerKind::conditioned);
    const BrickSpec brick{make_operator(b, 0), BlaschkeProduct::factor(a)};
    // F with L(F) vanishing at a: the second row of b always works, plus (z - a) times anything
    const HVector f = b.row(1);
    const HVector g = Poly::linear(a) * fx::random_vector(rng, 2, 2);
    ASSERT_TRUE(brick_member(brick, f));
    ASSERT_TRUE(brick_member(brick, g));
    EXPECT_TRUE(brick_member(brick, f + g));
    EXPECT_TRUE(brick_member(brick, shift(f)));
    EXPECT_TRUE(brick_member(brick, shift(g)));
  }
}

TEST(RankSpace, WorkedDiagonal) {
  const auto rs = make_rank_space(reduce(fx::worked_diag()));
  EXPECT_EQ(rs.rank, 2);
  Rng rng(1);
  HVector f = fx::random_vector(rng, 3, 4);
  f[2] = Poly();
  EXPECT_TRUE(rank_space_member(rs, f));
  EXPECT_TRUE(rank_space_member(rs, HVector::unit(3, 0)));
  EXPECT_FALSE(rank_space_member(rs, HVector::unit(3, 2, BlaschkeProduct::factor(0.3).numerator())));
  EXPECT_FALSE(rank_space_member(rs, HVector::unit(3, 2)));
}

TEST(RankSpace, RowsAndCombinationsAreMembers) {
  Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const auto red = reduce(sample_degenerate(rng, d, 2, SamplerKind::conditioned));
    const auto rs = make_rank_space(red);
    HVector combo(d);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_TRUE(rank_space_member(rs, red.reduced.row(i)));
      combo += fx::random_poly(rng, 2) * red.reduced.row(i);
    }
    EXPECT_TRUE(rank_space_member(rs, combo));
  }
}

TEST(GoodIndices, Examples) {
  const auto r2 = reduce(fx::worked_rank_two());
  EXPECT_EQ(good_multi_indices(r2), (std::vector<MultiIndex>{{0, 1}, {0, 2}}));
  EXPECT_EQ(jgood_rows(r2, {0, 1}), (std::vector<MultiIndex>{{0, 1}, {0, 2}}));
  EXPECT_EQ(jgood_rows(r2, {0, 2}), (std::vector<MultiIndex>{{0, 1}, {0, 2}}));
  EXPECT_EQ(fx::zeros(phi_JA(r2, {0, 1})), oracle::Multiset{0.0});

  const auto rd = reduce(fx::worked_diag());
  EXPECT_EQ(good_multi_indices(rd), (std::vector<MultiIndex>{{0, 1}}));
  EXPECT_EQ(jgood_rows(rd, {0, 1}), (std::vector<MultiIndex>{{0, 1}}));
  const auto phi = fx::zeros(phi_JA(rd, {0, 1}));
  EXPECT_TRUE(oracle::contains(phi, {0.0, 0.5}) && oracle::contains({0.0, 0.5}, phi));

  const auto r1 = reduce(fx::diag3(one, {}, {}));
  EXPECT_TRUE(phi_JA(r1, {0}).is_constant());
  EXPECT_THROW(phi_JA(rd, {0, 2}), Error);
  EXPECT_THROW(phi_JA(rd, {0}), Error);
}

TEST(GoodIndices, RowsVerifiedByDeterminantOracle) {
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
    const auto red = reduce(sample_degenerate(rng, d, 2, SamplerKind::conditioned));
    for (const auto& j : good_multi_indices(red)) {
      const auto rows = jgood_rows(red, j);
      EXPECT_FALSE(rows.empty());
      for (const auto& s : combinations(d, j.size())) {
        const auto ref = oracle::dft_det(fx::coeffs(minor(red.reduced, s, j)));
        const bool nonzero = oracle::max_abs(ref) > 1e-8;
        EXPECT_EQ(nonzero, std::find(rows.begin(), rows.end(), s) != rows.end());
      }
    }
  }
}
