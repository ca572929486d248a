#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hardy/harness.hpp"

using namespace hardy;

TEST(Sampling, SeedsAreDeterministicAndDistinct) {
  EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
  EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
  EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
  EXPECT_EQ(sampler_from_string("plain"), SamplerKind::plain);
  EXPECT_THROW(sampler_from_string("other"), Error);
}

TEST(Sampling, MatricesHaveRequestedShape) {
  for (auto kind : {SamplerKind::conditioned, SamplerKind::plain}) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t d = 2 + static_cast<std::size_t>(trial % 3);
      const PolyMatrix f = sample_full_rank(rng, d, 3, kind);
      EXPECT_LE(f.max_degree(), 3);
      EXPECT_EQ(kronecker_rank(f), static_cast<int>(d));
      const PolyMatrix g = sample_degenerate(rng, d, 3, kind);
      EXPECT_LE(g.max_degree(), 3);
      EXPECT_LT(kronecker_rank(g), static_cast<int>(d));
      EXPECT_GE(kronecker_rank(g), 1);
    }
  }
  Rng rng(1);
  EXPECT_THROW(sample_degenerate(rng, 1, 3, SamplerKind::conditioned), Error);
}

TEST(Harness, ThreadCountDoesNotChangeResults) {
  TheoremConfig cfg;
  cfg.seed = 99;
  cfg.trials = 6;
  cfg.n = 32;
  cfg.buffer = 16;
  cfg.threads = 1;
  const auto one = verify_theorem(cfg);
  cfg.threads = 3;
  const auto many = verify_theorem(cfg);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(to_json(one[i]), to_json(many[i]));
    EXPECT_TRUE(one[i].pass) << one[i].error;
  }
  const json rep = theorem_report(cfg, one);
  EXPECT_EQ(rep.at("passed"), 6);
}

TEST(Harness, NormalizationKeepsTheSubspace) {
  Rng rng(6);
  const PolyMatrix a = sample_full_rank(rng, 3, 3, SamplerKind::conditioned);
  const PolyMatrix b = normalized(a);
  double top = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) top = std::max(top, circle_sup(b(i, j)));
  EXPECT_NEAR(top, 1.0, 1e-12);
  EXPECT_TRUE(check_theorem(b, 32, 16, 1e-7).pass);
}
