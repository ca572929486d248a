#include "hardy/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hardy/truncation.hpp"

namespace hardy {

PolyMatrix normalized(const PolyMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s = std::max(s, circle_sup(a(i, j)));
  return s > 0.0 ? cplx{1.0 / s} * a : a;
}

TrialReport check_theorem(const PolyMatrix& a, std::size_t n, std::size_t buffer, double tol) {
  if (buffer >= n) throw Error("check_theorem: buffer must be below the truncation degree");
  TrialReport r;
  r.d = a.rows();
  r.matrix = a;
  const SubspaceSpec spec = build_spec(a);
  r.branch = spec.kind == SpecKind::full_rank ? "full_rank" : "degenerate";
  r.rank = kronecker_rank(a);

  const TruncatedSubspace gen = generated_basis(a, n);
  const TruncatedSubspace mem = truncate_membership(spec, n);
  r.dim_generated = gen.dim();
  r.dim_membership = mem.dim();
  r.generated_in_membership = inclusion_residual(gen, mem);

  const TruncatedSubspace low_gen = intersect_low_degree(gen, n - buffer);
  r.dim_low_generated = low_gen.dim();
  for (std::size_t i = 0; i < low_gen.dim(); ++i)
    if (!member(spec, low_gen.vector(i))) ++r.low_member_failures;

  const TruncatedSubspace low_mem = truncate_membership(spec, n - buffer);
  r.dim_low_membership = low_mem.dim();
  r.membership_in_generated = inclusion_residual(embed(low_mem, n), gen);

  if (spec.kind == SpecKind::degenerate) {
    const auto good = good_multi_indices(reduce(a));
    r.good_indices = good.size();
    for (const auto& j : good) {
      if (j == *spec.good_index) continue;
      const Comparison c = compare(mem, truncate_membership(build_spec(a, j), n), tol);
      r.j_independence = std::max({r.j_independence, c.u_in_v, c.v_in_u});
    }
  }
  r.pass = r.generated_in_membership <= tol && r.low_member_failures == 0 && r.membership_in_generated <= tol &&
           r.j_independence <= tol;
  return r;
}

PolyMatrix trial_matrix(const TheoremConfig& cfg, std::size_t index, std::string& branch) {
  Rng rng(trial_seed(cfg.seed, index));
  bool degenerate = false;
  switch (cfg.mix) {
    case TrialMix::alternate: degenerate = index % 2 == 1; break;
    case TrialMix::full_rank: degenerate = false; break;
    case TrialMix::degenerate: degenerate = true; break;
  }
  std::size_t d = 0;
  if (cfg.d) {
    d = *cfg.d;
  } else {
    d = static_cast<std::size_t>(std::uniform_int_distribution<int>(degenerate ? 2 : 1, 4)(rng));
  }
  if (d < 2) degenerate = false;
  branch = degenerate ? "degenerate" : "full_rank";
  PolyMatrix a = degenerate ? sample_degenerate(rng, d, cfg.max_degree, cfg.sampler) : sample_full_rank(rng, d, cfg.max_degree, cfg.sampler);
  return cfg.normalize ? normalized(a) : a;
}

std::vector<TrialReport> verify_theorem(const TheoremConfig& cfg) {
  std::vector<TrialReport> out(cfg.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cfg.trials; i = next++) {
      TrialReport r;
      std::string branch;
      try {
        const PolyMatrix a = trial_matrix(cfg, i, branch);
        r = check_theorem(a, cfg.n, cfg.buffer, cfg.tol);
      } catch (const Error& e) {
        r.pass = false;
        r.error = e.what();
        r.branch = branch;
      }
      r.index = i;
      r.seed = trial_seed(cfg.seed, i);
      out[i] = std::move(r);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

json to_json(const TrialReport& r) {
  json j = {{"trial", r.index},
            {"seed", r.seed},
            {"branch", r.branch},
            {"d", r.d},
            {"rank", r.rank},
            {"pass", r.pass},
            {"dims",
             {{"generated", r.dim_generated},
              {"membership", r.dim_membership},
              {"low_generated", r.dim_low_generated},
              {"low_membership", r.dim_low_membership}}},
            {"residuals",
             {{"generated_in_membership", r.generated_in_membership},
              {"membership_in_generated", r.membership_in_generated},
              {"j_independence", r.j_independence}}},
            {"low_member_failures", r.low_member_failures},
            {"good_indices", r.good_indices}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json theorem_report(const TheoremConfig& cfg, const std::vector<TrialReport>& trials) {
  json list = json::array();
  std::size_t passed = 0;
  double worst = 0.0;
  for (const auto& t : trials) {
    list.push_back(to_json(t));
    if (t.pass) ++passed;
    worst = std::max({worst, t.generated_in_membership, t.membership_in_generated, t.j_independence});
  }
  json config = {{"seed", cfg.seed},
                 {"trials", cfg.trials},
                 {"max_degree", cfg.max_degree},
                 {"n", cfg.n},
                 {"buffer", cfg.buffer},
                 {"tol", cfg.tol},
                 {"sampler", to_string(cfg.sampler)},
                 {"normalize", cfg.normalize}};
  config["d"] = cfg.d ? json(*cfg.d) : json("random");
  return {{"config", config}, {"passed", passed}, {"total", trials.size()}, {"worst_residual", worst}, {"trials", list}};
}

}  // namespace hardy
