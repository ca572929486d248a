#include "hardy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "CLI11.hpp"
#include "hardy/enclosure.hpp"
#include "hardy/harness.hpp"

namespace hardy::cli {
namespace {

// Raised while decoding input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string json_in;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  std::size_t d = 0;
  int deg = 3;
  std::size_t n = 32;
  std::size_t buffer = 0;
  double tol = -1.0;
  std::string sampler = "conditioned";
  std::string mix = "alternate";
  bool normalize = false;
  unsigned threads = 1;
};

struct Outcome {
  json report;
  int code = ok;
};

json read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.json_in.empty()) {
    std::ifstream f(opt.json_in);
    if (!f) throw InputError("cannot open " + opt.json_in);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Unwraps {"key": value} when present, otherwise returns the document itself.
const json& unwrap(const json& doc, const char* key) { return doc.is_object() && doc.contains(key) ? doc.at(key) : doc; }

template <class F>
auto decode(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(e.what());
  } catch (const json::exception& e) {
    throw InputError(e.what());
  }
}

PolyMatrix input_matrix(const json& doc) { return decode([&] { return matrix_from_json(unwrap(doc, "matrix")); }); }

Outcome cmd_factor(const json& doc) {
  const Poly p = decode([&] { return poly_from_json(unwrap(doc, "poly")); });
  if (p.is_zero()) throw InputError("cannot factor zero");
  const Factorization f = inner_outer_factor(p);
  // sup over a circle grid of |inner * outer - p|
  double err = 0.0;
  for (int k = 0; k < 512; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / 512);
    err = std::max(err, std::abs(f.inner(z) * f.outer(z) - p(z)));
  }
  return {{{"inner", to_json(f.inner)}, {"outer", to_json(f.outer)}, {"reconstruction_error", err}}, ok};
}

Outcome cmd_gcd(const json& doc) {
  const json& list = unwrap(doc, "list");
  const auto items = decode([&] {
    if (!list.is_array() || list.empty()) throw Error("gcd expects a nonempty array of Blaschke products");
    std::vector<BlaschkeProduct> v;
    for (const auto& x : list) v.push_back(blaschke_from_json(x));
    return v;
  });
  return {{{"gcd", to_json(gcd_inner(items))}}, ok};
}

Outcome cmd_rank(const json& doc) { return {{{"rank", kronecker_rank(input_matrix(doc))}}, ok}; }

Outcome cmd_reduce(const json& doc) {
  const PolyMatrix a = input_matrix(doc);
  const ReducedMatrix r = decode([&] { return reduce(a); });
  return {{{"entry_inner_gcd", to_json(r.entry_inner_gcd)}, {"reduced", to_json(r.reduced)}, {"rank", kronecker_rank(r.reduced)}}, ok};
}

Outcome cmd_spec(const json& doc) {
  const PolyMatrix a = input_matrix(doc);
  std::optional<MultiIndex> cols;
  if (doc.is_object() && doc.contains("J")) cols = decode([&] { return index_from_json(doc.at("J")); });
  const SubspaceSpec s = decode([&] { return build_spec(a, cols); });
  return {to_json(s), ok};
}

Outcome cmd_member(const json& doc) {
  if (!doc.is_object() || !doc.contains("vector")) throw InputError("member expects {\"spec\" | \"matrix\", \"vector\"}");
  const SubspaceSpec s = decode([&] {
    if (doc.contains("spec")) return spec_from_json(doc.at("spec"));
    if (doc.contains("matrix")) return build_spec(matrix_from_json(doc.at("matrix")));
    throw Error("member expects a \"spec\" or a \"matrix\"");
  });
  const HVector f = decode([&] { return hvector_from_json(doc.at("vector")); });
  if (f.dim() != s.dim) throw InputError("vector dimension does not match the spec");

  json diag = {{"dim", s.dim}};
  bool divisible = true;
  HVector g(s.dim);
  for (std::size_t j = 0; j < s.dim; ++j) {
    if (!inner_divides_poly(s.entry_inner_gcd, f[j])) divisible = false;
    else g[j] = divide_out(f[j], s.entry_inner_gcd);
  }
  diag["divisible"] = divisible;
  if (divisible) {
    json failed = json::array();
    for (std::size_t i = 0; i < s.bricks.size(); ++i)
      if (!brick_member(s.bricks[i], g)) failed.push_back(i + 1);
    diag["bricks_failed"] = failed;
    diag["rank_space"] = s.rank_space ? json(rank_space_member(*s.rank_space, g)) : json(nullptr);
  }
  return {{{"member", member(s, f)}, {"diagnostics", diag}}, ok};
}

Outcome cmd_verify(const Options& opt) {
  TheoremConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  if (opt.d != 0) cfg.d = opt.d;
  cfg.max_degree = opt.deg;
  cfg.n = opt.n;
  cfg.buffer = opt.buffer != 0 ? opt.buffer : opt.n / 2;
  if (opt.tol > 0) cfg.tol = opt.tol;
  cfg.sampler = decode([&] { return sampler_from_string(opt.sampler); });
  if (opt.mix == "alternate") cfg.mix = TrialMix::alternate;
  else if (opt.mix == "full_rank") cfg.mix = TrialMix::full_rank;
  else if (opt.mix == "degenerate") cfg.mix = TrialMix::degenerate;
  else throw InputError("unknown --mix: " + opt.mix);
  cfg.normalize = opt.normalize;
  cfg.threads = opt.threads;
  if (cfg.buffer >= cfg.n) throw InputError("--buffer must be below --n");
  const auto trials = verify_theorem(cfg);
  json rep = theorem_report(cfg, trials);
  const bool all = std::all_of(trials.begin(), trials.end(), [](const TrialReport& t) { return t.pass; });
  return {std::move(rep), all ? ok : check_failed};
}

Outcome cmd_enlarge(const json& doc, const Options& opt) {
  const PolyMatrix a = input_matrix(doc);
  if (!a.is_square()) throw InputError("enlarge expects a square matrix");
  if (a.is_zero()) throw InputError("enlarge expects a nonzero matrix");
  EnclosureOptions eo;
  eo.n = opt.n;
  try {
    const EnclosureResult r = enclosure(a, eo);
    json rep = {{"case", r.case_tag},
                {"M", to_json(r.m_spec)},
                {"witnesses", {{"w_in", to_json(r.w_in)}, {"w_out", to_json(r.w_out)}}},
                {"checks", {{"w_in_in_M", r.w_in_in_m}, {"w_in_in_N", r.w_in_in_n}, {"w_out_in_M", r.w_out_in_m}, {"containment_residual", r.containment}}},
                {"dims", {{"n", eo.n}, {"N", r.dim_n}, {"M", r.dim_m}, {"ambient", r.ambient}, {"codim_N", r.codim_n}, {"codim_N_next", r.codim_next}}},
                {"verified", r.verified()}};
    return {std::move(rep), r.verified() ? ok : check_failed};
  } catch (const Error& e) {
    return {{{"error", e.what()}}, check_failed};
  }
}

Outcome cmd_corona(const json& doc, const Options& opt) {
  const json& list = unwrap(doc, "list");
  const auto items = decode([&] {
    if (!list.is_array() || list.empty()) throw Error("corona expects a nonempty array of Blaschke products");
    std::vector<BlaschkeProduct> v;
    for (const auto& x : list) v.push_back(blaschke_from_json(x));
    return v;
  });
  int top = 30;
  if (doc.is_object() && doc.contains("max_degree")) top = decode([&] { return doc.at("max_degree").get<int>(); });
  if (top < 0) throw InputError("max_degree must be nonnegative");
  const double tol = opt.tol > 0 ? opt.tol : 1e-6;
  json curve = json::array();
  double prev = INFINITY, last = 0.0;
  bool monotone = true;
  for (int k = 0; k <= top; ++k) {
    const CoronaResult r = corona_approx(items, k);
    if (r.residual > prev + 1e-13) monotone = false;
    prev = r.residual;
    last = r.residual;
    curve.push_back({{"degree", k}, {"residual", r.residual}});
  }
  const bool pass = monotone && last <= tol;
  return {{{"gcd", to_json(gcd_inner(items))}, {"curve", curve}, {"monotone", monotone}, {"final_residual", last}, {"tol", tol}, {"pass", pass}}, pass ? ok : check_failed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shift-invariant subspaces of finite sums of Hardy spaces"};
  app.require_subcommand(1);
  Options opt;

  auto io = [&](CLI::App* sub) {
    sub->add_option("--json-in", opt.json_in, "Read JSON input from FILE instead of stdin");
    sub->add_option("--out", opt.out, "Write the JSON report to FILE");
  };
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    io(sub);
    return sub;
  };

  CLI::App* factor = add("factor", "Inner-outer factorization of a polynomial");
  CLI::App* gcd = add("gcd", "Inner GCD of Blaschke products");
  CLI::App* rank = add("rank", "Kronecker rank of a polynomial matrix");
  CLI::App* red = add("reduce", "Entry inner GCD and reduced matrix");
  CLI::App* spec = add("spec", "Subspace spec of a square matrix");
  CLI::App* mem = add("member", "Membership of a vector in a spec");
  CLI::App* verify = add("verify-theorem", "Randomized check of generated span against the membership set");
  CLI::App* enlarge = add("enlarge", "Strictly larger proper invariant subspace with witnesses");
  CLI::App* corona = add("corona", "Least-squares Bezout residual curve");

  verify->add_option("--seed", opt.seed, "Base seed");
  verify->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  verify->add_option("--d", opt.d, "Ambient index (random in 1..4 when omitted)")->check(CLI::Range(1, 4));
  verify->add_option("--deg", opt.deg, "Maximum entry degree")->check(CLI::Range(0, 4));
  verify->add_option("--n", opt.n, "Truncation degree")->check(CLI::PositiveNumber);
  verify->add_option("--buffer", opt.buffer, "Degree buffer (default n/2)");
  verify->add_option("--tol", opt.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--sampler", opt.sampler, "conditioned | plain");
  verify->add_option("--mix", opt.mix, "alternate | full_rank | degenerate");
  verify->add_flag("--normalize", opt.normalize, "Scale entries by the largest circle sup");
  verify->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  enlarge->add_option("--n", opt.n, "Truncation degree")->check(CLI::Range(4, 256));
  corona->add_option("--tol", opt.tol, "Required final residual")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return input_error;
  }

  Outcome result;
  try {
    if (verify->parsed()) {
      result = cmd_verify(opt);
    } else {
      const json doc = read_input(opt, in);
      if (factor->parsed()) result = cmd_factor(doc);
      else if (gcd->parsed()) result = cmd_gcd(doc);
      else if (rank->parsed()) result = cmd_rank(doc);
      else if (red->parsed()) result = cmd_reduce(doc);
      else if (spec->parsed()) result = cmd_spec(doc);
      else if (mem->parsed()) result = cmd_member(doc);
      else if (enlarge->parsed()) result = cmd_enlarge(doc, opt);
      else if (corona->parsed()) result = cmd_corona(doc, opt);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) {
      err << "cannot write " << opt.out << "\n";
      return input_error;
    }
    f << text;
  } else {
    out << text;
  }
  return result.code;
}

}  // namespace hardy::cli
