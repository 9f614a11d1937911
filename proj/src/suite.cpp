#include "planarop/suite.hpp"

#include <atomic>
#include <random>
#include <thread>

#include "planarop/characterizations.hpp"
#include "planarop/error.hpp"
#include "planarop/gram.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/rh.hpp"
#include "planarop/type_two.hpp"

namespace planarop {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform enough for corpus generation; modulo bias is irrelevant here and
  // the result depends only on the engine output.
  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

std::string violations_detail(const CheckReport& r) {
  if (r.pass) return {};
  std::string d = std::to_string(r.violations.size()) + " violation(s)";
  if (!r.violations.empty()) {
    const auto& v = r.violations.front();
    d += ", first k=" + std::to_string(v.k);
    if (v.m) d += " m=" + std::to_string(*v.m);
    d += " value " + v.value.to_string();
  }
  if (!r.note.empty()) d += "; " + r.note;
  return d;
}

std::string rh_detail(const RHReport& r) {
  std::string d;
  for (const auto& o : r.offending) {
    if (!d.empty()) d += "; ";
    d += o;
  }
  return d;
}

class CaseRunner {
 public:
  CaseRunner(const CorpusCase& c, const SuiteOptions& o) : w_(c.weight), n_(c.n), opt_(o), result_{c, {}} {}

  CaseResult run() {
    // Each step is guarded so one exception does not hide the other checks.
    guard("gram", [&] { gram(); });
    guard("monic_op", [&] { op(); });
    if (!P_) return std::move(result_);
    guard("characterization_b", [&] { add(check_b(MonicOP{n_, *P_}, w_)); });
    guard("characterization_c", [&] { char_c(); });
    guard("type_one", [&] { type_one(); });
    guard("type_two", [&] { type_two(); });
    guard("fundamental_identity", [&] { fundamental_identity(); });
    guard("rh", [&] { rh(); });
    return std::move(result_);
  }

 private:
  template <class F>
  void guard(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name + "_exception", false, e.what());
    }
  }

  void add(std::string name, bool pass, std::string detail = {}) {
    result_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void add(const CheckReport& r) { add(r.check, r.pass, violations_detail(r)); }

  void gram() {
    GramMatrix g(w_, n_);
    add("gram_hermitian_positive", g.is_hermitian() && g.is_positive_definite());
    bool same = true;
    std::string where;
    for (unsigned j = 0; j <= n_ && same; ++j)
      for (unsigned k = 0; k <= n_ && same; ++k)
        if (gram_via_fourier(w_, j, k) != g(j, k)) {
          same = false;
          where = "entry (" + std::to_string(j) + "," + std::to_string(k) + ")";
        }
    add("gram_fourier_oracle", same, where);
    gram_ = std::make_unique<GramMatrix>(std::move(g));
  }

  void op() {
    MonicOP m = gram_ ? monic_op(*gram_) : monic_op(w_, n_);
    P_ = m.P;
    if (opt_.perturb) P_ = *P_ + CPoly::monomial(n_ - 1, 1);
  }

  void char_c() {
    CheckReport r = check_c(MonicOP{n_, *P_}, w_);
    add(r);
    auto it = r.diagnostics.find("coeff_z^n");
    bool nonzero = it != r.diagnostics.end() && !it->second.is_zero();
    add("c_leading_nonzero", nonzero, nonzero ? "" : "degenerate: z^n coefficient is zero");
  }

  void type_one() {
    TypeISolution sol = solve_type_one(w_, n_);
    Qs_ = sol.Qs;
    add("d_equals_moment_solution", sol.P == *P_, sol.P == *P_ ? "" : "P from type I system differs");
    sol.P = *P_;
    add(check_type_one_contour(sol, w_));
    add(check_reduced_type_one(sol, w_, true));
    for (std::size_t p0 = 1; p0 <= w_.p(); ++p0) {
      add(check_singled_out(sol, w_, p0));
    }
  }

  void type_two() {
    MultiIndex idx = choose_multi_index(n_, w_.p());
    add(check_type_two(MonicOP{n_, *P_}, w_, idx));
    std::string what;
    bool ok = true;
    try {
      build_qkm_family(w_, idx);
    } catch (const Error& e) {
      ok = false;
      what = e.what();
    }
    add("qkm_exact_division", ok, what);
    const std::size_t r = qkm_rank(w_, idx);
    add("qkm_rank", r == n_, r == n_ ? "" : "rank " + std::to_string(r));
    ok = true;
    what.clear();
    for (std::size_t k = 1; k <= w_.p() && ok; ++k)
      for (unsigned m = 0; m < idx[k - 1] && ok; ++m) try {
          decompose_zmwk(w_, idx, k, m);
        } catch (const Error& e) {
          ok = false;
          what = e.what();
        }
    add("zmwk_decomposition", ok, what);
  }

  void fundamental_identity() {
    bool ok = true;
    std::string where;
    for (unsigned j = 0; j <= n_ && ok; ++j)
      for (unsigned k = 0; k <= n_ && ok; ++k)
        if (!verify_fundamental_identity(CPoly::monomial(j, 1), CPoly::monomial(k, 1), w_).pass) {
          ok = false;
          where = "z^" + std::to_string(j) + ", z^" + std::to_string(k);
        }
    add("fundamental_identity_grid", ok, where);
  }

  void rh_check(const std::string& name, const RHSolution& s, const mpq_class& radius, bool first_row_is_p) {
    RHReport rep = verify_rhp(s.y, s.problem, sample_points(opt_.samples, radius), opt_.prec);
    add(name, rep.pass(), rh_detail(rep));
    if (first_row_is_p) {
      bool same = s.y.outside[0][0] == ExpRational(*P_);
      add(name + "_first_row", same, same ? "" : "first row differs from P_n");
    }
  }

  void rh() {
    rh_check("rh_full", build_typeI_full(w_, n_), 1, true);
    for (std::size_t p0 = 1; p0 <= w_.p(); ++p0)
      rh_check("rh_singled_" + std::to_string(p0), build_typeI_singled(w_, n_, p0), 1, true);
    MultiIndex idx = choose_multi_index(n_, w_.p());
    rh_check("rh_typeII", build_typeII(w_, n_, idx), 1, true);
    if (w_.has_node_at_origin()) {
      add("rh_reduced", true, "not applicable: node at the origin");
    } else {
      RHSolution red = build_typeI_reduced(w_, n_);
      rh_check("rh_reduced", red, safe_sample_radius(w_), false);
      bool same = true;
      for (std::size_t j = 0; j < w_.p(); ++j) same = same && red.y.outside[w_.p()][j] == ExpRational(Qs_[j]);
      std::vector<CPoly> qs;
      for (std::size_t j = 0; j < w_.p(); ++j) qs.push_back(red.y.outside[w_.p()][j].as_laurent().polynomial_part());
      same = same && recover_p_from_reduced(w_, n_, qs) == *P_;
      add("rh_reduced_last_row", same, same ? "" : "last row does not reproduce the type I solution");
    }
    RHSolution lit = build_typeII(w_, n_, idx, true);
    RHReport lrep = verify_rhp(lit.y, lit.problem, sample_points(opt_.samples), opt_.prec);
    result_.literal_wk_asymptotics_fail = !lrep.asymptotics;
  }

  const WeightSpec& w_;
  unsigned n_;
  const SuiteOptions& opt_;
  CaseResult result_;
  std::unique_ptr<GramMatrix> gram_;
  std::optional<CPoly> P_;
  std::vector<CPoly> Qs_;
};

}  // namespace

std::vector<CorpusCase> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& b) {
  Draw draw(seed);
  std::vector<CorpusCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = static_cast<std::size_t>(draw.between(1, static_cast<long>(b.max_p)));
    std::vector<Node> nodes;
    while (nodes.size() < p) {
      mpq_class re(draw.between(-b.max_abs_num, b.max_abs_num), draw.between(1, b.max_den));
      mpq_class im(draw.between(-b.max_abs_num, b.max_abs_num), draw.between(1, b.max_den));
      GaussianRational a(re, im);
      bool dup = false;
      for (const auto& nd : nodes) dup = dup || nd.a == a;
      const auto c = static_cast<unsigned>(draw.between(1, b.max_c));
      if (!dup) nodes.push_back(Node{a, c});
    }
    const auto n = static_cast<unsigned>(draw.between(b.min_n, b.max_n));
    out.push_back(CorpusCase{i, WeightSpec(std::move(nodes)), n});
  }
  return out;
}

bool CaseResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::vector<std::string> CaseResult::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

std::size_t SuiteReport::passed() const {
  std::size_t k = 0;
  for (const auto& c : cases) k += c.pass() ? 1 : 0;
  return k;
}

std::size_t SuiteReport::detected() const { return cases.size() - passed(); }

bool SuiteReport::pass() const {
  if (!options.perturb) return passed() == cases.size();
  // detected / cases >= 95%
  return 100 * detected() >= 95 * cases.size();
}

CaseResult run_case(const CorpusCase& c, const SuiteOptions& options) { return CaseRunner(c, options).run(); }

SuiteReport run_equivalence_suite(const std::vector<CorpusCase>& corpus, const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;
  report.cases.resize(corpus.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, corpus.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) report.cases[i] = run_case(corpus[i], options);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  if (threads > 0) worker();
  pool.clear();
  return report;
}

SuiteReport run_equivalence_suite(const SuiteOptions& options) {
  return run_equivalence_suite(generate_corpus(options.seed, options.cases), options);
}

json to_json(const CaseResult& r, bool perturb) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  json out{{"case", r.input.index},
           {"weight", to_json(r.input.weight)},
           {"n", r.input.n},
           {"checks", checks},
           {"pass", r.pass()},
           {"literal_wk_asymptotics_fail", r.literal_wk_asymptotics_fail}};
  if (perturb) out["detected"] = !r.pass();
  return out;
}

json to_json(const SuiteReport& r) {
  json cases = json::array();
  std::vector<std::size_t> survivors;
  std::size_t literal_fail = 0;
  for (const auto& c : r.cases) {
    cases.push_back(to_json(c, r.options.perturb));
    if (r.options.perturb && c.pass()) survivors.push_back(c.input.index);
    literal_fail += c.literal_wk_asymptotics_fail ? 1 : 0;
  }
  json summary{{"cases", r.cases.size()},
               {"passed", r.passed()},
               {"failed", r.cases.size() - r.passed()},
               {"literal_wk_asymptotics_fail", literal_fail}};
  if (r.options.perturb) {
    summary["detected"] = r.detected();
    summary["survivors"] = survivors;
  }
  json body{{"seed", std::to_string(r.options.seed)},
            {"perturb", r.options.perturb},
            {"prec", r.options.prec},
            {"samples", r.options.samples},
            {"cases", cases},
            {"summary", summary},
            {"pass", r.pass()}};
  return with_schema(std::move(body), "suite");
}

}  // namespace planarop
