// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 input error, 3 arithmetic or internal error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "planarop/characterizations.hpp"
#include "planarop/error.hpp"
#include "planarop/gram.hpp"
#include "planarop/io.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/rh.hpp"
#include "planarop/suite.hpp"
#include "planarop/type_two.hpp"
#include "planarop/zeros.hpp"

using namespace planarop;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kInputError = 2, kArithmeticError = 3 };

struct Common {
  std::string weight_file;
  unsigned n = 0;
  long prec = 0;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c, bool needs_weight = true) {
  auto* w = cmd->add_option("--weight", c.weight_file, "weight JSON file");
  if (needs_weight) {
    w->required()->check(CLI::ExistingFile);
    cmd->add_option("--n", c.n, "degree n")->required();
  }
  cmd->add_option("--prec", c.prec, "working precision in bits (default PLANAROP_PREC or 256)");
  cmd->add_option("--out", c.out, "output path (default stdout)");
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

RunConfig config_from(const Common& c, bool needs_weight = true) {
  RunConfig cfg;
  if (needs_weight) cfg.weight = load_weight_file(c.weight_file);
  cfg.n = c.n;
  cfg.precision_bits = c.prec != 0 ? static_cast<mpfr_prec_t>(c.prec) : default_precision();
  cfg.out_path = c.out;
  cfg.format = c.format;
  cfg.validate();
  return cfg;
}

void require_json(const RunConfig& cfg, const std::string& cmd) {
  if (cfg.format != "json") throw Error(Errc::invalid_input, cmd + " only writes json");
}

json header(const RunConfig& cfg) { return {{"weight", to_json(cfg.weight)}, {"n", cfg.n}}; }

int finish(const RunConfig& cfg, json body, const std::string& kind, bool pass) {
  body["pass"] = pass;
  emit(dump(with_schema(std::move(body), kind)), cfg.out_path);
  return pass ? kPass : kCheckFailed;
}

int cmd_compute(const RunConfig& cfg) {
  require_json(cfg, "compute");
  json body = header(cfg);
  body["P"] = to_json(monic_op(cfg.weight, cfg.n).P);
  return finish(cfg, body, "monic_op", true);
}

int cmd_moments(const RunConfig& cfg) {
  GramMatrix g(cfg.weight, cfg.n);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "j,k,value\n";
    for (unsigned j = 0; j <= cfg.n; ++j)
      for (unsigned k = 0; k <= cfg.n; ++k) out << j << ',' << k << ',' << complex_string(g(j, k)) << '\n';
    emit(out.str(), cfg.out_path);
    return kPass;
  }
  json body = header(cfg);
  body["gram"] = to_json(g);
  return finish(cfg, body, "gram", g.is_hermitian() && g.is_positive_definite());
}

int cmd_typeone(const RunConfig& cfg, unsigned buffer) {
  require_json(cfg, "typeone");
  TypeISolution sol = solve_type_one(cfg.weight, cfg.n, buffer);
  CheckReport contour = check_type_one_contour(sol, cfg.weight);
  json body = header(cfg);
  body["solution"] = to_json(sol);
  body["contour"] = to_json(contour);
  return finish(cfg, body, "type_one", contour.pass);
}

MultiIndex parse_index(const std::vector<unsigned>& parts, const RunConfig& cfg) {
  if (parts.empty()) return choose_multi_index(cfg.n, cfg.weight.p());
  MultiIndex idx{parts};
  if (idx.p() != cfg.weight.p() || idx.total() != cfg.n || !idx.is_balanced())
    throw Error(Errc::invalid_input, "--idx must be a balanced split of n into p parts");
  return idx;
}

int cmd_typetwo(const RunConfig& cfg, const std::vector<unsigned>& parts) {
  require_json(cfg, "typetwo");
  MultiIndex idx = parse_index(parts, cfg);
  MonicOP op = monic_op(cfg.weight, cfg.n);
  json weights = json::array();
  json qkm = json::array();
  for (std::size_t k = 1; k <= cfg.weight.p(); ++k) {
    TypeIIWeight tw = build_type_two_weight(cfg.weight, idx, k);
    weights.push_back({{"k", k}, {"V", to_json(tw.V)}, {"w", to_json(tw.w)}});
    for (unsigned m = 0; m < idx[k - 1]; ++m) {
      ZmwkDecomposition d = decompose_zmwk(cfg.weight, idx, k, m);
      qkm.push_back({{"k", k}, {"m", m}, {"Q", to_json(d.Q)}, {"Pi", to_json(d.Pi)}});
    }
  }
  CheckReport rep = check_type_two(op, cfg.weight, idx);
  const std::size_t r = qkm_rank(cfg.weight, idx);
  json body = header(cfg);
  body["index"] = to_json(idx);
  body["P"] = to_json(op.P);
  body["weights"] = weights;
  body["qkm"] = qkm;
  body["qkm_rank"] = r;
  body["orthogonality"] = to_json(rep);
  return finish(cfg, body, "type_two", rep.pass && r == cfg.n);
}

int cmd_verify(const RunConfig& cfg, const std::string& mode) {
  require_json(cfg, "verify");
  const WeightSpec& w = cfg.weight;
  MonicOP op = monic_op(w, cfg.n);
  json reports = json::array();
  bool pass = true;
  auto add = [&](const CheckReport& r) {
    reports.push_back(to_json(r));
    pass = pass && r.pass;
  };
  const bool all = mode == "all";
  if (all || mode == "b") add(check_b(op, w));
  if (all || mode == "c") add(check_c(op, w));
  if (all || mode == "d") {
    TypeISolution sol = solve_type_one(w, cfg.n);
    CheckReport same("d_equals_moment_solution");
    for (int k = 0; k <= static_cast<int>(cfg.n); ++k) same.record(k, sol.P.coeff(k), op.P.coeff(k));
    add(same);
    add(check_type_one_contour(sol, w));
    if (!w.has_node_at_origin() || all) add(check_reduced_type_one(sol, w, true));
    for (std::size_t p0 = 1; p0 <= w.p(); ++p0) add(check_singled_out(sol, w, p0));
  }
  if (all || mode == "fi") {
    CheckReport grid("fundamental_identity_grid");
    for (unsigned j = 0; j <= cfg.n; ++j)
      for (unsigned k = 0; k <= cfg.n; ++k) {
        CheckReport r = verify_fundamental_identity(CPoly::monomial(j, 1), CPoly::monomial(k, 1), w);
        grid.record_indexed(static_cast<int>(j), static_cast<int>(k), r.values.at(0).value, r.values.at(0).expected);
      }
    add(grid);
  }
  if (all || mode == "t2") add(check_type_two(op, w, choose_multi_index(cfg.n, w.p())));
  json body = header(cfg);
  body["mode"] = mode;
  body["reports"] = reports;
  return finish(cfg, body, "verify", pass);
}

int cmd_rh(const RunConfig& cfg, const std::string& which, std::size_t p0, std::size_t samples, bool literal) {
  require_json(cfg, "rh");
  const WeightSpec& w = cfg.weight;
  mpq_class radius = 1;
  RHSolution s = [&] {
    if (which == "full") return build_typeI_full(w, cfg.n);
    if (which == "singled") return build_typeI_singled(w, cfg.n, p0);
    if (which == "typeII") return build_typeII(w, cfg.n, choose_multi_index(cfg.n, w.p()), literal);
    radius = safe_sample_radius(w);
    return build_typeI_reduced(w, cfg.n);
  }();
  RHReport rep = verify_rhp(s.y, s.problem, sample_points(samples, radius), cfg.precision_bits);
  json body = header(cfg);
  body["which"] = which;
  body["sample_radius"] = rational_to_string(radius);
  body["y"] = to_json(s.y);
  body["report"] = to_json(rep);
  body["notes"] = s.notes;
  return finish(cfg, body, "rh", rep.pass());
}

int cmd_zeros(const RunConfig& cfg) {
  MonicOP op = monic_op(cfg.weight, cfg.n);
  ZeroSet z = find_zeros(op.P, cfg.precision_bits);
  if (cfg.format == "csv") {
    emit(zeros_csv(z), cfg.out_path);
    return z.converged ? kPass : kCheckFailed;
  }
  json body = header(cfg);
  body["P"] = to_json(op.P);
  body["zeros"] = to_json(z);
  return finish(cfg, body, "zeros", z.converged);
}

int cmd_suite(const RunConfig& cfg, SuiteOptions opts) {
  require_json(cfg, "suite");
  opts.prec = cfg.precision_bits;
  SuiteReport rep = run_equivalence_suite(opts);
  emit(dump(to_json(rep)), cfg.out_path);
  return rep.pass() ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact planar orthogonal polynomials with point insertions"};
  app.require_subcommand(1);

  Common common;
  unsigned buffer = 10;
  std::vector<unsigned> idx_parts;
  std::string mode = "all";
  std::string which = "full";
  std::size_t p0 = 1;
  std::size_t samples = 8;
  bool literal = false;
  SuiteOptions suite;

  auto* compute = app.add_subcommand("compute", "monic orthogonal polynomial from the Gram matrix");
  add_common(compute, common);
  auto* moments = app.add_subcommand("moments", "exact Gram matrix");
  add_common(moments, common);
  auto* typeone = app.add_subcommand("typeone", "solve the type I Hermite-Pade system");
  add_common(typeone, common);
  typeone->add_option("--truncation-buffer", buffer, "extra series order for the identity re-check");
  auto* typetwo = app.add_subcommand("typetwo", "type II weights, Q_{k,m} and orthogonality");
  add_common(typetwo, common);
  typetwo->add_option("--idx", idx_parts, "multi-index n_1 ... n_p (default balanced)")->delimiter(',');
  auto* verify = app.add_subcommand("verify", "run characterization checks");
  add_common(verify, common);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"b", "c", "d", "fi", "t2", "all"}));
  auto* rh = app.add_subcommand("rh", "build and verify a Riemann-Hilbert solution");
  add_common(rh, common);
  rh->add_option("--which", which)->check(CLI::IsMember({"full", "reduced", "singled", "typeII"}));
  rh->add_option("--p0", p0, "node singled out (1-based)");
  rh->add_option("--samples", samples, "numeric sample points")->check(CLI::Range(1, 10000));
  rh->add_flag("--literal-wk", literal, "use w_k without the factor W in the type II jump");
  auto* zeros = app.add_subcommand("zeros", "zeros of P_n");
  add_common(zeros, common);
  auto* suite_cmd = app.add_subcommand("suite", "seeded equivalence suite");
  add_common(suite_cmd, common, false);
  suite_cmd->add_option("--seed", suite.seed);
  suite_cmd->add_option("--cases", suite.cases);
  suite_cmd->add_option("--threads", suite.threads, "worker threads (0 = all cores)");
  suite_cmd->add_flag("--perturb", suite.perturb, "replace P_n by P_n + z^{n-1}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*suite_cmd) return cmd_suite(config_from(common, false), suite);
    RunConfig cfg = config_from(common);
    if (*compute) return cmd_compute(cfg);
    if (*moments) return cmd_moments(cfg);
    if (*typeone) return cmd_typeone(cfg, buffer);
    if (*typetwo) return cmd_typetwo(cfg, idx_parts);
    if (*verify) return cmd_verify(cfg, mode);
    if (*rh) return cmd_rh(cfg, which, p0, samples, literal);
    if (*zeros) return cmd_zeros(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return is_input_error(e.code()) ? kInputError : kArithmeticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArithmeticError;
  }
  return kInputError;
}
