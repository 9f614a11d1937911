#include "planarop/rh.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "planarop/error.hpp"
#include "planarop/linear_solve.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/operators.hpp"

namespace planarop {

namespace {

ExpMatrix zero_matrix(std::size_t d) { return ExpMatrix(d, std::vector<ExpRational>(d)); }

ExpMatrix identity_matrix(std::size_t d) {
  ExpMatrix m = zero_matrix(d);
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

LaurentPoly z_pow(int k) { return LaurentPoly::monomial(k); }

std::optional<std::size_t> index_of(const std::vector<std::size_t>& v, std::size_t x) {
  auto it = std::find(v.begin(), v.end(), x);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

// Weighted combination sum_s A_s f_{s,t} for one Cauchy column.
ExpRational row_numerator(const RHProblem& pr, const std::vector<CPoly>& polys, std::size_t t) {
  ExpRational g;
  for (std::size_t s = 0; s < pr.poly_cols.size(); ++s) {
    if (polys[s].degree() < 0) continue;
    g += ExpRational(polys[s]) * pr.weights[s][t];
  }
  return g;
}

void fill_row(const RHProblem& pr, std::size_t r, const std::vector<CPoly>& polys, YMatrix& y) {
  for (std::size_t s = 0; s < pr.poly_cols.size(); ++s) {
    y.outside[r][pr.poly_cols[s]] = polys[s];
    y.inside[r][pr.poly_cols[s]] = polys[s];
  }
  for (std::size_t t = 0; t < pr.cauchy_cols.size(); ++t) {
    ExpRational g = row_numerator(pr, polys, t);
    ExpRational out = cauchy_outside(g);
    y.outside[r][pr.cauchy_cols[t]] = out;
    y.inside[r][pr.cauchy_cols[t]] = g + out;
  }
}

void fill_unit_row(const RHProblem& pr, std::size_t r, YMatrix& y) {
  for (std::size_t j = 0; j < pr.d; ++j) {
    y.outside[r][j] = ExpRational(j == r ? 1 : 0);
    y.inside[r][j] = ExpRational(j == r ? 1 : 0);
  }
}

// Solves one row's linear conditions and returns its polynomial entries.
std::optional<std::vector<CPoly>> solve_row(const RHProblem& pr, const RowProblemSpec& spec) {
  const std::size_t ns = pr.poly_cols.size();
  const std::size_t nt = pr.cauchy_cols.size();
  std::vector<std::size_t> offset(ns + 1, 0);
  for (std::size_t s = 0; s < ns; ++s) offset[s + 1] = offset[s] + spec.free_coeffs[s];
  const std::size_t unknowns = offset[ns];
  if (unknowns != spec.equations()) throw Error(Errc::precondition, "row problem is not square");

  // Principal-part coefficients of each weight, deep enough for every unknown.
  std::vector<std::vector<LaurentPoly>> expansion(ns, std::vector<LaurentPoly>(nt));
  for (std::size_t s = 0; s < ns; ++s) {
    int top = static_cast<int>(spec.free_coeffs[s]);
    if (spec.monic_slot == s) top = std::max(top, static_cast<int>(spec.monic_degree));
    for (std::size_t t = 0; t < nt; ++t) {
      if (spec.vanishing[t] == 0) continue;
      const int lo = -static_cast<int>(spec.vanishing[t]) - top;
      expansion[s][t] = pr.weights[s][t].laurent_expansion(lo, -1);
    }
  }

  Matrix a(unknowns, unknowns);
  std::vector<GaussianRational> b(unknowns);
  std::size_t eq = 0;
  for (std::size_t t = 0; t < nt; ++t) {
    for (unsigned tau = 1; tau <= spec.vanishing[t]; ++tau, ++eq) {
      const int target = -static_cast<int>(tau);
      for (std::size_t s = 0; s < ns; ++s)
        for (unsigned l = 0; l < spec.free_coeffs[s]; ++l)
          a(eq, offset[s] + l) = expansion[s][t].coeff(target - static_cast<int>(l));
      GaussianRational rhs = 0;
      if (spec.normalized_col == t && tau == spec.vanishing[t]) rhs = -1;
      if (spec.monic_slot)
        rhs -= expansion[*spec.monic_slot][t].coeff(target - static_cast<int>(spec.monic_degree));
      b[eq] = rhs;
    }
  }

  std::vector<GaussianRational> x;
  if (unknowns > 0) {
    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    x = std::move(*sol);
  } else if (spec.normalized_col) {
    return std::nullopt;
  }

  std::vector<CPoly> polys;
  polys.reserve(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    std::vector<GaussianRational> c(x.begin() + static_cast<std::ptrdiff_t>(offset[s]),
                                    x.begin() + static_cast<std::ptrdiff_t>(offset[s + 1]));
    CPoly p(std::move(c));
    if (spec.monic_slot == s) p = p + CPoly::monomial(spec.monic_degree, 1);
    polys.push_back(std::move(p));
  }
  return polys;
}

struct SolveOptions {
  std::map<std::size_t, std::vector<CPoly>> pinned;
  bool unit_fallback = false;
};

RHSolution solve_problem(RHProblem problem, const SolveOptions& opts = {}) {
  RHSolution out;
  out.y.outside = zero_matrix(problem.d);
  out.y.inside = zero_matrix(problem.d);
  out.y.exponents = problem.exponents;
  for (std::size_t r = 0; r < problem.d; ++r) {
    RowProblemSpec spec = row_problem_spec(problem, r);
    out.rows.push_back(spec);
    if (auto it = opts.pinned.find(r); it != opts.pinned.end()) {
      fill_row(problem, r, it->second, out.y);
      out.notes.push_back("row " + std::to_string(r + 1) + " pinned");
      continue;
    }
    if (spec.unit_row) {
      fill_unit_row(problem, r, out.y);
      continue;
    }
    auto polys = solve_row(problem, spec);
    if (!polys) {
      if (!opts.unit_fallback)
        throw Error(Errc::singular_row_system, problem.family + ": singular system for row " + std::to_string(r + 1));
      fill_unit_row(problem, r, out.y);
      out.notes.push_back("row " + std::to_string(r + 1) + " singular; unit row substituted");
      continue;
    }
    fill_row(problem, r, *polys, out.y);
  }
  out.problem = std::move(problem);
  return out;
}

int total_degree(const WeightSpec& w, unsigned n) { return static_cast<int>(n + w.c()); }

}  // namespace

ExpMatrix RHProblem::jump() const {
  ExpMatrix j = identity_matrix(d);
  for (std::size_t s = 0; s < poly_cols.size(); ++s)
    for (std::size_t t = 0; t < cauchy_cols.size(); ++t) j[poly_cols[s]][cauchy_cols[t]] = weights[s][t];
  return j;
}

std::size_t RowProblemSpec::unknowns() const { return std::accumulate(free_coeffs.begin(), free_coeffs.end(), 0u); }

std::size_t RowProblemSpec::equations() const { return std::accumulate(vanishing.begin(), vanishing.end(), 0u); }

RowProblemSpec row_problem_spec(const RHProblem& pr, std::size_t row) {
  RowProblemSpec spec;
  spec.row = row;
  const auto ps = index_of(pr.poly_cols, row);
  const auto ts = index_of(pr.cauchy_cols, row);
  if (ts && pr.exponents[row] == 0) {
    spec.unit_row = true;
    return spec;
  }
  for (std::size_t s = 0; s < pr.poly_cols.size(); ++s) {
    const int e = pr.exponents[pr.poly_cols[s]];
    if (ps == s) {
      spec.monic_slot = s;
      spec.monic_degree = static_cast<unsigned>(e);
    }
    spec.free_coeffs.push_back(static_cast<unsigned>(e));
  }
  for (std::size_t t = 0; t < pr.cauchy_cols.size(); ++t)
    spec.vanishing.push_back(static_cast<unsigned>(-pr.exponents[pr.cauchy_cols[t]]));
  if (ts) spec.normalized_col = *ts;
  return spec;
}

ExpRational cauchy_outside(const ExpRational& f, int depth) { return ExpRational(-principal_part(f, depth)); }

ExpRational cauchy_outside(const ExpRational& f) { return ExpRational(-principal_part(f)); }

RHSolution build_typeI_full(const WeightSpec& w, unsigned n) {
  const std::size_t p = w.p();
  const int nc = total_degree(w, n);
  RHProblem pr;
  pr.family = "typeI_full";
  pr.d = p + 2;
  for (std::size_t i = 0; i <= p; ++i) pr.poly_cols.push_back(i);
  pr.cauchy_cols = {p + 1};
  pr.exponents.push_back(static_cast<int>(n));
  for (const auto& node : w.nodes()) pr.exponents.push_back(static_cast<int>(node.c));
  pr.exponents.push_back(-nc);
  pr.weights.push_back({ExpRational(LaurentPoly(w.W()).shifted(-nc))});
  for (const auto& node : w.nodes()) pr.weights.push_back({ExpRational(z_pow(-nc), node.a.conj())});
  return solve_problem(std::move(pr));
}

RHSolution build_typeI_reduced(const WeightSpec& w, unsigned n) {
  if (w.has_node_at_origin())
    throw Error(Errc::node_at_origin, "reduced problem needs every node away from the origin");
  const std::size_t p = w.p();
  const int nc = total_degree(w, n);
  RHProblem pr;
  pr.family = "typeI_reduced";
  pr.d = p + 1;
  for (std::size_t i = 0; i < p; ++i) pr.poly_cols.push_back(i);
  pr.cauchy_cols = {p};
  for (const auto& node : w.nodes()) pr.exponents.push_back(static_cast<int>(node.c));
  pr.exponents.push_back(-static_cast<int>(w.c()));
  for (const auto& node : w.nodes()) pr.weights.push_back({ExpRational(z_pow(-nc), node.a.conj(), w.W())});
  return solve_problem(std::move(pr));
}

CPoly recover_p_from_reduced(const WeightSpec& w, unsigned n, const std::vector<CPoly>& qs) {
  if (qs.size() != w.p()) throw Error(Errc::precondition, "one Q per node expected");
  ExpRational sum;
  for (std::size_t j = 0; j < qs.size(); ++j)
    sum += ExpRational(LaurentPoly(qs[j]), w.nodes()[j].a.conj(), w.W());
  return -sum.laurent_expansion(0, static_cast<int>(n)).polynomial_part();
}

RHSolution build_typeI_singled(const WeightSpec& w, unsigned n, std::size_t p0) {
  const std::size_t p = w.p();
  if (p0 < 1 || p0 > p) throw Error(Errc::precondition, "singled-out node index out of range");
  const int nc = total_degree(w, n);
  const GaussianRational shift = w.nodes()[p0 - 1].a.conj();
  RHProblem pr;
  pr.family = "typeI_singled_" + std::to_string(p0);
  pr.d = p + 1;
  for (std::size_t i = 0; i < p; ++i) pr.poly_cols.push_back(i);
  pr.cauchy_cols = {p};
  pr.exponents.push_back(static_cast<int>(n));
  pr.weights.push_back({ExpRational(LaurentPoly(w.W()).shifted(-nc), -shift)});
  for (std::size_t j = 0; j < p; ++j) {
    if (j + 1 == p0) continue;
    const auto& node = w.nodes()[j];
    pr.exponents.push_back(static_cast<int>(node.c));
    pr.weights.push_back({ExpRational(z_pow(-nc), node.a.conj() - shift)});
  }
  pr.exponents.push_back(-(nc - static_cast<int>(w.nodes()[p0 - 1].c)));
  return solve_problem(std::move(pr));
}

RHSolution build_typeII(const WeightSpec& w, unsigned n, const MultiIndex& idx, bool literal_wk) {
  const std::size_t p = w.p();
  if (idx.p() != p || idx.total() != n) throw Error(Errc::precondition, "multi-index does not match (n, p)");
  RHProblem pr;
  pr.family = literal_wk ? "typeII_literal" : "typeII";
  pr.d = p + 1;
  pr.poly_cols = {0};
  for (std::size_t k = 1; k <= p; ++k) pr.cauchy_cols.push_back(k);
  pr.exponents.push_back(static_cast<int>(n));
  for (std::size_t k = 0; k < p; ++k) pr.exponents.push_back(-static_cast<int>(idx[k]));
  std::vector<ExpRational> first;
  for (std::size_t k = 1; k <= p; ++k) {
    LaurentPoly wk = build_type_two_weight(w, idx, k).w;
    first.emplace_back(literal_wk ? wk : LaurentPoly(w.W()) * wk);
  }
  pr.weights.push_back(std::move(first));
  SolveOptions opts;
  if (literal_wk) {
    opts.pinned[0] = {monic_op(w, n).P};
    opts.unit_fallback = true;
  }
  return solve_problem(std::move(pr), opts);
}

std::vector<GaussianRational> sample_points(std::size_t count, const mpq_class& radius) {
  if (radius <= 0) throw Error(Errc::precondition, "sample radius must be positive");
  std::vector<GaussianRational> pts = {
      GaussianRational(1),     GaussianRational(-1), GaussianRational(0, 1), GaussianRational(0, -1),
      GaussianRational(mpq_class(3, 5), mpq_class(4, 5)),  GaussianRational(mpq_class(3, 5), mpq_class(-4, 5)),
      GaussianRational(mpq_class(-3, 5), mpq_class(4, 5)), GaussianRational(mpq_class(-3, 5), mpq_class(-4, 5))};
  // Rational points ((1-t^2) + 2ti)/(1+t^2) for t = 1/3, 1/4, ...
  for (long q = 3; pts.size() < count; ++q) {
    const mpq_class t(1, q);
    const mpq_class den = 1 + t * t;
    const mpq_class x = (1 - t * t) / den;
    const mpq_class y = 2 * t / den;
    for (const auto& pt : {GaussianRational(x, y), GaussianRational(x, -y), GaussianRational(-x, y),
                           GaussianRational(-x, -y)})
      if (pts.size() < count) pts.push_back(pt);
  }
  pts.resize(count);
  for (auto& pt : pts) pt = pt * GaussianRational(radius);
  return pts;
}

mpq_class safe_sample_radius(const WeightSpec& w) {
  std::optional<mpq_class> min_norm;
  for (const auto& node : w.nodes()) {
    if (node.a.is_zero()) continue;
    mpq_class nm = node.a.norm();
    if (!min_norm || nm < *min_norm) min_norm = nm;
  }
  mpq_class r = 1;
  if (!min_norm) return r;
  // r <= |a|/2  <=>  4 r^2 <= |a|^2
  while (4 * r * r > *min_norm) r /= 2;
  return r;
}

ExpRational determinant(const ExpMatrix& m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  if (d == 1) return m[0][0];
  if (d == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  ExpRational det;
  for (std::size_t j = 0; j < d; ++j) {
    if (m[0][j].is_zero()) continue;
    ExpMatrix minor;
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<ExpRational> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    ExpRational term = m[0][j] * determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

RHReport verify_rhp(const YMatrix& y, const RHProblem& pr, const std::vector<GaussianRational>& samples,
                    mpfr_prec_t prec) {
  RHReport rep;
  rep.family = pr.family;
  const std::size_t d = pr.d;
  const ExpMatrix jump = pr.jump();
  auto entry = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  if (y.outside.size() != d || y.inside.size() != d || y.exponents != pr.exponents) {
    rep.offending.push_back("shape: matrix size or exponents do not match the problem");
    rep.worst_residual = "inf";
    return rep;
  }

  rep.jump_unimodular = determinant(jump) == ExpRational(1);
  if (!rep.jump_unimodular) rep.offending.push_back("jump: det J != 1");
  rep.exponents_balanced = std::accumulate(pr.exponents.begin(), pr.exponents.end(), 0) == 0;
  if (!rep.exponents_balanced) rep.offending.push_back("exponents: sum is not zero");

  // (i) exact jump identity
  rep.jump_exact = true;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) {
      ExpRational rhs;
      for (std::size_t m = 0; m < d; ++m)
        if (!y.outside[r][m].is_zero() && !jump[m][j].is_zero()) rhs += y.outside[r][m] * jump[m][j];
      if (!(y.inside[r][j] - rhs).is_zero()) {
        rep.jump_exact = false;
        rep.offending.push_back("jump " + entry(r, j));
      }
    }

  // (i') numeric residual at the sample points
  BigFloat worst(prec);
  bool numeric_ok = !samples.empty();
  for (const auto& s : samples) {
    if (s.is_zero()) {
      numeric_ok = false;
      rep.offending.push_back("sample at the origin");
      continue;
    }
    const ComplexBigFloat z(s, prec);
    try {
      std::vector<std::vector<ComplexBigFloat>> out(d), in(d), jv(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          out[i].push_back(evaluate(y.outside[i][j], z));
          in[i].push_back(evaluate(y.inside[i][j], z));
          jv[i].push_back(evaluate(jump[i][j], z));
        }
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j < d; ++j) {
          ComplexBigFloat acc = in[r][j];
          for (std::size_t m = 0; m < d; ++m) acc -= out[r][m] * jv[m][j];
          worst = max(worst, acc.abs());
        }
    } catch (const Error& e) {
      numeric_ok = false;
      rep.offending.push_back("sample " + s.to_string() + ": " + e.what());
    }
  }
  rep.worst_residual = worst.to_string(6);
  rep.jump_numeric = numeric_ok && worst <= pow2(-static_cast<long>(prec / 2), prec);
  if (numeric_ok && !rep.jump_numeric) rep.offending.push_back("numeric residual " + rep.worst_residual);

  // (ii) inside entries are analytic at 0
  rep.analytic_inside = true;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) {
      bool ok = false;
      try {
        ok = principal_part(y.inside[r][j]).is_zero();
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        rep.analytic_inside = false;
        rep.offending.push_back("analyticity " + entry(r, j));
      }
    }

  // (iii) outside * diag(z^{-e}) - I has only negative powers
  rep.asymptotics = true;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < d; ++j) {
      const ExpRational& f = y.outside[r][j];
      bool ok = f.is_zero() || f.is_laurent();
      if (ok) {
        LaurentPoly scaled = f.as_laurent().shifted(-pr.exponents[j]);
        if (r == j) scaled -= LaurentPoly::monomial(0);
        ok = scaled.is_zero() || scaled.max_deg() < 0;
      }
      if (!ok) {
        rep.asymptotics = false;
        rep.offending.push_back("asymptotics " + entry(r, j));
      }
    }

  // (iv) det = 1
  rep.determinant = determinant(y.outside) == ExpRational(1);
  if (!rep.determinant) rep.offending.push_back("determinant != 1");
  return rep;
}

}  // namespace planarop
