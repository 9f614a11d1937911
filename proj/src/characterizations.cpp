#include "planarop/characterizations.hpp"

#include "planarop/error.hpp"
#include "planarop/factorial.hpp"
#include "planarop/linear_solve.hpp"
#include "planarop/operators.hpp"

namespace planarop {

namespace {

GaussianRational inverse_factorial(unsigned m) { return GaussianRational(mpq_class(mpz_class(1), factorial(m))); }

// Coefficient of s^{-1-k} in f for k = 0..count-1, from a single expansion.
std::vector<GaussianRational> shifted_residues(const ExpRational& f, int count) {
  std::vector<GaussianRational> out;
  if (count <= 0) return out;
  const LaurentPoly expansion = f.laurent_expansion(-count, -1);
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(expansion.coeff(-1 - k));
  return out;
}

void check_shape(const TypeISolution& sol, const WeightSpec& w) {
  if (sol.Qs.size() != w.p())
    throw Error(Errc::precondition, "type I solution has " + std::to_string(sol.Qs.size()) + " Q polynomials, weight has " +
                                        std::to_string(w.p()) + " nodes");
}

}  // namespace

PhiFunction phi_k(const WeightSpec& w, unsigned k) {
  return {k, laplace_ray_transform(w.W_star() * CPoly::monomial(k))};
}

CheckReport check_b(const MonicOP& p, const WeightSpec& w) {
  CheckReport report("b");
  const LaurentPoly pw(p.P * w.W());
  for (unsigned k = 0; k < p.n; ++k) report.record(static_cast<int>(k), residue_at_zero(pw * phi_k(w, k).value));
  report.diagnostics["residue_k=n"] = residue_at_zero(pw * phi_k(w, p.n).value);
  return report;
}

CheckReport check_c(const MonicOP& p, const WeightSpec& w) {
  CheckReport report("c");
  const CPoly image = apply_w_star_operator(w, p.P * w.W());
  for (unsigned k = 0; k < p.n; ++k) report.record(static_cast<int>(k), image.coeff(k));
  report.diagnostics["coeff_z^n"] = image.coeff(p.n);
  return report;
}

ExpRational type_one_form(const TypeISolution& sol, const WeightSpec& w) {
  check_shape(sol, w);
  ExpRational form(sol.P * w.W());
  for (std::size_t j = 0; j < w.p(); ++j)
    form += ExpRational(LaurentPoly(sol.Qs[j]), w.nodes()[j].a.conj());
  return form;
}

TruncatedSeries type_one_series(const TypeISolution& sol, const WeightSpec& w, std::size_t order) {
  check_shape(sol, w);
  TruncatedSeries s(sol.P * w.W(), order);
  for (std::size_t j = 0; j < w.p(); ++j)
    s = s + TruncatedSeries(sol.Qs[j], order) * TruncatedSeries::exp(w.nodes()[j].a.conj(), order);
  return s;
}

TypeISolution solve_type_one(const WeightSpec& w, unsigned n, unsigned truncation_buffer) {
  const unsigned c = w.c();
  const unsigned size = n + c;
  TypeISolution sol{n, CPoly(1), std::vector<CPoly>(w.p())};
  if (size == 0) return sol;

  // Unknowns: p_0..p_{n-1}, then q_{j,0..c_j-1} for each node.
  // Equation t: [z^t] (P W + sum_j Q_j e^{conj(a_j) z}) = 0, t < n + c.
  Matrix a(size, size);
  std::vector<GaussianRational> b(size);
  const CPoly& wpoly = w.W();
  for (unsigned t = 0; t < size; ++t) {
    for (unsigned i = 0; i < n && i <= t; ++i) a(t, i) = wpoly.coeff(t - i);
    if (t >= n) b[t] = -wpoly.coeff(t - n);
    unsigned col = n;
    for (const auto& node : w.nodes()) {
      const GaussianRational omega = node.a.conj();
      for (unsigned l = 0; l < node.c; ++l, ++col) {
        if (l <= t) a(t, col) = pow(omega, t - l) * inverse_factorial(t - l);
      }
    }
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) throw Error(Errc::singular_system, "type I system is singular for n = " + std::to_string(n));

  std::vector<GaussianRational> pc(x->begin(), x->begin() + n);
  pc.emplace_back(1);
  sol.P = CPoly(std::move(pc));
  std::size_t col = n;
  for (std::size_t j = 0; j < w.p(); ++j) {
    const unsigned cj = w.nodes()[j].c;
    sol.Qs[j] = CPoly(std::vector<GaussianRational>(x->begin() + static_cast<std::ptrdiff_t>(col),
                                                    x->begin() + static_cast<std::ptrdiff_t>(col + cj)));
    col += cj;
  }

  const TruncatedSeries defect = type_one_series(sol, w, size + truncation_buffer);
  if (defect.vanishing_order() < size)
    throw Error(Errc::identity_violation, "type I solution does not vanish to order n + c");
  return sol;
}

CheckReport check_type_one_contour(const TypeISolution& sol, const WeightSpec& w) {
  CheckReport report("type_one_contour");
  const int order = static_cast<int>(sol.n + w.c());
  const ExpRational f = type_one_form(sol, w) * ExpRational(LaurentPoly::monomial(-order));
  const auto residues = shifted_residues(f, order);
  for (int k = 0; k < order; ++k) report.record(k, residues[static_cast<std::size_t>(k)]);
  return report;
}

CheckReport check_reduced_type_one(const TypeISolution& sol, const WeightSpec& w, bool allow_origin_node) {
  check_shape(sol, w);
  CheckReport report("reduced_type_one");
  const unsigned c0 = w.origin_multiplicity();
  if (c0 > 0 && !allow_origin_node)
    throw Error(Errc::node_at_origin, "reduced type I form needs all nodes away from the origin");
  if (c0 > 0) report.note = "node at origin: vanishing order n+c-c0";

  // s^{n+c-c0} W(s) = s^{n+c} W~(s) with W~(0) != 0.
  const int order = static_cast<int>(sol.n + w.c());
  ExpRational::Terms terms;
  for (std::size_t j = 0; j < w.p(); ++j) {
    auto [it, inserted] = terms.try_emplace(w.nodes()[j].a.conj());
    it->second += LaurentPoly(sol.Qs[j]).shifted(-order);
  }
  const ExpRational g(w.W_without_origin(), std::move(terms));
  const int count = static_cast<int>(w.c() - c0);
  const auto residues = shifted_residues(g, count);
  for (int k = 0; k < count; ++k)
    report.record(k, residues[static_cast<std::size_t>(k)], GaussianRational(k == count - 1 ? -1 : 0));
  return report;
}

CheckReport check_singled_out(const TypeISolution& sol, const WeightSpec& w, std::size_t p0) {
  check_shape(sol, w);
  if (p0 < 1 || p0 > w.p()) throw Error(Errc::precondition, "singled-out index out of range");
  CheckReport report("singled_out_" + std::to_string(p0));
  const GaussianRational shift = w.nodes()[p0 - 1].a.conj();
  const int order = static_cast<int>(sol.n + w.c());
  ExpRational form(LaurentPoly(sol.P * w.W()), -shift);
  for (std::size_t j = 0; j < w.p(); ++j) {
    if (j + 1 == p0) continue;
    form += ExpRational(LaurentPoly(sol.Qs[j]), w.nodes()[j].a.conj() - shift);
  }
  const ExpRational f = form * ExpRational(LaurentPoly::monomial(-order));
  const int count = order - static_cast<int>(w.nodes()[p0 - 1].c);
  const auto residues = shifted_residues(f, count);
  for (int k = 0; k < count; ++k) report.record(k, residues[static_cast<std::size_t>(k)]);
  return report;
}

GaussianRational scalar_product(const CPoly& p, const CPoly& q, const WeightSpec& w) {
  GaussianRational sum;
  for (int j = 0; j <= p.degree(); ++j) {
    const auto& pj = p.coeff(static_cast<std::size_t>(j));
    if (pj.is_zero()) continue;
    for (int k = 0; k <= q.degree(); ++k) {
      const auto& qk = q.coeff(static_cast<std::size_t>(k));
      if (qk.is_zero()) continue;
      sum += pj * qk.conj() * gram_entry(w, static_cast<unsigned>(j), static_cast<unsigned>(k));
    }
  }
  return sum;
}

CheckReport verify_fundamental_identity(const CPoly& p, const CPoly& q, const WeightSpec& w) {
  CheckReport report("fundamental_identity");
  const GaussianRational lhs = scalar_product(p, q, w);
  const GaussianRational rhs =
      residue_at_zero(LaurentPoly(p * w.W()) * laplace_ray_transform(w.W_star() * q.conjugate_star()));
  report.diagnostics["lhs"] = lhs;
  report.diagnostics["rhs"] = rhs;
  report.record(0, rhs, lhs);
  return report;
}

}  // namespace planarop
