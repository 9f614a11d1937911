#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planarop/big_float.hpp"
#include "planarop/cpoly.hpp"
#include "planarop/exp_rational.hpp"
#include "planarop/type_two.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

using ExpMatrix = std::vector<std::vector<ExpRational>>;

/// Riemann-Hilbert problem on a contour around the origin whose jump is
///   J = I + sum_{s,t} weights[s][t] E_{poly_cols[s], cauchy_cols[t]}
/// and whose solution behaves like (I + O(1/z)) diag(z^{e_i}) at infinity.
///
/// Polynomial columns carry no jump; Cauchy columns carry the Cauchy transform
/// of the row's weighted combination. Both type I problems (one Cauchy column)
/// and the type II problem (one polynomial column) fit this shape.
struct RHProblem {
  std::string family;
  std::size_t d = 0;
  std::vector<std::size_t> poly_cols;
  std::vector<std::size_t> cauchy_cols;
  std::vector<int> exponents;
  /// weights[s][t] multiplies the entry of poly_cols[s] into cauchy_cols[t].
  ExpMatrix weights;

  ExpMatrix jump() const;
};

/// Solution expressions valid inside and outside the contour. Both are global
/// ExpRational expressions, so the jump relation is an exact identity.
struct YMatrix {
  ExpMatrix outside;
  ExpMatrix inside;
  std::vector<int> exponents;
};

/// Per-row linear conditions. Polynomial slot s has `free_coeffs[s]` unknown
/// low-order coefficients; a monic slot additionally has leading coefficient 1
/// in degree `monic_degree`. Cauchy column t contributes `vanishing[t]`
/// conditions on the principal-part coefficients z^{-1}..z^{-vanishing[t]}
/// of the row's weighted combination, all zero except the deepest one of
/// `normalized_col`, which is -1.
struct RowProblemSpec {
  std::size_t row = 0;
  bool unit_row = false;
  std::vector<unsigned> free_coeffs;
  std::optional<std::size_t> monic_slot;
  unsigned monic_degree = 0;
  std::vector<unsigned> vanishing;
  std::optional<std::size_t> normalized_col;

  std::size_t unknowns() const;
  std::size_t equations() const;
};

RowProblemSpec row_problem_spec(const RHProblem& problem, std::size_t row);

struct RHSolution {
  RHProblem problem;
  YMatrix y;
  std::vector<RowProblemSpec> rows;
  std::vector<std::string> notes;
};

/// Outside value of (1/2 pi i) \oint f(s) ds / (s - z): minus the principal
/// part of f at 0, as a Laurent polynomial in 1/z. The inside value is
/// f + cauchy_outside(f).
ExpRational cauchy_outside(const ExpRational& f, int depth);
ExpRational cauchy_outside(const ExpRational& f);

/// (p+2)x(p+2) problem for (P_n, Q_1..Q_p), jump W/z^{n+c}, e^{conj(a_j) z}/z^{n+c}.
RHSolution build_typeI_full(const WeightSpec& w, unsigned n);

/// (p+1)x(p+1) problem for (Q_1..Q_p), jump e^{conj(a_j) z}/(z^{n+c} W).
/// Throws Error(node_at_origin).
RHSolution build_typeI_reduced(const WeightSpec& w, unsigned n);

/// -P_n as the degree-n Maclaurin truncation of sum_j Q_j e^{conj(a_j) z} / W.
CPoly recover_p_from_reduced(const WeightSpec& w, unsigned n, const std::vector<CPoly>& qs);

/// (p+1)x(p+1) problem for (P_n, Q_j, j != p0), jump W e^{-conj(a_p0) z}/z^{n+c},
/// e^{(conj(a_j) - conj(a_p0)) z}/z^{n+c}. p0 is 1-based.
RHSolution build_typeI_singled(const WeightSpec& w, unsigned n, std::size_t p0);

/// (p+1)x(p+1) type II problem with first-row jump entries W w_k. With
/// literal_wk the jump entries are w_k alone and the first row is pinned to
/// (P_n, C[P_n w_k]); that variant does not satisfy the asymptotic condition.
RHSolution build_typeII(const WeightSpec& w, unsigned n, const MultiIndex& idx, bool literal_wk = false);

/// The default 8 rational unit-circle points (+-1, +-i, (+-3 +- 4i)/5), then
/// further Pythagorean points as needed, all scaled by `radius`.
std::vector<GaussianRational> sample_points(std::size_t count = 8, const mpq_class& radius = 1);

/// Largest radius 2^{-k} <= 1 that keeps every zero of W strictly outside the
/// sampling circle (with margin 1/2).
mpq_class safe_sample_radius(const WeightSpec& w);

struct RHReport {
  std::string family;
  bool jump_unimodular = false;
  bool exponents_balanced = false;
  bool jump_exact = false;
  bool jump_numeric = false;
  bool analytic_inside = false;
  bool asymptotics = false;
  bool determinant = false;
  std::string worst_residual;
  std::vector<std::string> offending;

  bool pass() const {
    return jump_unimodular && exponents_balanced && jump_exact && jump_numeric && analytic_inside && asymptotics &&
           determinant;
  }
};

/// Exact jump identity, exact analyticity of the inside expressions at 0,
/// exact asymptotic powers of the outside expressions, det = 1, and a numeric
/// jump residual <= 2^{-prec/2} at the sample points.
RHReport verify_rhp(const YMatrix& y, const RHProblem& problem, const std::vector<GaussianRational>& samples,
                    mpfr_prec_t prec = 256);

/// Cofactor expansion; fine for the small sizes here.
ExpRational determinant(const ExpMatrix& m);

}  // namespace planarop
