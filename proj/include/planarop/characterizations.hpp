#pragma once

#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/exp_rational.hpp"
#include "planarop/gram.hpp"
#include "planarop/laurent_poly.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/report.hpp"
#include "planarop/truncated_series.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

/// phi_k(z) = \int_0^{conj(z) inf} W*(u) u^k e^{-uz} du as a Laurent polynomial.
struct PhiFunction {
  unsigned k = 0;
  LaurentPoly value;
};

PhiFunction phi_k(const WeightSpec& w, unsigned k);

/// Residues of P W phi_k vanish for k < n. The k = n residue is reported
/// as diagnostic "residue_k=n".
CheckReport check_b(const MonicOP& p, const WeightSpec& w);

/// Coefficients z^0..z^{n-1} of W*(D)[P W] vanish. The z^n coefficient is
/// reported as diagnostic "coeff_z^n".
CheckReport check_c(const MonicOP& p, const WeightSpec& w);

/// (P, Q_1..Q_p) with P W + sum_j Q_j e^{conj(a_j) z} = O(z^{n+c}).
/// A plain value: only solve_type_one guarantees the vanishing property.
struct TypeISolution {
  unsigned n = 0;
  CPoly P;
  std::vector<CPoly> Qs;
};

/// P W + sum_j Q_j e^{conj(a_j) z}
ExpRational type_one_form(const TypeISolution& sol, const WeightSpec& w);

/// Maclaurin coefficients of type_one_form modulo z^order.
TruncatedSeries type_one_series(const TypeISolution& sol, const WeightSpec& w, std::size_t order);

/// Solves the (n+c)x(n+c) Hermite-Pade system with P monic of degree n and
/// deg Q_j <= c_j - 1, then re-checks the vanishing to order n+c+buffer.
/// Throws Error(singular_system) or Error(identity_violation).
TypeISolution solve_type_one(const WeightSpec& w, unsigned n, unsigned truncation_buffer = 10);

/// Residues of (P W + sum Q_j e^{conj(a_j) s}) s^k / s^{n+c}, k < n+c, vanish.
CheckReport check_type_one_contour(const TypeISolution& sol, const WeightSpec& w);

/// Residues of sum_j Q_j e^{conj(a_j) s} s^k / (s^{n+c} W(s)) equal -delta_{k,c-1}
/// for k < c. A node at the origin throws Error(node_at_origin) unless
/// allow_origin_node is set; then, with c0 the origin multiplicity, the
/// exponent becomes n+c-c0 and the condition -delta_{k,c-c0-1} for k < c-c0.
CheckReport check_reduced_type_one(const TypeISolution& sol, const WeightSpec& w, bool allow_origin_node = false);

/// Eliminates Q_{p0} (1-based): residues of
/// (P W e^{-conj(a_p0) s} + sum_{j != p0} Q_j e^{(conj(a_j) - conj(a_p0)) s}) s^k / s^{n+c}
/// vanish for k < n + c - c_{p0}.
CheckReport check_singled_out(const TypeISolution& sol, const WeightSpec& w, std::size_t p0);

/// <P, Q>_W from Gram entries against Res_0 P W L[W* Q*].
CheckReport verify_fundamental_identity(const CPoly& p, const CPoly& q, const WeightSpec& w);

/// <P, Q>_W by bilinearity over gram_entry.
GaussianRational scalar_product(const CPoly& p, const CPoly& q, const WeightSpec& w);

}  // namespace planarop
