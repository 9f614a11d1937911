#pragma once

#include "planarop/big_float.hpp"
#include "planarop/cpoly.hpp"
#include "planarop/exp_rational.hpp"
#include "planarop/laurent_poly.hpp"
#include "planarop/truncated_series.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

/// Q*(z) = conj(Q(conj z)).
CPoly poly_conjugate_star(const CPoly& p);

/// Applies the constant-coefficient operator op(D) = sum_m op_m D^m.
CPoly apply_operator(const CPoly& op, const CPoly& f);
/// Result is known to order f.order() - deg(op); throws truncation_too_short
/// unless f.order() > deg(op).
TruncatedSeries apply_operator(const CPoly& op, const TruncatedSeries& f);

/// W*(D) = prod_j (D - conj a_j)^{c_j}.
CPoly apply_w_star_operator(const WeightSpec& w, const CPoly& f);
TruncatedSeries apply_w_star_operator(const WeightSpec& w, const TruncatedSeries& f);

/// Termwise Laplace transform along the ray: u^m -> m! / z^{m+1}.
LaurentPoly laplace_ray_transform(const CPoly& v);

/// Coefficient of z^{-1}.
GaussianRational residue_at_zero(const LaurentPoly& f);
/// Coefficient of z^{-1} of the Laurent expansion at 0 (needs den(0) != 0).
GaussianRational residue_at_zero(const ExpRational& f);

/// Terms z^{-1}..z^{-depth} of the Laurent expansion at 0. Throws
/// denominator_vanishes_at_zero if den(0) == 0 and precondition if f has
/// pole terms deeper than depth.
LaurentPoly principal_part(const ExpRational& f, int depth);
/// Principal part to the full pole order.
LaurentPoly principal_part(const ExpRational& f);

/// Numeric value of f at z. Internally works with 32 guard bits and rounds to
/// z's precision. Throws evaluation_at_pole at z = 0 (with pole terms) or
/// where den vanishes at working precision.
ComplexBigFloat evaluate(const ExpRational& f, const ComplexBigFloat& z);
ComplexBigFloat evaluate(const CPoly& p, const ComplexBigFloat& z);

}  // namespace planarop
