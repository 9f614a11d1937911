#include "planarop/operators.hpp"

#include <algorithm>

#include "planarop/error.hpp"
#include "planarop/factorial.hpp"

namespace planarop {

CPoly poly_conjugate_star(const CPoly& p) { return p.conjugate_star(); }

CPoly apply_operator(const CPoly& op, const CPoly& f) {
  CPoly result;
  for (int m = 0; m <= op.degree(); ++m) {
    const auto& w = op.coeff(static_cast<std::size_t>(m));
    if (!w.is_zero()) result += f.derivative(static_cast<unsigned>(m)) * w;
  }
  return result;
}

TruncatedSeries apply_operator(const CPoly& op, const TruncatedSeries& f) {
  const std::size_t deg = static_cast<std::size_t>(std::max(op.degree(), 0));
  if (f.order() <= deg)
    throw Error(Errc::truncation_too_short, "series order " + std::to_string(f.order()) +
                                                " does not exceed operator order " + std::to_string(deg));
  const std::size_t out_order = f.order() - deg;
  TruncatedSeries result(out_order);
  TruncatedSeries current = f;
  for (std::size_t m = 0; m <= deg; ++m) {
    if (m > 0) current = current.derivative();
    const auto& w = op.coeff(m);
    if (!w.is_zero()) result = result + current.truncated(out_order) * w;
  }
  return result;
}

CPoly apply_w_star_operator(const WeightSpec& w, const CPoly& f) { return apply_operator(w.W_star(), f); }

TruncatedSeries apply_w_star_operator(const WeightSpec& w, const TruncatedSeries& f) {
  return apply_operator(w.W_star(), f);
}

LaurentPoly laplace_ray_transform(const CPoly& v) {
  if (v.is_zero()) return {};
  const int deg = v.degree();
  // u^m -> m! z^{-(m+1)}; ascending storage starts at z^{-(deg+1)}.
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(deg + 1));
  for (int m = 0; m <= deg; ++m) {
    coeffs[static_cast<std::size_t>(deg - m)] =
        v.coeff(static_cast<std::size_t>(m)) * GaussianRational(mpq_class(factorial(static_cast<unsigned>(m))));
  }
  return LaurentPoly(-(deg + 1), std::move(coeffs));
}

GaussianRational residue_at_zero(const LaurentPoly& f) { return f.coeff(-1); }

GaussianRational residue_at_zero(const ExpRational& f) { return f.laurent_expansion(-1, -1).coeff(-1); }

LaurentPoly principal_part(const ExpRational& f, int depth) {
  const int bound = f.pole_order_bound();
  if (bound == 0) {
    if (f.den().coeff(0).is_zero() && !f.is_zero())
      throw Error(Errc::denominator_vanishes_at_zero, "principal part needs den(0) != 0");
    return {};
  }
  LaurentPoly full = f.laurent_expansion(-bound, -1);
  if (!full.is_zero() && full.min_deg() < -depth)
    throw Error(Errc::precondition, "principal part depth " + std::to_string(depth) + " is below the pole order " +
                                        std::to_string(-full.min_deg()));
  return full;
}

LaurentPoly principal_part(const ExpRational& f) { return principal_part(f, f.pole_order_bound()); }

namespace {

ComplexBigFloat eval_laurent(const LaurentPoly& p, const ComplexBigFloat& z) {
  ComplexBigFloat acc(z.precision());
  if (p.is_zero()) return acc;
  for (int k = p.max_deg(); k >= p.min_deg(); --k) {
    acc *= z;
    acc += ComplexBigFloat(p.coeff(k), z.precision());
  }
  // acc = sum c_k z^{k - min_deg}
  return acc * pow(z, p.min_deg());
}

}  // namespace

ComplexBigFloat evaluate(const CPoly& p, const ComplexBigFloat& z) {
  ComplexBigFloat acc(z.precision());
  for (int k = p.degree(); k >= 0; --k) {
    acc *= z;
    acc += ComplexBigFloat(p.coeff(static_cast<std::size_t>(k)), z.precision());
  }
  return acc;
}

ComplexBigFloat evaluate(const ExpRational& f, const ComplexBigFloat& z) {
  const mpfr_prec_t prec = z.precision();
  const mpfr_prec_t work = prec + 32;
  ComplexBigFloat zw(BigFloat(z.re()), BigFloat(z.im()));
  mpfr_prec_round(zw.re().raw(), work, MPFR_RNDN);
  mpfr_prec_round(zw.im().raw(), work, MPFR_RNDN);

  if (zw.is_zero() && f.pole_order_bound() > 0) throw Error(Errc::evaluation_at_pole, "evaluation at z = 0");

  ComplexBigFloat den = evaluate(f.den(), zw);
  BigFloat den_scale(work);
  {
    BigFloat zabs = zw.abs();
    BigFloat power(1.0, work);
    for (const auto& c : f.den().coeffs()) {
      den_scale += ComplexBigFloat(c, work).abs() * power;
      power *= zabs;
    }
  }
  if (den.abs() <= den_scale * pow2(-(static_cast<long>(prec) - 10), work))
    throw Error(Errc::evaluation_at_pole, "denominator vanishes at the evaluation point");

  ComplexBigFloat sum(work);
  for (const auto& [freq, num] : f.terms()) {
    ComplexBigFloat term = eval_laurent(num, zw);
    if (!freq.is_zero()) term *= exp(ComplexBigFloat(freq, work) * zw);
    sum += term;
  }
  sum /= den;
  ComplexBigFloat out(prec);
  mpfr_set(out.re().raw(), sum.re().raw(), MPFR_RNDN);
  mpfr_set(out.im().raw(), sum.im().raw(), MPFR_RNDN);
  return out;
}

}  // namespace planarop
