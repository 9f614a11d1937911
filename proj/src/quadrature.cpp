#include "planarop/quadrature.hpp"

#include <cmath>

#include "planarop/error.hpp"
#include "planarop/operators.hpp"

namespace planarop {

GaussLegendreRule gauss_legendre(unsigned count, mpfr_prec_t prec) {
  GaussLegendreRule rule;
  rule.nodes.reserve(count);
  rule.weights.reserve(count);
  const mpfr_prec_t work = prec + 16;
  const BigFloat one(1.0, work);
  const BigFloat two(2.0, work);
  const BigFloat tol = pow2(-static_cast<long>(prec) + 4, work);

  for (unsigned i = 0; i < count; ++i) {
    // Tricomi's initial guess for the i-th largest root.
    BigFloat x(std::cos(M_PI * (i + 0.75) / (count + 0.5)), work);
    BigFloat dp(work);
    for (int iter = 0; iter < 100; ++iter) {
      BigFloat p0 = one;
      BigFloat p1 = x;
      for (unsigned m = 2; m <= count; ++m) {
        // m P_m = (2m-1) x P_{m-1} - (m-1) P_{m-2}
        BigFloat pm = (BigFloat(2.0 * m - 1, work) * x * p1 - BigFloat(m - 1.0, work) * p0) / BigFloat(m, work);
        p0 = std::move(p1);
        p1 = std::move(pm);
      }
      // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = BigFloat(count, work) * (x * p1 - p0) / (x * x - one);
      BigFloat dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= tol) break;
    }
    // Recompute the derivative at the converged node.
    BigFloat p0 = one;
    BigFloat p1 = x;
    for (unsigned m = 2; m <= count; ++m) {
      BigFloat pm = (BigFloat(2.0 * m - 1, work) * x * p1 - BigFloat(m - 1.0, work) * p0) / BigFloat(m, work);
      p0 = std::move(p1);
      p1 = std::move(pm);
    }
    dp = BigFloat(count, work) * (x * p1 - p0) / (x * x - one);
    BigFloat weight = two / ((one - x * x) * dp * dp);
    rule.nodes.push_back(std::move(x));
    rule.weights.push_back(std::move(weight));
  }
  return rule;
}

BigFloat minimum_quadrature_radius(const WeightSpec& w, unsigned j, unsigned k, mpfr_prec_t prec) {
  BigFloat max_abs(prec);
  for (const auto& node : w.nodes()) max_abs = max(max_abs, ComplexBigFloat(node.a, std::max<mpfr_prec_t>(prec, 64)).abs());
  const unsigned n = std::max(j, k);
  return BigFloat(4.0, prec) + max_abs + sqrt(BigFloat(static_cast<double>(n + w.c()), prec));
}

ComplexBigFloat quadrature_moment(const WeightSpec& w, unsigned j, unsigned k, const BigFloat& radius,
                                  const QuadratureOptions& options) {
  const mpfr_prec_t prec = options.precision;
  if (radius < minimum_quadrature_radius(w, j, k, prec))
    throw Error(Errc::radius_too_small, "quadrature radius below 4 + max|a| + sqrt(n + c)");

  const GaussLegendreRule rule = gauss_legendre(options.radial_nodes, prec);
  const BigFloat half_r = radius / BigFloat(2.0, prec);
  const unsigned m = options.angular_nodes;

  // e^{i theta_l} on the uniform angular grid.
  std::vector<ComplexBigFloat> unit;
  unit.reserve(m);
  const BigFloat step = pi(prec) * BigFloat(2.0, prec) / BigFloat(static_cast<double>(m), prec);
  for (unsigned l = 0; l < m; ++l) {
    BigFloat theta = step * BigFloat(static_cast<double>(l), prec);
    BigFloat s(prec);
    BigFloat c(prec);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    unit.emplace_back(std::move(c), std::move(s));
  }

  ComplexBigFloat total(prec);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const BigFloat r = half_r * (rule.nodes[q] + BigFloat(1.0, prec));
    ComplexBigFloat ring(prec);
    for (unsigned l = 0; l < m; ++l) {
      const ComplexBigFloat z = ComplexBigFloat(r * unit[l].re(), r * unit[l].im());
      const ComplexBigFloat wz = evaluate(w.W(), z);
      // z^j conj(z)^k |W|^2
      ring += pow(z, static_cast<long>(j)) * pow(z.conj(), static_cast<long>(k)) *
              ComplexBigFloat(wz.norm(), BigFloat(prec));
    }
    // (1/pi) * (2 pi / m) * sum = (2/m) * sum; times r e^{-r^2} dr.
    const BigFloat radial = rule.weights[q] * half_r * r * exp(-(r * r));
    total += ring * ComplexBigFloat(radial, BigFloat(prec));
  }
  return total * ComplexBigFloat(BigFloat(2.0, prec) / BigFloat(static_cast<double>(m), prec), BigFloat(prec));
}

}  // namespace planarop
