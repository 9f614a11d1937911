#include "planarop/zeros.hpp"

#include "planarop/error.hpp"

namespace planarop {

namespace {

constexpr unsigned kMaxIterations = 500;

// Horner for p and p' together.
void eval_with_derivative(const std::vector<ComplexBigFloat>& c, const ComplexBigFloat& z, ComplexBigFloat& p,
                          ComplexBigFloat& dp) {
  const mpfr_prec_t prec = z.precision();
  p = c.back();
  dp = ComplexBigFloat(prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

}  // namespace

ZeroSet find_zeros(const CPoly& poly, mpfr_prec_t prec) {
  if (poly.degree() < 1) throw Error(Errc::precondition, "find_zeros needs degree >= 1");
  const int n = poly.degree();

  // Monic, rounded once.
  std::vector<ComplexBigFloat> c;
  const GaussianRational lead = poly.leading();
  BigFloat max_coeff(prec);
  for (const auto& a : poly.coeffs()) {
    c.emplace_back(a / lead, prec);
    max_coeff = max(max_coeff, c.back().abs());
  }

  const BigFloat radius = BigFloat(1.0, prec) + max_coeff;
  const BigFloat two_pi = pi(prec) * BigFloat(2.0, prec);
  std::vector<ComplexBigFloat> z;
  for (int k = 0; k < n; ++k) {
    // The offset breaks the symmetry of real-coefficient polynomials.
    BigFloat angle = two_pi * BigFloat(static_cast<double>(k), prec) / BigFloat(static_cast<double>(n), prec) +
                     BigFloat(0.4, prec);
    ComplexBigFloat unit = exp(ComplexBigFloat(BigFloat(prec), angle));
    z.push_back(ComplexBigFloat(radius * unit.re(), radius * unit.im()));
  }

  ZeroSet out;
  out.degree = n;
  const BigFloat tol = pow2(-static_cast<long>(prec) + 16, prec);
  ComplexBigFloat p(prec), dp(prec);
  const ComplexBigFloat one(GaussianRational(1), prec);
  for (out.iterations = 0; out.iterations < kMaxIterations && !out.converged; ++out.iterations) {
    BigFloat largest(prec);
    for (int k = 0; k < n; ++k) {
      eval_with_derivative(c, z[k], p, dp);
      if (p.is_zero()) continue;
      if (dp.is_zero()) {
        // Critical point: nudge off it and retry next sweep.
        z[k] += ComplexBigFloat(tol, tol);
        largest = max(largest, radius);
        continue;
      }
      ComplexBigFloat repulsion(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        ComplexBigFloat diff = z[k] - z[j];
        if (!diff.is_zero()) repulsion += one / diff;
      }
      ComplexBigFloat ratio = p / dp;
      ComplexBigFloat step = ratio / (one - ratio * repulsion);
      z[k] -= step;
      largest = max(largest, step.abs());
    }
    out.converged = largest < tol;
  }

  for (const auto& zk : z) {
    eval_with_derivative(c, zk, p, dp);
    out.residuals.push_back(p.abs());
  }
  out.zeros = std::move(z);
  return out;
}

}  // namespace planarop
