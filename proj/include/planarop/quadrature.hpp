#pragma once

#include <vector>

#include "planarop/big_float.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

struct QuadratureOptions {
  unsigned radial_nodes = 200;
  unsigned angular_nodes = 512;
  mpfr_prec_t precision = 128;
};

struct GaussLegendreRule {
  std::vector<BigFloat> nodes;    // on [-1, 1]
  std::vector<BigFloat> weights;
};

/// Gauss-Legendre rule by Newton iteration on the three-term recurrence.
GaussLegendreRule gauss_legendre(unsigned count, mpfr_prec_t prec);

/// Smallest radius accepted for moment (j, k): 4 + max|a_j| + sqrt(max(j,k) + c).
BigFloat minimum_quadrature_radius(const WeightSpec& w, unsigned j, unsigned k, mpfr_prec_t prec);

/// (1/pi) \int_{|z|<R} z^j conj(z)^k |W(z)|^2 e^{-|z|^2} dA by Gauss-Legendre in r
/// and the trapezoid rule in the angle. Throws Error(radius_too_small).
ComplexBigFloat quadrature_moment(const WeightSpec& w, unsigned j, unsigned k, const BigFloat& radius,
                                  const QuadratureOptions& options = {});

}  // namespace planarop
