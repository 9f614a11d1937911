#pragma once

#include <vector>

#include "planarop/big_float.hpp"
#include "planarop/cpoly.hpp"

namespace planarop {

struct ZeroSet {
  int degree = 0;
  std::vector<ComplexBigFloat> zeros;
  /// |P(z_i)| for the monic normalization of P, at the working precision.
  std::vector<BigFloat> residuals;
  unsigned iterations = 0;
  bool converged = false;
};

/// Aberth-Ehrlich iteration at `prec` bits. Coefficients are rounded once on
/// entry. Stops when the largest update is below 2^{-prec+16}; after 500
/// sweeps the current approximations are returned with converged = false.
/// Throws Error(precondition) for constant P.
ZeroSet find_zeros(const CPoly& p, mpfr_prec_t prec = 256);

}  // namespace planarop
