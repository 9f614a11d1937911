#pragma once

#include "planarop/cpoly.hpp"
#include "planarop/gram.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

/// Monic planar orthogonal polynomial of degree n for the weight |W|^2 e^{-|z|^2}.
struct MonicOP {
  unsigned n = 0;
  CPoly P;
};

/// Solves sum_{j<n} p_j G[j][k] = -G[n][k], k < n, exactly.
/// Throws Error(singular_gram) if elimination meets a singular system.
MonicOP monic_op(const WeightSpec& w, unsigned n);
MonicOP monic_op(const GramMatrix& gram);
MonicOP monic_op(const WeightSpec& w, unsigned n, GramCache& cache);

}  // namespace planarop
