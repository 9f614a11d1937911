#pragma once

#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/laurent_poly.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/report.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

/// (n_1, ..., n_p) with sum n and floor(n/p) <= n_j <= ceil(n/p).
struct MultiIndex {
  std::vector<unsigned> parts;

  unsigned total() const;
  std::size_t p() const { return parts.size(); }
  unsigned operator[](std::size_t k) const { return parts.at(k); }
  /// Checks the balance condition.
  bool is_balanced() const;
};

/// Ceilings go to the lowest indices: the first (n mod p) parts are ceil(n/p).
MultiIndex choose_multi_index(unsigned n, std::size_t p);

/// V_k(u) = prod_j (u - conj a_j)^{c_j + n_j - delta_{kj}} and its ray Laplace
/// transform w_k. k is 1-based.
struct TypeIIWeight {
  std::size_t k = 1;
  CPoly V;
  LaurentPoly w;
};

TypeIIWeight build_type_two_weight(const WeightSpec& w, const MultiIndex& idx, std::size_t k);

/// Residues of P W z^m w_k vanish for k = 1..p, m < n_k. Values carry k
/// (1-based) and m.
CheckReport check_type_two(const MonicOP& p, const WeightSpec& w, const MultiIndex& idx);

/// Q_{k,m} = V_k^{(m)} / W*, exact. Throws Error(nonzero_remainder) if the
/// division leaves a remainder and Error(precondition) unless m < n_k.
CPoly build_qkm(const WeightSpec& w, const MultiIndex& idx, std::size_t k, unsigned m);

/// All Q_{k,m}, ordered by k then m.
std::vector<CPoly> build_qkm_family(const WeightSpec& w, const MultiIndex& idx);

/// Rank of the n x n coefficient matrix of the Q_{k,m} family.
std::size_t qkm_rank(const WeightSpec& w, const MultiIndex& idx);

struct ZmwkDecomposition {
  CPoly Q;
  /// Boundary polynomial Pi_{k,m}(z) = sum_{i<m} V_k^{(i)}(0) z^{m-1-i}.
  CPoly Pi;
};

/// z^m w_k = L[W* Q_{k,m}] + Pi_{k,m}, verified exactly. Throws
/// Error(identity_violation) if the identity fails.
ZmwkDecomposition decompose_zmwk(const WeightSpec& w, const MultiIndex& idx, std::size_t k, unsigned m);

}  // namespace planarop
