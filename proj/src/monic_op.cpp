#include "planarop/monic_op.hpp"

#include "planarop/error.hpp"

namespace planarop {

MonicOP monic_op(const GramMatrix& gram) {
  const unsigned n = gram.n();
  if (n == 0) return {0, CPoly(1)};
  // Row k of the system is the k-th orthogonality condition, unknowns p_0..p_{n-1}.
  Matrix a(n, n);
  std::vector<GaussianRational> b(n);
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned j = 0; j < n; ++j) a(k, j) = gram(j, k);
    b[k] = -gram(n, k);
  }
  auto x = solve_linear(std::move(a), std::move(b));
  if (!x) throw Error(Errc::singular_gram, "Gram system is singular for n = " + std::to_string(n));
  x->push_back(GaussianRational(1));
  return {n, CPoly(std::move(*x))};
}

MonicOP monic_op(const WeightSpec& w, unsigned n) { return monic_op(GramMatrix(w, n)); }

MonicOP monic_op(const WeightSpec& w, unsigned n, GramCache& cache) { return monic_op(*cache.get(w, n)); }

}  // namespace planarop
