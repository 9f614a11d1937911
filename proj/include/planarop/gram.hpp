#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "planarop/gaussian_rational.hpp"
#include "planarop/linear_solve.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

/// (1/pi) \int z^a conj(z)^b e^{-|z|^2} dA = a! [a == b]
GaussianRational base_gaussian_moment(unsigned a, unsigned b);

/// <z^j, z^k>_W = sum_{alpha,beta} w_alpha conj(w_beta) (j+alpha)! [j+alpha == k+beta]
GaussianRational gram_entry(const WeightSpec& w, unsigned j, unsigned k);

/// Hermitian positive definite matrix G[j][k] = <z^j, z^k>_W, 0 <= j,k <= n.
class GramMatrix {
 public:
  GramMatrix(const WeightSpec& w, unsigned n);

  unsigned n() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  const GaussianRational& operator()(unsigned j, unsigned k) const { return entries_(j, k); }
  const Matrix& matrix() const { return entries_; }

  bool is_hermitian() const;
  /// All leading principal minors real and positive.
  bool is_positive_definite() const;

 private:
  unsigned n_;
  Matrix entries_;
};

/// Independent route: j! k! [zeta_bar^j zeta^k] W(D_zeta_bar) W*(D_zeta) e^{zeta zeta_bar},
/// treating zeta and zeta_bar as independent formal variables.
GaussianRational gram_via_fourier(const WeightSpec& w, unsigned j, unsigned k);

/// Gram matrices keyed by (weight, n). Concurrent lookups are safe; two racing
/// inserts of the same key compute equal values and the last one wins.
class GramCache {
 public:
  std::shared_ptr<const GramMatrix> get(const WeightSpec& w, unsigned n);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GramMatrix>> entries_;
};

}  // namespace planarop
