#include "planarop/gram.hpp"

#include <vector>

#include "planarop/factorial.hpp"

namespace planarop {

GaussianRational base_gaussian_moment(unsigned a, unsigned b) {
  if (a != b) return {};
  return GaussianRational(mpq_class(factorial(a)));
}

GaussianRational gram_entry(const WeightSpec& w, unsigned j, unsigned k) {
  const auto& coeffs = w.W().coeffs();
  GaussianRational sum;
  for (std::size_t alpha = 0; alpha < coeffs.size(); ++alpha) {
    if (coeffs[alpha].is_zero()) continue;
    // j + alpha == k + beta
    const long beta = static_cast<long>(j + alpha) - static_cast<long>(k);
    if (beta < 0 || beta >= static_cast<long>(coeffs.size())) continue;
    const auto& wb = coeffs[static_cast<std::size_t>(beta)];
    if (wb.is_zero()) continue;
    sum += coeffs[alpha] * wb.conj() *
           base_gaussian_moment(static_cast<unsigned>(j + alpha), static_cast<unsigned>(k + beta));
  }
  return sum;
}

GramMatrix::GramMatrix(const WeightSpec& w, unsigned n) : n_(n), entries_(n + 1, n + 1) {
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = j; k <= n; ++k) {
      entries_(j, k) = gram_entry(w, j, k);
      if (k != j) entries_(k, j) = entries_(j, k).conj();
    }
  }
}

bool GramMatrix::is_hermitian() const {
  for (unsigned j = 0; j <= n_; ++j)
    for (unsigned k = 0; k <= n_; ++k)
      if (entries_(j, k) != entries_(k, j).conj()) return false;
  return true;
}

bool GramMatrix::is_positive_definite() const {
  for (const auto& m : leading_principal_minors(entries_))
    if (!m.is_real() || sgn(m.re()) <= 0) return false;
  return true;
}

GaussianRational gram_via_fourier(const WeightSpec& w, unsigned j, unsigned k) {
  const unsigned c = w.c();
  // B[s][t] = coefficient of zeta_bar^s zeta^t; e^{zeta zeta_bar} = sum_m (zeta zeta_bar)^m / m!.
  const unsigned smax = j + c;
  const unsigned tmax = k + c;
  std::vector<std::vector<GaussianRational>> series(smax + 1, std::vector<GaussianRational>(tmax + 1));
  for (unsigned m = 0; m <= std::min(smax, tmax); ++m)
    series[m][m] = GaussianRational(mpq_class(mpz_class(1), factorial(m)));

  // W*(D_zeta) acts on t; after it only t <= k is needed.
  const auto& w_star = w.W_star().coeffs();
  std::vector<std::vector<GaussianRational>> after_zeta(smax + 1, std::vector<GaussianRational>(k + 1));
  for (unsigned s = 0; s <= smax; ++s) {
    for (unsigned t = 0; t <= k; ++t) {
      GaussianRational acc;
      for (std::size_t m = 0; m < w_star.size(); ++m) {
        // D^m zeta^{t+m} = (t+m)!/t! zeta^t
        const unsigned src = t + static_cast<unsigned>(m);
        if (src > tmax || series[s][src].is_zero() || w_star[m].is_zero()) continue;
        mpq_class falling(factorial(src), factorial(t));
        acc += w_star[m] * series[s][src] * GaussianRational(falling);
      }
      after_zeta[s][t] = std::move(acc);
    }
  }
  // W(D_zeta_bar) acts on s; only s = j is needed.
  const auto& w_coeffs = w.W().coeffs();
  GaussianRational coeff;
  for (std::size_t m = 0; m < w_coeffs.size(); ++m) {
    const unsigned src = j + static_cast<unsigned>(m);
    if (src > smax || w_coeffs[m].is_zero()) continue;
    mpq_class falling(factorial(src), factorial(j));
    coeff += w_coeffs[m] * after_zeta[src][k] * GaussianRational(falling);
  }
  return coeff * GaussianRational(mpq_class(factorial(j) * factorial(k)));
}

std::shared_ptr<const GramMatrix> GramCache::get(const WeightSpec& w, unsigned n) {
  const std::string key = w.key() + "|" + std::to_string(n);
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto gram = std::make_shared<const GramMatrix>(w, n);
  std::lock_guard lock(mutex_);
  entries_[key] = gram;
  return gram;
}

std::size_t GramCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace planarop
