#include "planarop/truncated_series.hpp"

#include <algorithm>

#include "planarop/error.hpp"
#include "planarop/factorial.hpp"

namespace planarop {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw Error(Errc::truncation_too_short, "series order must be positive");
}

TruncatedSeries::TruncatedSeries(const CPoly& p, std::size_t order) : TruncatedSeries(order) {
  for (std::size_t k = 0; k < order; ++k) coeffs_[k] = p.coeff(k);
}

TruncatedSeries TruncatedSeries::exp(const GaussianRational& omega, std::size_t order) {
  TruncatedSeries s(order);
  GaussianRational power(1);
  for (std::size_t k = 0; k < order; ++k) {
    s.coeffs_[k] = power / GaussianRational(mpq_class(factorial(static_cast<unsigned>(k))));
    power *= omega;
  }
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

std::size_t TruncatedSeries::vanishing_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return k;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() < 2) throw Error(Errc::truncation_too_short, "cannot differentiate a series of order 1");
  TruncatedSeries d(order() - 1);
  for (std::size_t k = 1; k < order(); ++k) d.coeffs_[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
  return d;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero())
    throw Error(Errc::denominator_vanishes_at_zero, "series inverse needs a nonzero constant term");
  TruncatedSeries inv(order());
  GaussianRational c0inv = GaussianRational(1) / coeffs_[0];
  inv.coeffs_[0] = c0inv;
  for (std::size_t k = 1; k < order(); ++k) {
    GaussianRational acc;
    for (std::size_t i = 1; i <= k; ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * inv.coeffs_[k - i];
    }
    inv.coeffs_[k] = -acc * c0inv;
  }
  return inv;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw Error(Errc::truncation_too_short, "cannot extend a truncated series");
  TruncatedSeries t(order);
  std::copy_n(coeffs_.begin(), order, t.coeffs_.begin());
  return t;
}

TruncatedSeries& TruncatedSeries::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

}  // namespace planarop
