#pragma once

#include <span>
#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// Maclaurin series known modulo z^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(const CPoly& p, std::size_t order);

  /// e^{omega z} mod z^order.
  static TruncatedSeries exp(const GaussianRational& omega, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  std::span<const GaussianRational> coeffs() const { return coeffs_; }
  const GaussianRational& operator[](std::size_t k) const { return coeffs_.at(k); }
  GaussianRational& operator[](std::size_t k) { return coeffs_.at(k); }

  bool is_zero() const;
  /// Index of the first nonzero coefficient; order() when all are zero.
  std::size_t vanishing_order() const;

  /// Result has order one less.
  TruncatedSeries derivative() const;
  /// Requires a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries truncated(std::size_t order) const;
  CPoly to_poly() const { return CPoly(coeffs_); }

  TruncatedSeries& operator*=(const GaussianRational& s);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<GaussianRational> coeffs_;
};

}  // namespace planarop
