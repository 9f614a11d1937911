#pragma once

#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// Dense polynomial over the Gaussian rationals; coefficient of z^k at index k.
/// Trailing zeros are stripped so the zero polynomial has no coefficients.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<GaussianRational> coeffs);
  CPoly(const GaussianRational& constant);  // NOLINT(google-explicit-constructor)
  CPoly(long constant) : CPoly(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)

  static CPoly monomial(unsigned k, const GaussianRational& c = 1);
  /// z - root
  static CPoly linear(const GaussianRational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == GaussianRational(1); }

  std::span<const GaussianRational> coeffs() const { return coeffs_; }
  /// Zero beyond the degree.
  const GaussianRational& coeff(std::size_t k) const;
  const GaussianRational& leading() const { return coeff(coeffs_.empty() ? 0 : coeffs_.size() - 1); }

  GaussianRational operator()(const GaussianRational& z) const;

  CPoly derivative(unsigned order = 1) const;
  /// P*(z) = conj(P(conj z)): coefficients conjugated.
  CPoly conjugate_star() const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const GaussianRational& s);

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator-(const CPoly& a);
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const GaussianRational& s) { return a *= s; }
  friend CPoly operator*(const GaussianRational& s, CPoly a) { return a *= s; }

  friend bool operator==(const CPoly& a, const CPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

CPoly pow(const CPoly& p, unsigned e);

/// Euclidean division: num = quotient * den + remainder, deg remainder < deg den.
std::pair<CPoly, CPoly> divmod(const CPoly& num, const CPoly& den);

std::ostream& operator<<(std::ostream& os, const CPoly& p);

}  // namespace planarop
