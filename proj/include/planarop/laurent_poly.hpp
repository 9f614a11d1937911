#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// Finite Laurent polynomial sum_k c_k z^k, k >= min_deg, with its only
/// possible pole at the origin. Stored trimmed at both ends; zero has no
/// coefficients and min_deg 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_deg, std::vector<GaussianRational> coeffs);
  LaurentPoly(const CPoly& p);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int k, const GaussianRational& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int min_deg() const { return min_deg_; }
  /// Only meaningful when nonzero.
  int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const GaussianRational> coeffs() const { return coeffs_; }
  const GaussianRational& coeff(int k) const;

  /// Order of the pole at 0 (0 when there are no negative powers).
  int pole_order() const { return is_zero() || min_deg_ >= 0 ? 0 : -min_deg_; }
  bool is_polynomial() const { return pole_order() == 0; }

  /// Terms with exponent < 0.
  LaurentPoly principal_part() const;
  /// Terms with exponent >= 0.
  CPoly polynomial_part() const;
  /// Terms with lo <= exponent <= hi.
  LaurentPoly slice(int lo, int hi) const;
  /// Multiplies by z^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& s) { return a *= s; }
  friend LaurentPoly operator*(const GaussianRational& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.min_deg_ == b.min_deg_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  int min_deg_ = 0;
  std::vector<GaussianRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace planarop
