#pragma once

#include <map>
#include <ostream>

#include "planarop/cpoly.hpp"
#include "planarop/laurent_poly.hpp"

namespace planarop {

/// Finite exponential combination  sum_w (N_w(z) / den(z)) e^{w z}  with a
/// shared polynomial denominator and Laurent numerators.
///
/// Canonical form: den is monic, frequencies are distinct exact keys, zero
/// numerators are dropped, and the zero value has den = 1. Because the e^{w z}
/// are linearly independent over rational functions, a value is zero iff it
/// has no terms, which is what makes exact identity checks possible.
class ExpRational {
 public:
  using Terms = std::map<GaussianRational, LaurentPoly>;

  ExpRational() : den_(1) {}
  ExpRational(const LaurentPoly& numerator, const GaussianRational& freq = 0, const CPoly& den = CPoly(1));
  ExpRational(const CPoly& p) : ExpRational(LaurentPoly(p)) {}  // NOLINT(google-explicit-constructor)
  ExpRational(const GaussianRational& c) : ExpRational(LaurentPoly(CPoly(c))) {}  // NOLINT
  ExpRational(long c) : ExpRational(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  ExpRational(CPoly den, Terms terms);

  const CPoly& den() const { return den_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// True when den is 1 and only the frequency-0 term is present.
  bool is_laurent() const;
  /// Frequency-0 numerator when is_laurent(); zero if there are no terms.
  LaurentPoly as_laurent() const;

  /// Upper bound on the pole order at the origin (exact when den(0) != 0).
  int pole_order_bound() const;

  /// Coefficients of z^lo..z^hi in the Laurent expansion at 0.
  /// Throws Error(denominator_vanishes_at_zero) when den(0) == 0.
  LaurentPoly laurent_expansion(int lo, int hi) const;

  ExpRational& operator*=(const GaussianRational& s);
  friend ExpRational operator+(const ExpRational& a, const ExpRational& b);
  friend ExpRational operator-(const ExpRational& a, const ExpRational& b);
  friend ExpRational operator-(const ExpRational& a);
  friend ExpRational operator*(const ExpRational& a, const ExpRational& b);
  friend ExpRational operator*(ExpRational a, const GaussianRational& s) { return a *= s; }

  ExpRational& operator+=(const ExpRational& o) { return *this = *this + o; }
  ExpRational& operator-=(const ExpRational& o) { return *this = *this - o; }

  friend bool operator==(const ExpRational& a, const ExpRational& b) { return (a - b).is_zero(); }

 private:
  void canonicalize();
  CPoly den_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ExpRational& f);

}  // namespace planarop
