#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// RAII wrapper over mpfr_t. Every operation rounds to nearest; binary
/// operations produce a result at the larger of the operand precisions.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(double value, mpfr_prec_t prec);
  BigFloat(const mpq_class& value, mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 17) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

 private:
  void widen_to(mpfr_prec_t prec);
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pi(mpfr_prec_t prec);
/// 2^e at the given precision.
BigFloat pow2(long e, mpfr_prec_t prec);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// Complex binary floating point; precision is at least 64 bits.
class ComplexBigFloat {
 public:
  explicit ComplexBigFloat(mpfr_prec_t prec = 128);
  ComplexBigFloat(BigFloat re, BigFloat im);
  ComplexBigFloat(const GaussianRational& z, mpfr_prec_t prec);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  BigFloat& re() { return re_; }
  BigFloat& im() { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  BigFloat abs() const;
  BigFloat norm() const;
  ComplexBigFloat conj() const { return {re_, -im_}; }

  ComplexBigFloat& operator+=(const ComplexBigFloat& o);
  ComplexBigFloat& operator-=(const ComplexBigFloat& o);
  ComplexBigFloat& operator*=(const ComplexBigFloat& o);
  ComplexBigFloat& operator/=(const ComplexBigFloat& o);

  friend ComplexBigFloat operator+(ComplexBigFloat a, const ComplexBigFloat& b) { return a += b; }
  friend ComplexBigFloat operator-(ComplexBigFloat a, const ComplexBigFloat& b) { return a -= b; }
  friend ComplexBigFloat operator*(ComplexBigFloat a, const ComplexBigFloat& b) { return a *= b; }
  friend ComplexBigFloat operator/(ComplexBigFloat a, const ComplexBigFloat& b) { return a /= b; }
  friend ComplexBigFloat operator-(const ComplexBigFloat& a) { return {-a.re_, -a.im_}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

ComplexBigFloat exp(const ComplexBigFloat& z);
/// z^e for integer e (negative allowed for z != 0).
ComplexBigFloat pow(const ComplexBigFloat& z, long e);

}  // namespace planarop
