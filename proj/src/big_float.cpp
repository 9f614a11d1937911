#include "planarop/big_float.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <utility>

#include "planarop/error.hpp"

namespace planarop {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::widen_to(mpfr_prec_t prec) {
  if (prec > precision()) mpfr_prec_round(value_, prec, MPFR_RNDN);
}

std::string BigFloat::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::unique_ptr<char, void (*)(char*)> guard(buffer, [](char* p) { mpfr_free_str(p); });
  return std::string(buffer);
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a);
  mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

ComplexBigFloat::ComplexBigFloat(mpfr_prec_t prec) : re_(prec), im_(prec) {
  if (prec < 64) throw Error(Errc::precondition, "complex precision must be at least 64 bits");
}

ComplexBigFloat::ComplexBigFloat(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (re_.precision() < 64 || im_.precision() < 64)
    throw Error(Errc::precondition, "complex precision must be at least 64 bits");
}

ComplexBigFloat::ComplexBigFloat(const GaussianRational& z, mpfr_prec_t prec)
    : re_(z.re(), prec), im_(z.im(), prec) {
  if (prec < 64) throw Error(Errc::precondition, "complex precision must be at least 64 bits");
}

BigFloat ComplexBigFloat::abs() const {
  BigFloat r(std::max(re_.precision(), im_.precision()));
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigFloat ComplexBigFloat::norm() const { return re_ * re_ + im_ * im_; }

ComplexBigFloat& ComplexBigFloat::operator+=(const ComplexBigFloat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexBigFloat& ComplexBigFloat::operator-=(const ComplexBigFloat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexBigFloat& ComplexBigFloat::operator*=(const ComplexBigFloat& o) {
  BigFloat r = re_ * o.re_ - im_ * o.im_;
  BigFloat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ComplexBigFloat& ComplexBigFloat::operator/=(const ComplexBigFloat& o) {
  BigFloat d = o.norm();
  if (d.is_zero()) throw Error(Errc::division_by_zero, "complex division by zero");
  BigFloat r = (re_ * o.re_ + im_ * o.im_) / d;
  BigFloat i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ComplexBigFloat exp(const ComplexBigFloat& z) {
  mpfr_prec_t prec = z.precision();
  BigFloat scale = exp(z.re());
  BigFloat c(prec);
  BigFloat s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return {scale * c, scale * s};
}

ComplexBigFloat pow(const ComplexBigFloat& z, long e) {
  mpfr_prec_t prec = z.precision();
  ComplexBigFloat result(GaussianRational(1), prec);
  ComplexBigFloat base = z;
  if (e < 0) {
    base = ComplexBigFloat(GaussianRational(1), prec) / z;
    e = -e;
  }
  while (e != 0) {
    if (e & 1L) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

}  // namespace planarop
