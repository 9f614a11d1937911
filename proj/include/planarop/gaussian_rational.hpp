#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace planarop {

/// Formats q as "p/q" with q > 0 (integers carry an explicit "/1").
std::string rational_to_string(const mpq_class& q);

/// Accepts "p/q" or "p"; the result is canonical. Throws Error(invalid_input).
mpq_class parse_rational(std::string_view text);

/// Complex number with exact rational real and imaginary parts. GMP keeps
/// each part in lowest terms with a positive denominator.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational parse(std::string_view re, std::string_view im) {
    return {parse_rational(re), parse_rational(im)};
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// |re| + |im|; used as an exact pivot magnitude.
  mpq_class l1() const { return abs(re_) + abs(im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic on (re, im); only meaningful as a map key order.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Human-readable form, e.g. "1/2+3/1i".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

inline const GaussianRational kI{0, 1};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

GaussianRational pow(const GaussianRational& z, unsigned e);

}  // namespace planarop
