#include "planarop/laurent_poly.hpp"

#include <algorithm>

namespace planarop {

namespace {
const GaussianRational kZero;
}

LaurentPoly::LaurentPoly(int min_deg, std::vector<GaussianRational> coeffs)
    : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly::LaurentPoly(const CPoly& p) : coeffs_(p.coeffs().begin(), p.coeffs().end()) { normalize(); }

LaurentPoly LaurentPoly::monomial(int k, const GaussianRational& c) { return LaurentPoly(k, {c}); }

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_deg_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) min_deg_ = 0;
}

const GaussianRational& LaurentPoly::coeff(int k) const {
  if (is_zero() || k < min_deg_ || k > max_deg()) return kZero;
  return coeffs_[static_cast<std::size_t>(k - min_deg_)];
}

LaurentPoly LaurentPoly::slice(int lo, int hi) const {
  if (is_zero()) return {};
  lo = std::max(lo, min_deg_);
  hi = std::min(hi, max_deg());
  if (lo > hi) return {};
  std::vector<GaussianRational> out(coeffs_.begin() + (lo - min_deg_), coeffs_.begin() + (hi - min_deg_ + 1));
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::principal_part() const { return slice(min_deg_, -1); }

CPoly LaurentPoly::polynomial_part() const {
  if (is_zero() || max_deg() < 0) return {};
  std::vector<GaussianRational> out(static_cast<std::size_t>(max_deg() + 1));
  for (int k = std::max(0, min_deg_); k <= max_deg(); ++k) out[static_cast<std::size_t>(k)] = coeff(k);
  return CPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_deg_ += k;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(min_deg_, o.min_deg_);
  int hi = std::max(max_deg(), o.max_deg());
  std::vector<GaussianRational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(min_deg_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(o.min_deg_ - lo)] += o.coeffs_[i];
  min_deg_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.min_deg_ + b.min_deg_, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = p.min_deg(); k <= p.max_deg(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << p.coeff(k) << ")";
    if (k != 0) os << "z^" << k;
    first = false;
  }
  return os;
}

}  // namespace planarop
