#include "planarop/exp_rational.hpp"

#include <algorithm>

#include "planarop/error.hpp"
#include "planarop/truncated_series.hpp"

namespace planarop {

ExpRational::ExpRational(const LaurentPoly& numerator, const GaussianRational& freq, const CPoly& den) : den_(den) {
  if (den_.is_zero()) throw Error(Errc::division_by_zero, "ExpRational with zero denominator");
  terms_.emplace(freq, numerator);
  canonicalize();
}

ExpRational::ExpRational(CPoly den, Terms terms) : den_(std::move(den)), terms_(std::move(terms)) {
  if (den_.is_zero()) throw Error(Errc::division_by_zero, "ExpRational with zero denominator");
  canonicalize();
}

void ExpRational::canonicalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms_.empty()) {
    den_ = CPoly(1);
    return;
  }
  if (!den_.is_monic()) {
    GaussianRational scale = GaussianRational(1) / den_.leading();
    den_ *= scale;
    for (auto& [freq, num] : terms_) num *= scale;
  }
}

bool ExpRational::is_laurent() const {
  if (den_.degree() != 0) return false;
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

LaurentPoly ExpRational::as_laurent() const {
  if (!is_laurent()) throw Error(Errc::precondition, "ExpRational is not a Laurent polynomial");
  return terms_.empty() ? LaurentPoly() : terms_.begin()->second;
}

int ExpRational::pole_order_bound() const {
  int order = 0;
  for (const auto& [freq, num] : terms_) order = std::max(order, num.pole_order());
  return order;
}

LaurentPoly ExpRational::laurent_expansion(int lo, int hi) const {
  if (terms_.empty() || lo > hi) return {};
  if (den_.coeff(0).is_zero())
    throw Error(Errc::denominator_vanishes_at_zero, "Laurent expansion needs den(0) != 0");
  int lowest_term = 0;
  for (const auto& [freq, num] : terms_) lowest_term = std::min(lowest_term, num.min_deg());
  if (hi < lowest_term) return {};
  // Every numerator z^m n(z) needs its series to order hi - m + 1.
  const std::size_t max_order = static_cast<std::size_t>(hi - lowest_term + 1);
  const TruncatedSeries inv_den = TruncatedSeries(den_, max_order).inverse();

  LaurentPoly result;
  for (const auto& [freq, num] : terms_) {
    const int m = num.min_deg();
    if (hi < m) continue;
    const std::size_t order = static_cast<std::size_t>(hi - m + 1);
    CPoly shifted_num(std::vector<GaussianRational>(num.coeffs().begin(), num.coeffs().end()));
    TruncatedSeries s = TruncatedSeries(shifted_num, order) * inv_den.truncated(order);
    if (!freq.is_zero()) s = s * TruncatedSeries::exp(freq, order);
    result += LaurentPoly(m, std::vector<GaussianRational>(s.coeffs().begin(), s.coeffs().end()));
  }
  return result.slice(lo, hi);
}

ExpRational& ExpRational::operator*=(const GaussianRational& s) {
  for (auto& [freq, num] : terms_) num *= s;
  canonicalize();
  return *this;
}

namespace {

ExpRational::Terms scaled_terms(const ExpRational::Terms& terms, const CPoly& factor) {
  ExpRational::Terms out;
  const LaurentPoly f(factor);
  for (const auto& [freq, num] : terms) out.emplace(freq, num * f);
  return out;
}

void accumulate(ExpRational::Terms& into, const ExpRational::Terms& from, bool negate) {
  for (const auto& [freq, num] : from) {
    auto [it, inserted] = into.try_emplace(freq);
    if (negate)
      it->second -= num;
    else
      it->second += num;
  }
}

ExpRational combine(const ExpRational& a, const ExpRational& b, bool subtract) {
  if (a.den() == b.den()) {
    ExpRational::Terms terms = a.terms();
    accumulate(terms, b.terms(), subtract);
    return ExpRational(a.den(), std::move(terms));
  }
  if (a.is_zero() && !subtract) return b;
  if (b.is_zero()) return a;
  ExpRational::Terms terms = scaled_terms(a.terms(), b.den());
  accumulate(terms, scaled_terms(b.terms(), a.den()), subtract);
  return ExpRational(a.den() * b.den(), std::move(terms));
}

}  // namespace

ExpRational operator+(const ExpRational& a, const ExpRational& b) { return combine(a, b, false); }

ExpRational operator-(const ExpRational& a, const ExpRational& b) { return combine(a, b, true); }

ExpRational operator-(const ExpRational& a) {
  ExpRational r = a;
  for (auto& [freq, num] : r.terms_) num = -num;
  return r;
}

ExpRational operator*(const ExpRational& a, const ExpRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  ExpRational::Terms terms;
  for (const auto& [fa, na] : a.terms_) {
    for (const auto& [fb, nb] : b.terms_) {
      auto [it, inserted] = terms.try_emplace(fa + fb);
      it->second += na * nb;
    }
  }
  CPoly den = a.den_.degree() == 0 ? b.den_ : (b.den_.degree() == 0 ? a.den_ : a.den_ * b.den_);
  return ExpRational(std::move(den), std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const ExpRational& f) {
  if (f.is_zero()) return os << "0";
  os << "[";
  bool first = true;
  for (const auto& [freq, num] : f.terms()) {
    if (!first) os << " + ";
    os << "(" << num << ")";
    if (!freq.is_zero()) os << "*exp((" << freq << ")z)";
    first = false;
  }
  os << "]";
  if (f.den().degree() > 0) os << " / (" << f.den() << ")";
  return os;
}

}  // namespace planarop
