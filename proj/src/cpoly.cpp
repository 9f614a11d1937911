#include "planarop/cpoly.hpp"

#include "planarop/error.hpp"

namespace planarop {

namespace {
const GaussianRational kZero;
}

CPoly::CPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CPoly::CPoly(const GaussianRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

CPoly CPoly::monomial(unsigned k, const GaussianRational& c) {
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return CPoly(std::move(v));
}

CPoly CPoly::linear(const GaussianRational& root) {
  return CPoly(std::vector<GaussianRational>{-root, GaussianRational(1)});
}

void CPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& CPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

GaussianRational CPoly::operator()(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

CPoly CPoly::derivative(unsigned order) const {
  if (coeffs_.size() <= order) return {};
  std::vector<GaussianRational> out(coeffs_.size() - order);
  for (std::size_t k = order; k < coeffs_.size(); ++k) {
    mpz_class falling = 1;
    for (unsigned i = 0; i < order; ++i) falling *= static_cast<unsigned long>(k - i);
    out[k - order] = coeffs_[k] * GaussianRational(mpq_class(falling));
  }
  return CPoly(std::move(out));
}

CPoly CPoly::conjugate_star() const {
  std::vector<GaussianRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return CPoly(std::move(out));
}

CPoly& CPoly::operator+=(const CPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

CPoly& CPoly::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

CPoly operator-(const CPoly& a) {
  CPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CPoly(std::move(out));
}

CPoly pow(const CPoly& p, unsigned e) {
  CPoly result(1);
  for (unsigned i = 0; i < e; ++i) result = result * p;
  return result;
}

std::pair<CPoly, CPoly> divmod(const CPoly& num, const CPoly& den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (num.degree() < den.degree()) return {CPoly(), num};
  const int dn = den.degree();
  std::vector<GaussianRational> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<GaussianRational> quot(static_cast<std::size_t>(num.degree() - dn + 1));
  const GaussianRational& lead = den.leading();
  for (int k = num.degree() - dn; k >= 0; --k) {
    GaussianRational q = rem[static_cast<std::size_t>(k + dn)] / lead;
    if (q.is_zero()) continue;
    for (int i = 0; i <= dn; ++i) rem[static_cast<std::size_t>(k + i)] -= q * den.coeff(static_cast<std::size_t>(i));
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {CPoly(std::move(quot)), CPoly(std::move(rem))};
}

std::ostream& operator<<(std::ostream& os, const CPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << p.coeffs()[k] << ")";
    if (k > 0) os << "z^" << k;
    first = false;
  }
  return os;
}

}  // namespace planarop
