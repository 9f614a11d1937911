#include "planarop/type_two.hpp"

#include <numeric>

#include "planarop/error.hpp"
#include "planarop/linear_solve.hpp"
#include "planarop/operators.hpp"

namespace planarop {

namespace {

void check_index(const WeightSpec& w, const MultiIndex& idx, std::size_t k) {
  if (idx.p() != w.p()) throw Error(Errc::precondition, "multi-index length differs from the number of nodes");
  if (k < 1 || k > w.p()) throw Error(Errc::precondition, "type II weight index out of range");
}

}  // namespace

unsigned MultiIndex::total() const { return std::accumulate(parts.begin(), parts.end(), 0U); }

bool MultiIndex::is_balanced() const {
  if (parts.empty()) return false;
  const unsigned n = total();
  const unsigned p = static_cast<unsigned>(parts.size());
  const unsigned lo = n / p;
  const unsigned hi = (n + p - 1) / p;
  for (unsigned part : parts)
    if (part < lo || part > hi) return false;
  return true;
}

MultiIndex choose_multi_index(unsigned n, std::size_t p) {
  if (p == 0) throw Error(Errc::precondition, "multi-index needs p >= 1");
  const unsigned pp = static_cast<unsigned>(p);
  MultiIndex idx{std::vector<unsigned>(p, n / pp)};
  for (unsigned j = 0; j < n % pp; ++j) ++idx.parts[j];
  return idx;
}

TypeIIWeight build_type_two_weight(const WeightSpec& w, const MultiIndex& idx, std::size_t k) {
  check_index(w, idx, k);
  CPoly v(1);
  for (std::size_t j = 0; j < w.p(); ++j) {
    const unsigned e = w.nodes()[j].c + idx[j] - (j + 1 == k ? 1U : 0U);
    v = v * pow(CPoly::linear(w.nodes()[j].a.conj()), e);
  }
  LaurentPoly transform = laplace_ray_transform(v);
  return {k, std::move(v), std::move(transform)};
}

CheckReport check_type_two(const MonicOP& p, const WeightSpec& w, const MultiIndex& idx) {
  CheckReport report("type_two");
  const LaurentPoly pw(p.P * w.W());
  for (std::size_t k = 1; k <= w.p(); ++k) {
    const LaurentPoly base = pw * build_type_two_weight(w, idx, k).w;
    for (unsigned m = 0; m < idx[k - 1]; ++m)
      report.record_indexed(static_cast<int>(k), static_cast<int>(m), residue_at_zero(base.shifted(static_cast<int>(m))));
  }
  return report;
}

CPoly build_qkm(const WeightSpec& w, const MultiIndex& idx, std::size_t k, unsigned m) {
  check_index(w, idx, k);
  if (m >= idx[k - 1]) throw Error(Errc::precondition, "Q_{k,m} needs m < n_k");
  const CPoly derived = build_type_two_weight(w, idx, k).V.derivative(m);
  auto [quotient, remainder] = divmod(derived, w.W_star());
  if (!remainder.is_zero())
    throw Error(Errc::nonzero_remainder, "V_k^(m) is not divisible by W* for k = " + std::to_string(k) +
                                             ", m = " + std::to_string(m));
  return quotient;
}

std::vector<CPoly> build_qkm_family(const WeightSpec& w, const MultiIndex& idx) {
  std::vector<CPoly> family;
  for (std::size_t k = 1; k <= w.p(); ++k)
    for (unsigned m = 0; m < idx[k - 1]; ++m) family.push_back(build_qkm(w, idx, k, m));
  return family;
}

std::size_t qkm_rank(const WeightSpec& w, const MultiIndex& idx) {
  const auto family = build_qkm_family(w, idx);
  const unsigned n = idx.total();
  Matrix coeffs(family.size(), n);
  for (std::size_t r = 0; r < family.size(); ++r)
    for (unsigned col = 0; col < n; ++col) coeffs(r, col) = family[r].coeff(col);
  return rank(std::move(coeffs));
}

ZmwkDecomposition decompose_zmwk(const WeightSpec& w, const MultiIndex& idx, std::size_t k, unsigned m) {
  const TypeIIWeight weight = build_type_two_weight(w, idx, k);
  CPoly q = build_qkm(w, idx, k, m);

  // m integrations by parts; each contributes V^{(i)}(0) z^{m-1-i}.
  std::vector<GaussianRational> pi(m);
  for (unsigned i = 0; i < m; ++i) pi[m - 1 - i] = weight.V.derivative(i).coeff(0);
  CPoly boundary(std::move(pi));

  const LaurentPoly lhs = weight.w.shifted(static_cast<int>(m));
  const LaurentPoly rhs = laplace_ray_transform(w.W_star() * q) + LaurentPoly(boundary);
  if (lhs != rhs)
    throw Error(Errc::identity_violation, "z^m w_k decomposition failed for k = " + std::to_string(k) +
                                              ", m = " + std::to_string(m));
  return {std::move(q), std::move(boundary)};
}

}  // namespace planarop
