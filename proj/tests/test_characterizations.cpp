#include "doctest.h"
#include "planarop/characterizations.hpp"
#include "planarop/error.hpp"
#include "planarop/gram.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/operators.hpp"
#include "support.hpp"

using namespace planarop;
using testing::poly;
using testing::q;

namespace {

const GaussianRational& residue_for(const CheckReport& r, int k) {
  for (const auto& v : r.values)
    if (v.k == k) return v.value;
  FAIL("no value for k=" << k);
  static GaussianRational none;
  return none;
}

// Maclaurin coefficients of P W + sum Q_j e^{conj(a_j) z}, computed directly
// from the exponential series.
std::vector<GaussianRational> form_coefficients(const TypeISolution& s, const WeightSpec& w, std::size_t order) {
  TruncatedSeries acc(s.P * w.W(), order);
  for (std::size_t j = 0; j < s.Qs.size(); ++j)
    acc = acc + TruncatedSeries(s.Qs[j], order) * TruncatedSeries::exp(w.nodes()[j].a.conj(), order);
  return {acc.coeffs().begin(), acc.coeffs().end()};
}

}  // namespace

TEST_CASE("phi_k") {
  CHECK(phi_k(testing::single(0), 0).value == LaurentPoly::monomial(-2));
  CHECK(phi_k(testing::single(1), 0).value == LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1));
  CHECK(phi_k(WeightSpec(), 2).value == LaurentPoly::monomial(-3, 2));
  testing::Gen gen(21);
  for (int t = 0; t < 10; ++t) {
    WeightSpec w = gen.weight();
    unsigned k = static_cast<unsigned>(gen.uniform(0, 5));
    PhiFunction phi = phi_k(w, k);
    CHECK(phi.value.min_deg() == -static_cast<int>(w.c() + k + 1));
    CHECK(phi.value == laplace_ray_transform(w.W_star() * CPoly::monomial(k)));
  }
}

TEST_CASE("characterization b examples") {
  WeightSpec one = testing::single(1);
  CHECK(check_b(MonicOP{1, poly({q(1, 2), 1})}, one).pass);
  CHECK(check_b(MonicOP{2, CPoly::monomial(2)}, testing::single(0)).pass);
  // Wrong P = z: residue of z(z - 1)(1/z^2 - 1/z) is -1.
  CheckReport bad = check_b(MonicOP{1, CPoly::monomial(1)}, one);
  CHECK_FALSE(bad.pass);
  CHECK(residue_for(bad, 0) == q(-1));
}

TEST_CASE("characterization c examples") {
  for (unsigned n = 0; n < 5; ++n) CHECK(check_c(MonicOP{n, CPoly::monomial(n)}, testing::single(0)).pass);
  WeightSpec one = testing::single(1);
  CheckReport ok = check_c(MonicOP{1, poly({q(1, 2), 1})}, one);
  CHECK(ok.pass);
  // (D - 1)[(z + 1/2)(z - 1)] = -z^2 + 5/2 z; z^1 coefficient is the diagnostic.
  CHECK(ok.diagnostics.at("coeff_z^n") == q(5, 2));
  CheckReport bad = check_c(MonicOP{1, CPoly::monomial(1)}, one);
  CHECK_FALSE(bad.pass);
  CHECK(residue_for(bad, 0) == q(-1));
}

TEST_CASE("type I system examples") {
  WeightSpec one = testing::single(1);
  TypeISolution s1 = solve_type_one(one, 1);
  CHECK(s1.P == poly({q(1, 2), 1}));
  REQUIRE(s1.Qs.size() == 1);
  CHECK(s1.Qs[0] == CPoly(q(1, 2)));
  TypeISolution s0 = solve_type_one(one, 0);
  CHECK(s0.P == CPoly(1));
  CHECK(s0.Qs[0] == CPoly(1));
  for (unsigned c = 1; c <= 3; ++c)
    for (unsigned n = 0; n <= 4; ++n) {
      TypeISolution s = solve_type_one(testing::single(0, c), n);
      CHECK(s.P == CPoly::monomial(n));
      CHECK(s.Qs[0].is_zero());
    }
}

TEST_CASE("type I solution matches the moment solution") {
  testing::Gen gen(22);
  for (int t = 0; t < 25; ++t) {
    WeightSpec w = gen.weight(3, 3);
    unsigned n = static_cast<unsigned>(gen.uniform(0, 6));
    CAPTURE(w.key());
    CAPTURE(n);
    TypeISolution s = solve_type_one(w, n);
    CHECK(s.P == monic_op(w, n).P);
    for (std::size_t j = 0; j < w.p(); ++j) CHECK(s.Qs[j].degree() <= static_cast<int>(w.nodes()[j].c) - 1);
    auto coeffs = form_coefficients(s, w, n + w.c() + 6);
    for (std::size_t i = 0; i < n + w.c(); ++i) CHECK(coeffs[i] == q(0));
    CHECK(check_type_one_contour(s, w).pass);
    CHECK(check_reduced_type_one(s, w, true).pass);
    for (std::size_t p0 = 1; p0 <= w.p(); ++p0) CHECK(check_singled_out(s, w, p0).pass);
    CHECK(check_b(MonicOP{n, s.P}, w).pass);
    CHECK(check_c(MonicOP{n, s.P}, w).pass);
    CHECK_FALSE(check_c(MonicOP{n, s.P}, w).diagnostics.at("coeff_z^n").is_zero());
  }
}

TEST_CASE("contour checks reject perturbations") {
  WeightSpec one = testing::single(1);
  TypeISolution s = solve_type_one(one, 1);
  CHECK(check_type_one_contour(s, one).pass);
  TypeISolution bumped = s;
  bumped.P = poly({1, 1});
  CHECK_FALSE(check_type_one_contour(bumped, one).pass);
  CHECK_FALSE(check_singled_out(bumped, one, 1).pass);
  CHECK(check_singled_out(s, one, 1).pass);

  CHECK(check_type_one_contour(TypeISolution{3, CPoly::monomial(3), {CPoly()}}, testing::single(0, 2)).pass);
}

TEST_CASE("reduced normalization") {
  WeightSpec one = testing::single(1);
  CheckReport r0 = check_reduced_type_one(solve_type_one(one, 0), one);
  CHECK(r0.pass);
  CHECK(residue_for(r0, 0) == q(-1));
  CheckReport r1 = check_reduced_type_one(solve_type_one(one, 1), one);
  CHECK(r1.pass);
  CHECK(residue_for(r1, 0) == q(-1));
  TypeISolution zero{1, poly({q(1, 2), 1}), {CPoly()}};
  CHECK_FALSE(check_reduced_type_one(zero, one).pass);
  CHECK_THROWS_AS(check_reduced_type_one(solve_type_one(testing::single(0), 1), testing::single(0)), Error);
  WeightSpec mixed({Node{q(0), 2}, Node{q(1, 1, 1, 1), 1}});
  CHECK(check_reduced_type_one(solve_type_one(mixed, 3), mixed, true).pass);
}

TEST_CASE("fundamental identity") {
  GaussianRational a = q(3, 2, -2, 5);
  WeightSpec w = testing::single(a);
  CheckReport r = verify_fundamental_identity(CPoly(1), CPoly(1), w);
  CHECK(r.pass);
  CHECK(r.values.at(0).value == GaussianRational(1 + a.norm()));
  CheckReport r2 = verify_fundamental_identity(CPoly::monomial(1), CPoly(1), w);
  CHECK(r2.pass);
  CHECK(r2.values.at(0).value == -a);
  CHECK(verify_fundamental_identity(CPoly(1), CPoly(1), WeightSpec()).values.at(0).value == q(1));

  testing::Gen gen(23);
  for (int t = 0; t < 15; ++t) {
    WeightSpec wr = gen.weight(3, 2);
    CPoly p = gen.polynomial(4), qq = gen.polynomial(4);
    CheckReport rr = verify_fundamental_identity(p, qq, wr);
    CHECK(rr.pass);
    CHECK(rr.values.at(0).value == scalar_product(p, qq, wr));
  }
}
