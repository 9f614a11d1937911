#include <cmath>

#include "doctest.h"
#include "planarop/big_float.hpp"
#include "planarop/error.hpp"
#include "planarop/exp_rational.hpp"
#include "planarop/factorial.hpp"
#include "planarop/linear_solve.hpp"
#include "planarop/operators.hpp"
#include "planarop/truncated_series.hpp"
#include "support.hpp"

using namespace planarop;
using testing::poly;
using testing::q;

namespace {

const GaussianRational I = GaussianRational(0, 1);

ExpRational ex(long c, const GaussianRational& w) { return ExpRational(LaurentPoly(CPoly(c)), w); }

double to_double(const BigFloat& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }

}  // namespace

TEST_CASE("gaussian rationals are canonical") {
  GaussianRational a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a == q(1, 2, -1, 2));
  CHECK(a.to_string() == "1/2-1/2i");
  CHECK(GaussianRational(0).to_string() == "0/1+0/1i");
  CHECK(a * a.conj() == GaussianRational(a.norm()));
  CHECK((a / a) == GaussianRational(1));
  CHECK(I * I == GaussianRational(-1));
  CHECK(pow(q(1, 1, 1, 1), 4) == GaussianRational(-4));
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25) == mpz_class("15511210043330985984000000"));
}

TEST_CASE("conjugate star") {
  CHECK(poly_conjugate_star(poly({-I, 1})) == poly({I, 1}));
  CHECK(poly_conjugate_star(CPoly::monomial(2)) == CPoly::monomial(2));
  CHECK(poly_conjugate_star(poly({q(1, 1, 1, 1), 1})) == poly({q(1, 1, -1, 1), 1}));

  testing::Gen gen(1);
  for (int i = 0; i < 30; ++i) {
    CPoly a = gen.polynomial(5), b = gen.polynomial(5);
    CHECK(poly_conjugate_star(poly_conjugate_star(a)) == a);
    CHECK(poly_conjugate_star(a * b) == poly_conjugate_star(a) * poly_conjugate_star(b));
  }
}

TEST_CASE("polynomial ring laws and division") {
  testing::Gen gen(2);
  for (int i = 0; i < 40; ++i) {
    CPoly a = gen.polynomial(5), b = gen.polynomial(4), c = gen.polynomial(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CPoly());
    if (b.degree() >= 0) {
      auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < std::max(b.degree(), 0));
    }
    GaussianRational z = gen.rational_point();
    CHECK((a * b)(z) == a(z) * b(z));
  }
  CHECK_THROWS_AS(divmod(poly({1, 1}), CPoly()), Error);
  CHECK(CPoly::linear(q(2)) == poly({-2, 1}));
  CHECK(pow(CPoly::linear(q(1)), 2) == poly({1, -2, 1}));
  CHECK(poly({1, 2, 3}).derivative(1) == poly({2, 6}));
  CHECK(CPoly().degree() == -1);
}

TEST_CASE("laurent ring laws") {
  testing::Gen gen(3);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly a = LaurentPoly(gen.polynomial(4)).shifted(static_cast<int>(gen.uniform(-4, 2)));
    LaurentPoly b = LaurentPoly(gen.polynomial(4)).shifted(static_cast<int>(gen.uniform(-4, 2)));
    LaurentPoly c = LaurentPoly(gen.polynomial(3)).shifted(static_cast<int>(gen.uniform(-4, 2)));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.principal_part() + LaurentPoly(a.polynomial_part()) == a);
  }
  LaurentPoly f = LaurentPoly::monomial(-1, 3) + LaurentPoly::monomial(0, 2);
  CHECK(residue_at_zero(f) == q(3));
  CHECK(residue_at_zero(LaurentPoly::monomial(2)) == q(0));
}

TEST_CASE("laplace ray transform") {
  CHECK(laplace_ray_transform(CPoly(1)) == LaurentPoly::monomial(-1));
  CHECK(laplace_ray_transform(poly({-1, 1})) == LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1));
  CHECK(laplace_ray_transform(CPoly::monomial(2)) == LaurentPoly::monomial(-3, 2));
  // (z + 1/2)(z - 1)(1/z^2 - 1/z) has zero residue.
  LaurentPoly prod = LaurentPoly(poly({q(1, 2), 1}) * poly({-1, 1})) * laplace_ray_transform(poly({-1, 1}));
  CHECK(residue_at_zero(prod) == q(0));

  testing::Gen gen(4);
  for (int i = 0; i < 20; ++i) {
    CPoly v = gen.polynomial(6);
    CHECK(laplace_ray_transform(v).min_deg() == -(v.degree() + 1));
    for (int m = 0; m <= v.degree(); ++m) {
      // Residue of z^m * L[v] picks m! times the u^m coefficient.
      GaussianRational r = residue_at_zero(laplace_ray_transform(v).shifted(m));
      CHECK(r == v.coeff(static_cast<std::size_t>(m)) * GaussianRational(mpq_class(factorial(m))));
    }
  }
}

TEST_CASE("exp rational canonical form") {
  ExpRational a(poly({1, 1}), q(2), poly({2, 2}));  // (1+z) e^{2z} / (2+2z) = e^{2z}/2
  CHECK(a.den() == poly({1, 1}));
  ExpRational b(LaurentPoly(CPoly(q(1, 2))), q(2));
  CHECK(a == b);  // equal values cancel after cross-multiplication
  ExpRational sum = ex(1, q(1)) + ex(2, q(1)) - ex(3, q(1));
  CHECK(sum.is_zero());
  CHECK(sum.den() == CPoly(1));
  ExpRational prod = ex(1, q(1)) * ex(1, q(-1));
  CHECK(prod.is_laurent());
  CHECK(prod == ExpRational(1));

  testing::Gen gen(5);
  for (int i = 0; i < 15; ++i) {
    auto rnd = [&] {
      return ExpRational(LaurentPoly(gen.polynomial(3)).shifted(static_cast<int>(gen.uniform(-3, 1))),
                         gen.rational_point(2, 1));
    };
    ExpRational x = rnd(), y = rnd(), z = rnd();
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("truncated series") {
  TruncatedSeries e = TruncatedSeries::exp(q(1), 6);
  CHECK(e[0] == q(1));
  CHECK(e[5] == q(1, 120));
  CHECK((e * TruncatedSeries::exp(q(-1), 6)) == TruncatedSeries(CPoly(1), 6));
  TruncatedSeries d(poly({1, -1}), 8);
  CHECK((d * d.inverse()) == TruncatedSeries(CPoly(1), 8));
  CHECK_THROWS_AS(TruncatedSeries(CPoly::monomial(1), 4).inverse(), Error);
  CHECK_THROWS_AS(TruncatedSeries(0), Error);
  CHECK(TruncatedSeries(CPoly::monomial(3), 6).vanishing_order() == 3);
}

TEST_CASE("w-star operator examples") {
  WeightSpec z_only = testing::single(0);
  for (unsigned n = 0; n < 5; ++n)
    CHECK(apply_w_star_operator(z_only, CPoly::monomial(n + 1)) == CPoly::monomial(n, q(n + 1)));
  WeightSpec one = testing::single(1);
  CHECK(apply_w_star_operator(one, CPoly::monomial(2)) == poly({0, 2, -1}));
  TruncatedSeries k = apply_w_star_operator(one, TruncatedSeries::exp(q(1), 10));
  CHECK(k.is_zero());
  CHECK(k.order() == 9);
  CHECK_THROWS_AS(apply_w_star_operator(WeightSpec({Node{q(1), 3}}), TruncatedSeries(CPoly(1), 3)), Error);
}

TEST_CASE("w-star kernel is spanned by z^m e^{conj(a_j) z}, m < c_j") {
  testing::Gen gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    WeightSpec w = gen.weight(3, 3, false);
    const std::size_t order = w.c() + 12;
    TruncatedSeries f(order);
    for (const auto& node : w.nodes()) {
      std::vector<GaussianRational> c;
      for (unsigned m = 0; m < node.c; ++m) c.push_back(gen.rational_point());
      f = f + TruncatedSeries(CPoly(c), order) * TruncatedSeries::exp(node.a.conj(), order);
    }
    CHECK(apply_w_star_operator(w, f).is_zero());
    // A polynomial is never in the kernel when no node sits at the origin.
    CPoly g = gen.polynomial(4) + CPoly::monomial(5);
    CHECK_FALSE(apply_w_star_operator(w, TruncatedSeries(g, order)).is_zero());
    // Raising one multiplicity past c_j leaves the kernel.
    TruncatedSeries extra =
        TruncatedSeries(CPoly::monomial(w.nodes()[0].c), order) * TruncatedSeries::exp(w.nodes()[0].a.conj(), order);
    CHECK_FALSE(apply_w_star_operator(w, f + extra).is_zero());
  }
}

TEST_CASE("w-star operator lowers the vanishing order by at most c") {
  testing::Gen gen(7);
  for (int trial = 0; trial < 15; ++trial) {
    WeightSpec w = gen.weight(3, 3);
    unsigned n = static_cast<unsigned>(gen.uniform(0, 6));
    const std::size_t order = n + w.c() + 10;
    CPoly g = gen.polynomial(6);
    if (g.is_zero()) g = CPoly(1);
    TruncatedSeries f(CPoly::monomial(n + w.c()) * g, order);
    CHECK(apply_w_star_operator(w, f).vanishing_order() >= n);
  }
}

TEST_CASE("principal part examples") {
  LaurentPoly f = LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1);
  CHECK(principal_part(ExpRational(f), 2) == f);
  CHECK(principal_part(ExpRational(LaurentPoly::monomial(-1), q(1))) == LaurentPoly::monomial(-1));
  LaurentPoly g = LaurentPoly(poly({q(-1, 2), q(-1, 2), 1})).shifted(-2);
  CHECK(principal_part(ExpRational(g), 2) == LaurentPoly::monomial(-1, q(-1, 2)) + LaurentPoly::monomial(-2, q(-1, 2)));
  CHECK_THROWS_AS(principal_part(ExpRational(CPoly(1), q(0), CPoly::monomial(1)), 3), Error);
}

TEST_CASE("principal part splits the expansion") {
  testing::Gen gen(8);
  for (int trial = 0; trial < 12; ++trial) {
    CPoly den = gen.polynomial(3) * CPoly(1) + CPoly(q(gen.uniform(1, 4)));
    if (den(q(0)).is_zero()) den = den + CPoly(1);
    ExpRational f(LaurentPoly(gen.polynomial(3)).shifted(-static_cast<int>(gen.uniform(1, 5))),
                  gen.rational_point(2, 2), den);
    LaurentPoly pp = principal_part(f);
    ExpRational rest = f - ExpRational(pp);
    LaurentPoly exp_rest = rest.laurent_expansion(-8, 3);
    CHECK(exp_rest.principal_part().is_zero());
    // Oracle: den * expansion reproduces the numerator series.
    LaurentPoly full = f.laurent_expansion(-8, 6);
    CHECK(full.principal_part() == pp);
  }
}

TEST_CASE("laurent expansion agrees with series division") {
  // e^{z} / (1 - z) = sum_k (sum_{i<=k} 1/i!) z^k
  ExpRational f(LaurentPoly(CPoly(1)), q(1), poly({1, -1}));
  LaurentPoly e = f.laurent_expansion(0, 5);
  mpq_class partial = 0;
  for (int k = 0; k <= 5; ++k) {
    partial += mpq_class(1) / mpq_class(factorial(static_cast<unsigned>(k)));
    CHECK(e.coeff(k) == GaussianRational(partial));
  }
}

TEST_CASE("numeric evaluation") {
  ComplexBigFloat two(q(2), 128);
  ComplexBigFloat v = evaluate(ExpRational(LaurentPoly::monomial(-1)), two);
  CHECK(to_double(v.re()) == doctest::Approx(0.5));
  CHECK(to_double(v.im()) == doctest::Approx(0.0));
  ComplexBigFloat z(q(3, 5, 4, 5), 128);
  ComplexBigFloat one = evaluate(ex(1, q(0)), z);
  CHECK(to_double(one.re()) == doctest::Approx(1.0));
  ComplexBigFloat zero = evaluate(ExpRational(LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1)),
                                  ComplexBigFloat(q(1), 128));
  CHECK(zero.abs() < pow2(-120, 128));
  CHECK_THROWS_AS(evaluate(ExpRational(LaurentPoly::monomial(-1)), ComplexBigFloat(q(0), 128)), Error);
  CHECK_THROWS_AS(evaluate(ExpRational(CPoly(1), q(0), poly({-1, 1})), ComplexBigFloat(q(1), 128)), Error);
  CHECK_THROWS_AS(ComplexBigFloat(q(1), 32), Error);

  // Oracle: exact rational value for exponential-free inputs, libm for e^{wz}.
  testing::Gen gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    CPoly num = gen.polynomial(4);
    CPoly den = gen.polynomial(2) + CPoly(q(5));
    GaussianRational at = gen.rational_point(2, 3);
    if (at.is_zero() || den(at).is_zero()) continue;
    GaussianRational exact = num(at) / den(at) / at;
    ComplexBigFloat got = evaluate(ExpRational(LaurentPoly(num).shifted(-1), q(0), den), ComplexBigFloat(at, 256));
    ComplexBigFloat diff = got - ComplexBigFloat(exact, 256);
    CHECK(diff.abs() <= pow2(-240, 256) * (BigFloat(1.0, 256) + ComplexBigFloat(exact, 256).abs()));
  }
  GaussianRational w = q(1, 2, -1, 3);
  GaussianRational at = q(2, 3, 1, 4);
  ComplexBigFloat got = evaluate(ExpRational(CPoly(1), w), ComplexBigFloat(at, 128));
  GaussianRational wz = w * at;
  double mag = std::exp(mpq_class(wz.re()).get_d());
  double ang = mpq_class(wz.im()).get_d();
  CHECK(to_double(got.re()) == doctest::Approx(mag * std::cos(ang)).epsilon(1e-14));
  CHECK(to_double(got.im()) == doctest::Approx(mag * std::sin(ang)).epsilon(1e-14));
}

TEST_CASE("big float formatting") {
  CHECK(BigFloat(0.5, 128).to_string(17) == "5.0000000000000000e-01");
  CHECK(BigFloat(mpq_class(1, 3), 256).to_string(17) == "3.3333333333333333e-01");
}

TEST_CASE("exact linear solve") {
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 3;
  auto x = solve_linear(a, {q(3), q(5)});
  REQUIRE(x);
  CHECK((*x)[0] == q(4, 5));
  CHECK((*x)[1] == q(7, 5));
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  CHECK_FALSE(solve_linear(s, {q(1), q(1)}));
  CHECK(rank(s) == 1);

  testing::Gen gen(10);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 6));
    Matrix m(n, n);
    std::vector<GaussianRational> xs(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = gen.rational_point();
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.rational_point() + (i == j ? q(20) : q(0));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i] += m(i, j) * xs[j];
    auto sol = solve_linear(m, b);
    REQUIRE(sol);
    CHECK(*sol == xs);
    CHECK(rank(m) == n);
  }
}
