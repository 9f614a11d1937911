#include <algorithm>

#include "doctest.h"
#include "planarop/characterizations.hpp"
#include "planarop/error.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/operators.hpp"
#include "planarop/rh.hpp"
#include "support.hpp"

using namespace planarop;
using testing::poly;
using testing::q;

namespace {

RHReport check(const RHSolution& s, const WeightSpec& w, bool reduced = false) {
  mpq_class radius = reduced ? safe_sample_radius(w) : mpq_class(1);
  return verify_rhp(s.y, s.problem, sample_points(8, radius), 256);
}

std::string dump(const RHReport& r) {
  std::string out = r.family + " worst=" + r.worst_residual;
  for (const auto& o : r.offending) out += " | " + o;
  return out;
}

}  // namespace

TEST_CASE("cauchy_outside is minus the principal part") {
  CHECK(cauchy_outside(ExpRational(LaurentPoly::monomial(-1))) == ExpRational(LaurentPoly::monomial(-1, -1)));
  CHECK(cauchy_outside(ExpRational(poly({1, 2}), q(1))).is_zero());
  LaurentPoly f = LaurentPoly(poly({q(-1, 2), q(-1, 2), 1})).shifted(-2);
  LaurentPoly expected = LaurentPoly::monomial(-1, q(1, 2)) + LaurentPoly::monomial(-2, q(1, 2));
  CHECK(cauchy_outside(ExpRational(f), 2) == ExpRational(expected));
  CHECK_THROWS_AS(cauchy_outside(ExpRational(f), 1), Error);
}

TEST_CASE("full type I problem for a single node at 1") {
  auto w = testing::single(1);
  auto s = build_typeI_full(w, 1);
  REQUIRE(s.y.outside.size() == 3);
  CHECK(s.y.outside[0][0] == ExpRational(poly({q(1, 2), 1})));
  CHECK(s.y.outside[0][1] == ExpRational(q(1, 2)));
  CHECK(s.y.outside[0][2].is_zero());
  auto rep = check(s, w);
  INFO(dump(rep));
  CHECK(rep.pass());
  CHECK(determinant(s.y.outside) == ExpRational(1));
}

TEST_CASE("reduced problem for a single node at 1") {
  auto w = testing::single(1);
  auto s = build_typeI_reduced(w, 1);
  CHECK(s.y.outside[1][0] == ExpRational(q(1, 2)));
  LaurentPoly c = s.y.outside[1][1].as_laurent();
  CHECK(c.coeff(-1) == q(1));
  CHECK(recover_p_from_reduced(w, 1, {poly({q(1, 2)})}) == poly({q(1, 2), 1}));
  auto rep = check(s, w, true);
  INFO(dump(rep));
  CHECK(rep.pass());
}

TEST_CASE("reduced problem rejects a node at the origin") {
  CHECK_THROWS_AS(build_typeI_reduced(testing::single(0), 2), Error);
}

TEST_CASE("singled-out problem for a single node at 1") {
  auto w = testing::single(1);
  auto s = build_typeI_singled(w, 1, 1);
  CHECK(s.y.outside[0][0] == ExpRational(poly({q(1, 2), 1})));
  // -PP((z + 1/2)(z - 1) e^{-z} / z^2): the 1/z coefficient cancels.
  ExpRational g(LaurentPoly(poly({q(-1, 2), q(-1, 2), 1})).shifted(-2), q(-1));
  CHECK(s.y.outside[0][1] == cauchy_outside(g));
  CHECK(s.y.outside[0][1] == ExpRational(LaurentPoly::monomial(-2, q(1, 2))));
  auto rep = check(s, w);
  INFO(dump(rep));
  CHECK(rep.pass());
}

TEST_CASE("type II problem for a single node at 1") {
  auto w = testing::single(1);
  auto s = build_typeII(w, 1, MultiIndex{{1}});
  CHECK(s.y.outside[0][0] == ExpRational(poly({q(1, 2), 1})));
  CHECK(s.y.outside[0][1] == ExpRational(LaurentPoly::monomial(-2, q(1, 2))));
  auto rep = check(s, w);
  INFO(dump(rep));
  CHECK(rep.pass());
}

TEST_CASE("literal w_k jump breaks the asymptotic condition") {
  auto w = testing::WeightSpec({Node{q(1), 1}, Node{q(-1), 1}});
  auto s = build_typeII(w, 2, MultiIndex{{1, 1}}, true);
  auto rep = check(s, w);
  CHECK(rep.jump_exact);
  CHECK_FALSE(rep.asymptotics);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("identity matrix does not solve a nontrivial jump") {
  auto w = testing::single(1);
  auto s = build_typeI_full(w, 1);
  YMatrix id;
  id.exponents = s.problem.exponents;
  for (std::size_t i = 0; i < 3; ++i) {
    id.outside.emplace_back(3);
    id.inside.emplace_back(3);
    id.outside[i][i] = 1;
    id.inside[i][i] = 1;
  }
  auto rep = verify_rhp(id, s.problem, sample_points(), 256);
  CHECK_FALSE(rep.jump_exact);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("a perturbed first row fails verification") {
  auto w = testing::single(q(1, 1, 1, 1), 2);
  auto s = build_typeI_full(w, 3);
  auto& y = s.y;
  CPoly bumped = y.outside[0][0].as_laurent().polynomial_part() + CPoly::monomial(2, 1);
  y.outside[0][0] = bumped;
  y.inside[0][0] = bumped;
  auto rep = check(s, w);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("sample points lie on the requested circle") {
  auto pts = sample_points(20, mpq_class(1, 4));
  CHECK(pts.size() == 20);
  for (const auto& p : pts) CHECK(p.norm() == mpq_class(1, 16));
  std::sort(pts.begin(), pts.end());
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  CHECK(safe_sample_radius(testing::single(q(1, 3))) == mpq_class(1, 8));
  CHECK(safe_sample_radius(testing::single(q(5))) == 1);
}

TEST_CASE("all builders verify on random weights") {
  testing::Gen gen(20261016);
  for (int trial = 0; trial < 12; ++trial) {
    WeightSpec w = gen.weight(3, 2, trial % 3 != 0);
    unsigned n = static_cast<unsigned>(gen.uniform(1, 4));
    CAPTURE(w.key());
    CAPTURE(n);
    MonicOP op = monic_op(w, n);

    auto full = build_typeI_full(w, n);
    CHECK(full.y.outside[0][0] == ExpRational(op.P));
    auto r1 = check(full, w);
    INFO(dump(r1));
    CHECK(r1.pass());

    for (std::size_t p0 = 1; p0 <= w.p(); ++p0) {
      auto sg = build_typeI_singled(w, n, p0);
      CHECK(sg.y.outside[0][0] == ExpRational(op.P));
      auto r = check(sg, w);
      INFO(dump(r));
      CHECK(r.pass());
    }

    auto idx = choose_multi_index(n, w.p());
    auto t2 = build_typeII(w, n, idx);
    CHECK(t2.y.outside[0][0] == ExpRational(op.P));
    auto r2 = check(t2, w);
    INFO(dump(r2));
    CHECK(r2.pass());

    if (!w.has_node_at_origin()) {
      auto red = build_typeI_reduced(w, n);
      auto sol = solve_type_one(w, n);
      for (std::size_t j = 0; j < w.p(); ++j) CHECK(red.y.outside[w.p()][j] == ExpRational(sol.Qs[j]));
      std::vector<CPoly> qs(sol.Qs.begin(), sol.Qs.end());
      CHECK(recover_p_from_reduced(w, n, qs) == op.P);
      auto r3 = check(red, w, true);
      INFO(dump(r3));
      CHECK(r3.pass());
    }
  }
}
