#include "doctest.h"
#include "planarop/characterizations.hpp"
#include "planarop/error.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/operators.hpp"
#include "planarop/type_two.hpp"
#include "support.hpp"

using namespace planarop;
using testing::poly;
using testing::q;

TEST_CASE("multi-index selection") {
  CHECK(choose_multi_index(5, 3).parts == std::vector<unsigned>{2, 2, 1});
  CHECK(choose_multi_index(4, 2).parts == std::vector<unsigned>{2, 2});
  CHECK(choose_multi_index(0, 2).parts == std::vector<unsigned>{0, 0});
  for (unsigned n = 0; n < 12; ++n)
    for (std::size_t p = 1; p <= 4; ++p) {
      MultiIndex idx = choose_multi_index(n, p);
      CHECK(idx.total() == n);
      CHECK(idx.is_balanced());
    }
  CHECK_FALSE(MultiIndex{{3, 1}}.is_balanced());
}

TEST_CASE("type II weights") {
  WeightSpec one = testing::single(1);
  TypeIIWeight w1 = build_type_two_weight(one, MultiIndex{{1}}, 1);
  CHECK(w1.V == poly({-1, 1}));
  CHECK(w1.w == LaurentPoly::monomial(-2) - LaurentPoly::monomial(-1));
  CHECK(w1.w == phi_k(one, 0).value);
  CHECK(build_type_two_weight(one, MultiIndex{{0}}, 1).w == LaurentPoly::monomial(-1));

  WeightSpec two({Node{q(1), 1}, Node{q(-1), 1}});
  TypeIIWeight t = build_type_two_weight(two, MultiIndex{{1, 1}}, 1);
  CHECK(t.V == poly({-1, -1, 1, 1}));
  LaurentPoly expected = LaurentPoly::monomial(-4, 6) + LaurentPoly::monomial(-3, 2) - LaurentPoly::monomial(-2) -
                         LaurentPoly::monomial(-1);
  CHECK(t.w == expected);

  testing::Gen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    WeightSpec w = gen.weight();
    unsigned n = static_cast<unsigned>(gen.uniform(1, 6));
    MultiIndex idx = choose_multi_index(n, w.p());
    for (std::size_t k = 1; k <= w.p(); ++k) {
      TypeIIWeight tw = build_type_two_weight(w, idx, k);
      CHECK(tw.V.degree() == static_cast<int>(n + w.c()) - 1);
      CHECK(tw.w.min_deg() == -static_cast<int>(n + w.c()));
    }
  }
}

TEST_CASE("type II orthogonality examples") {
  WeightSpec one = testing::single(1);
  CHECK(check_type_two(MonicOP{1, poly({q(1, 2), 1})}, one, MultiIndex{{1}}).pass);
  CHECK_FALSE(check_type_two(MonicOP{1, poly({-1, 1})}, one, MultiIndex{{1}}).pass);
  for (unsigned c = 1; c <= 3; ++c)
    for (unsigned n = 0; n <= 5; ++n)
      CHECK(check_type_two(MonicOP{n, CPoly::monomial(n)}, testing::single(0, c), MultiIndex{{n}}).pass);
}

TEST_CASE("Q_{k,m} examples") {
  WeightSpec one = testing::single(1);
  CHECK(build_qkm(one, MultiIndex{{2}}, 1, 1) == CPoly(2));
  CHECK(build_qkm(one, MultiIndex{{2}}, 1, 0) == poly({-1, 1}));
  CHECK(qkm_rank(one, MultiIndex{{2}}) == 2);
  CHECK(qkm_rank(one, MultiIndex{{0}}) == 0);
  CHECK_THROWS_AS(build_qkm(one, MultiIndex{{2}}, 1, 2), Error);

  WeightSpec two({Node{q(1), 1}, Node{q(-1), 1}});
  CHECK(build_qkm(two, MultiIndex{{1, 1}}, 1, 0) == poly({1, 1}));
  CHECK(qkm_rank(two, MultiIndex{{1, 1}}) == 2);
}

TEST_CASE("boundary polynomial") {
  WeightSpec one = testing::single(1);
  ZmwkDecomposition d0 = decompose_zmwk(one, MultiIndex{{2}}, 1, 0);
  CHECK(d0.Pi.is_zero());
  // V = (u - 1)^2, V(0) = 1.
  ZmwkDecomposition d1 = decompose_zmwk(one, MultiIndex{{2}}, 1, 1);
  CHECK(d1.Q == CPoly(2));
  CHECK(d1.Pi == CPoly(1));
  // Oracle: z w_1 = L[2 (u - 1)] + 1 = 2/z^2 - 2/z + 1, computed by hand.
  LaurentPoly zw = build_type_two_weight(one, MultiIndex{{2}}, 1).w.shifted(1);
  CHECK(zw == LaurentPoly::monomial(-2, 2) - LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(0));
}

TEST_CASE("type II structure on random weights") {
  testing::Gen gen(32);
  for (int trial = 0; trial < 20; ++trial) {
    WeightSpec w = gen.weight(3, 3);
    unsigned n = static_cast<unsigned>(gen.uniform(0, 7));
    CAPTURE(w.key());
    CAPTURE(n);
    MultiIndex idx = choose_multi_index(n, w.p());
    MonicOP op = monic_op(w, n);
    CHECK(check_type_two(op, w, idx).pass);
    CHECK(qkm_rank(w, idx) == n);
    std::vector<CPoly> family = build_qkm_family(w, idx);
    CHECK(family.size() == n);
    std::size_t i = 0;
    for (std::size_t k = 1; k <= w.p(); ++k)
      for (unsigned m = 0; m < idx[k - 1]; ++m, ++i) {
        CHECK(family[i].degree() == static_cast<int>(n) - 1 - static_cast<int>(m));
        // Zero of order n_j - delta_{kj} - m at conj(a_j).
        for (std::size_t j = 0; j < w.p(); ++j) {
          int order = static_cast<int>(idx[j]) - (j + 1 == k ? 1 : 0) - static_cast<int>(m);
          CPoly f = family[i];
          for (int r = 0; r < order; ++r) {
            CHECK(f(w.nodes()[j].a.conj()).is_zero());
            f = f.derivative();
          }
        }
        ZmwkDecomposition d = decompose_zmwk(w, idx, k, m);
        LaurentPoly lhs = build_type_two_weight(w, idx, k).w.shifted(static_cast<int>(m));
        CHECK(lhs == laplace_ray_transform(w.W_star() * d.Q) + LaurentPoly(d.Pi));
      }
    if (n > 0) {
      MonicOP bumped{n, op.P + CPoly::monomial(n - 1)};
      CHECK_FALSE(check_type_two(bumped, w, idx).pass);
      // Both routes agree on pass/fail.
      CHECK(check_b(bumped, w).pass == check_type_two(bumped, w, idx).pass);
    }
  }
}
