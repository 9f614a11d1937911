#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/gaussian_rational.hpp"
#include "planarop/weight_spec.hpp"

namespace testing {

using planarop::CPoly;
using planarop::GaussianRational;
using planarop::Node;
using planarop::WeightSpec;

inline GaussianRational q(long num, long den = 1, long inum = 0, long iden = 1) {
  return GaussianRational(mpq_class(num, den), mpq_class(inum, iden));
}

// Ascending integer coefficients.
inline CPoly poly(std::initializer_list<GaussianRational> c) { return CPoly(std::vector<GaussianRational>(c)); }

inline WeightSpec single(const GaussianRational& a, unsigned c = 1) { return WeightSpec({Node{a, c}}); }

// Small deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  GaussianRational rational_point(long max_num = 4, long max_den = 3) {
    return GaussianRational(mpq_class(uniform(-max_num, max_num), uniform(1, max_den)),
                            mpq_class(uniform(-max_num, max_num), uniform(1, max_den)));
  }

  WeightSpec weight(std::size_t max_p = 3, unsigned max_c = 2, bool allow_origin = true) {
    std::size_t p = static_cast<std::size_t>(uniform(1, static_cast<long>(max_p)));
    std::vector<Node> nodes;
    while (nodes.size() < p) {
      GaussianRational a = rational_point();
      if (!allow_origin && a.is_zero()) continue;
      bool dup = false;
      for (const auto& nd : nodes) dup = dup || nd.a == a;
      if (!dup) nodes.push_back(Node{a, static_cast<unsigned>(uniform(1, max_c))});
    }
    return WeightSpec(std::move(nodes));
  }

  CPoly polynomial(int max_deg) {
    std::vector<GaussianRational> c;
    for (int i = 0; i <= uniform(0, max_deg); ++i) c.push_back(rational_point(3, 2));
    return CPoly(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
