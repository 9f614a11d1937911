#pragma once

#include <string>
#include <vector>

#include "planarop/cpoly.hpp"
#include "planarop/gaussian_rational.hpp"

namespace planarop {

struct Node {
  GaussianRational a;
  unsigned c = 1;
};

/// W(z) = prod_j (z - a_j)^{c_j} with distinct a_j and integer c_j >= 1.
/// An empty node list gives the unit weight W = 1.
class WeightSpec {
 public:
  WeightSpec() : w_(1), w_star_(1) {}
  /// Throws Error(invalid_weight) for repeated nodes or zero multiplicities.
  explicit WeightSpec(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t p() const { return nodes_.size(); }
  /// c = deg W
  unsigned c() const { return c_; }
  const CPoly& W() const { return w_; }
  const CPoly& W_star() const { return w_star_; }

  /// Multiplicity of the node at 0, or 0 when there is none.
  unsigned origin_multiplicity() const;
  bool has_node_at_origin() const { return origin_multiplicity() > 0; }
  /// W(z) / z^{origin_multiplicity}
  CPoly W_without_origin() const;

  /// Canonical text key, used for caching.
  std::string key() const;

 private:
  std::vector<Node> nodes_;
  unsigned c_ = 0;
  CPoly w_;
  CPoly w_star_;
};

}  // namespace planarop
