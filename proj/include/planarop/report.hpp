#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planarop/gaussian_rational.hpp"

namespace planarop {

/// One exact quantity of a check, indexed by k (and m for two-index checks).
struct CheckValue {
  int k = 0;
  std::optional<int> m;
  GaussianRational value;
  GaussianRational expected;
};

/// Result of an exact check. Carries every computed value, not only the
/// failures, so a regression can be diagnosed from the report alone.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<CheckValue> values;
  std::vector<CheckValue> violations;
  std::map<std::string, GaussianRational> diagnostics;
  std::string note;

  explicit CheckReport(std::string name) : check(std::move(name)) {}

  void record_indexed(int k, std::optional<int> m, GaussianRational value, GaussianRational expected = {}) {
    CheckValue v{k, m, std::move(value), std::move(expected)};
    if (v.value != v.expected) {
      pass = false;
      violations.push_back(v);
    }
    values.push_back(std::move(v));
  }
  void record(int k, GaussianRational value, GaussianRational expected = {}) {
    record_indexed(k, std::nullopt, std::move(value), std::move(expected));
  }
  void fail(std::string why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += std::move(why);
  }
};

}  // namespace planarop
