#pragma once

#include <stdexcept>
#include <string>

namespace planarop {

enum class Errc {
  // input errors
  invalid_input,
  invalid_weight,
  precondition,
  truncation_too_short,
  radius_too_small,
  node_at_origin,
  io_error,
  // arithmetic errors (never expected for valid input)
  division_by_zero,
  denominator_vanishes_at_zero,
  evaluation_at_pole,
  singular_gram,
  singular_system,
  singular_row_system,
  nonzero_remainder,
  identity_violation,
};

const char* errc_name(Errc code) noexcept;

/// Input errors map to CLI exit code 2, everything else to 3.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace planarop
