#include "planarop/error.hpp"

namespace planarop {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input: return "invalid-input";
    case Errc::invalid_weight: return "invalid-weight";
    case Errc::precondition: return "precondition";
    case Errc::truncation_too_short: return "truncation-too-short";
    case Errc::radius_too_small: return "radius-too-small";
    case Errc::node_at_origin: return "node-at-origin";
    case Errc::io_error: return "io-error";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::denominator_vanishes_at_zero: return "denominator-vanishes-at-zero";
    case Errc::evaluation_at_pole: return "evaluation-at-pole";
    case Errc::singular_gram: return "singular-gram";
    case Errc::singular_system: return "singular-system";
    case Errc::singular_row_system: return "singular-row-system";
    case Errc::nonzero_remainder: return "nonzero-remainder";
    case Errc::identity_violation: return "identity-violation";
  }
  return "unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_input:
    case Errc::invalid_weight:
    case Errc::precondition:
    case Errc::truncation_too_short:
    case Errc::radius_too_small:
    case Errc::node_at_origin:
    case Errc::io_error:
      return true;
    default:
      return false;
  }
}

}  // namespace planarop
