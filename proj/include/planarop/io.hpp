#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "json.hpp"
#include "planarop/big_float.hpp"
#include "planarop/characterizations.hpp"
#include "planarop/gram.hpp"
#include "planarop/monic_op.hpp"
#include "planarop/report.hpp"
#include "planarop/rh.hpp"
#include "planarop/type_two.hpp"
#include "planarop/weight_spec.hpp"
#include "planarop/zeros.hpp"

namespace planarop {

using json = nlohmann::json;

/// {"re": "p/q", "im": "r/s"}
json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

/// Compact text form "p/q+r/si", used in CSV output and messages.
std::string complex_string(const GaussianRational& z);
GaussianRational parse_complex_string(const std::string& text);

/// 17 significant digits, scientific notation.
std::string float_string(const BigFloat& x);

json to_json(const WeightSpec& w);
json to_json(const CPoly& p);
json to_json(const LaurentPoly& p);
json to_json(const ExpRational& f);
json to_json(const GramMatrix& g);
json to_json(const MonicOP& op);
json to_json(const TypeISolution& sol);
json to_json(const CheckReport& r);
json to_json(const MultiIndex& idx);
json to_json(const YMatrix& y);
json to_json(const RHReport& r);
json to_json(const ZeroSet& z);

/// "re,im,residual" header plus one row per zero.
std::string zeros_csv(const ZeroSet& z);

/// {"nodes":[{"re":"p/q","im":"r/s","c":int},...]}. Throws Error(invalid_input)
/// for malformed documents and Error(invalid_weight) for invalid weights.
WeightSpec weight_from_json(const json& doc);
/// Throws Error(io_error) when the file cannot be read.
WeightSpec load_weight_file(const std::filesystem::path& path);

/// Default working precision: PLANAROP_PREC if set and valid, else 256.
mpfr_prec_t default_precision();

struct RunConfig {
  WeightSpec weight;
  unsigned n = 0;
  mpfr_prec_t precision_bits = 256;
  unsigned truncation_buffer = 10;
  std::uint64_t seed = 20240601;
  std::string out_path;
  std::string format = "json";

  /// Throws Error(invalid_input) unless precision_bits >= 64 and the format
  /// is json or csv.
  void validate() const;
};

/// Adds the "schema" field.
json with_schema(json body, const std::string& kind);

/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string dump(const json& doc);

/// Writes text to `path`, or to stdout when path is empty. Throws Error(io_error).
void emit(const std::string& text, const std::string& path);

}  // namespace planarop
