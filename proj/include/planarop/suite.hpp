#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "planarop/io.hpp"
#include "planarop/weight_spec.hpp"

namespace planarop {

struct CorpusBounds {
  std::size_t max_p = 3;
  unsigned max_c = 3;
  unsigned min_n = 1;
  unsigned max_n = 8;
  long max_abs_num = 5;
  long max_den = 5;
};

struct CorpusCase {
  std::size_t index = 0;
  WeightSpec weight;
  unsigned n = 0;
};

/// Deterministic for a given seed on every platform: draws come straight from
/// mt19937_64 without std distributions.
std::vector<CorpusCase> generate_corpus(std::uint64_t seed, std::size_t count, const CorpusBounds& bounds = {});

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  std::size_t cases = 60;
  /// Replace P_n by P_n + z^{n-1} wherever P_n enters a check.
  bool perturb = false;
  mpfr_prec_t prec = 256;
  std::size_t samples = 8;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CaseCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseResult {
  CorpusCase input;
  std::vector<CaseCheck> checks;
  /// Informational: whether the literal w_k variant fails its asymptotic check.
  bool literal_wk_asymptotics_fail = false;

  bool pass() const;
  std::vector<std::string> failed_checks() const;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CaseResult> cases;

  std::size_t passed() const;
  /// In perturbation mode: cases where at least one check failed.
  std::size_t detected() const;
  /// Normal mode: every case passes. Perturbation mode: >= 95% detected.
  bool pass() const;
};

CaseResult run_case(const CorpusCase& c, const SuiteOptions& options);
SuiteReport run_equivalence_suite(const std::vector<CorpusCase>& corpus, const SuiteOptions& options);
SuiteReport run_equivalence_suite(const SuiteOptions& options);

json to_json(const CaseResult& r, bool perturb);
json to_json(const SuiteReport& r);

}  // namespace planarop
