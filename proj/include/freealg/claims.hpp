#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "freealg/freecert.hpp"
#include "freealg/scalar.hpp"

namespace freealg {

using json = nlohmann::json;

/// One checked statement inside a run report.
struct ClaimVerdict {
  std::string claim;
  std::string label;
  Verdict verdict = Verdict::Inconclusive;
  json data = json::object();
};

/// The result of a CLI command: {schema, command, params, verdicts, elapsed_ms, seed}.
struct RunReport {
  std::string command;
  json params = json::object();
  std::vector<ClaimVerdict> verdicts;
  double elapsed_ms = 0;
  std::uint64_t seed = 0;
  /// Per-section wall times, reported only outside deterministic mode.
  json suite_ms;

  /// 0 all certified, 2 some relation or counterexample, 3 some inconclusive.
  int exit_code() const;
  /// `deterministic` zeroes the timing and drops the thread count.
  json to_json(bool deterministic = false) const;
};

json rational_json(const Rational& q);
json cert_json(const CertReport& r);

struct FreenessOptions {
  int max_word_len = 3;
  int order = 32;
  int exact_max_len = 2;
  std::uint64_t seed = 1;
  WordMode mode = WordMode::Monoid;
};

/// Jets of K((p; sigma)) at orders N and 2N, then (for short words) the
/// exact common-denominator path, which is authoritative for relations.
ClaimVerdict skew_field_freeness(const std::string& claim, const std::string& label,
                                 const std::vector<SkewFrac>& generators, const std::vector<std::string>& names,
                                 const FreenessOptions& opt);

/// Phi on x, y, z, V, V -+ z^3/3, z +- y^2 against the expected skew field elements.
ClaimVerdict heisenberg_image_table();

struct HeisenbergOptions {
  int max_word_len = 2;
  int order = 32;
  int exact_max_len = 2;
  std::uint64_t seed = 1;
};
RunReport certify_heisenberg(const HeisenbergOptions& opt);

struct TwodimOptions {
  int max_word_len = 2;
  int order = 16;
  int exact_max_len = 2;
  std::uint64_t seed = 1;
};
RunReport certify_twodim(const TwodimOptions& opt);

RunReport certify_groupring(int max_word_len);

struct CauchonOptions {
  Rational alpha;
  Rational beta;
  Rational shift{2};
  int max_word_len = 2;
  int order = 16;
  int exact_max_len = 2;
  std::uint64_t seed = 1;
};
RunReport certify_cauchon(const CauchonOptions& opt);

struct NilpotentOptions {
  int order = 12;
  int random_products = 20;
  int homomorphism_samples = 100;
  std::uint64_t seed = 1;
};
RunReport certify_nilpotent(const NilpotentOptions& opt);

RunReport verify_scaling(const std::vector<Rational>& lambdas);
RunReport verify_valuation();

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Fewer random samples; the full counts are the default.
  bool quick = false;
};
RunReport run_selftest(const SelftestOptions& opt);

}  // namespace freealg
