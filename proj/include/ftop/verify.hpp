#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace ftop {

enum class Status { Pass, Fail, Caveat };

const char* to_string(Status s);

struct ClaimResult {
  std::string id;
  /// The statement being checked, quoted in words.
  std::string anchor;
  Status status = Status::Pass;
  /// Universe bound the claim was checked at.
  int bound = 0;
  /// Number of instances examined.
  std::size_t checked = 0;
  /// Number of instances violating the claim.
  std::size_t violations = 0;
  /// The first few violations in catalog order, as DSL.
  std::vector<std::string> counterexamples;
  std::string note;
  double runtime_ms = 0;
};

struct SuiteReport {
  std::string suite;
  /// Bound requested on the command line, 0 for per-suite defaults.
  int n = 0;
  std::vector<ClaimResult> claims;

  /// No claim has status Fail.
  bool ok() const;
};

struct SuiteOptions {
  /// 0 picks each suite's default: 4 for map sweeps, 5 for space sweeps,
  /// 3 for the factorization probe.
  int n = 0;
  int jobs = 0;
  /// Allows map sweeps beyond 4 points (the 5-point map universe has about
  /// 1.6 million maps).
  bool long_running = false;
};

/// lemma21, appendix32, closed_proper, archetypes, normality, mlambda,
/// figure2, subdivision, retract, factorization, all.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for unknown suites and CapacityError for
/// bounds out of range.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

std::string to_text(const SuiteReport& report);
/// Timings are left out when `timings` is false, which makes the output a
/// pure function of (suite, n).
nlohmann::json to_json(const SuiteReport& report, bool timings = true);

}  // namespace ftop
