#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqs/exttor.hpp"
#include "cqs/oracle.hpp"

namespace cqs {

/*
 * Structural self-checks.  Each suite sweeps an identity that the rest of
 * the library promises (symmetry of Ext^1, Ext/Tor duality, vanishing
 * against the canonical divisor, the link-region identities, agreement with
 * the rank-based oracle) over class pairs and seeded random divisors, and
 * reports every case it looked at together with counterexample degrees on
 * failure.  `all` additionally runs an informational sweep of the symmetry
 * identity at homological degree 2, which is reported but never affects the
 * overall verdict.
 */

enum class Suite { symmetry, duality, vanishing, oracle, link, all };

std::optional<Suite> suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct CheckOptions {
  std::int64_t max_i = 3;    // highest homological index for the duality sweep
  std::uint64_t seed = 0;    // RNG seed for the randomized cases
  int random_pairs = 200;    // random (D, D') samples per randomized check
  int threads = 0;           // worker threads; 0 = hardware concurrency
  bool quick = false;        // reduced sampling (environment CQS_CHECK_SCALE=quick)
};

struct CheckCase {
  std::string description;
  bool pass = true;
  std::string detail;  // counterexample degrees / mismatch summary when failing
};

struct CheckResult {
  std::string name;
  bool informational = false;  // reported but excluded from the verdict
  bool pass = true;
  std::vector<CheckCase> cases;

  std::size_t failed() const;
};

std::vector<CheckResult> run_checks(const Cqs& c, const SyzygyQuiver& qv, Suite suite,
                                    const CheckOptions& opts);

// Verdict over the non-informational results.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cqs
