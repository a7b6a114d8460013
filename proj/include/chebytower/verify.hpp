#pragma once

#include <string>
#include <vector>

#include "chebytower/polyseq.hpp"
#include "chebytower/trees.hpp"

namespace chebytower {

enum class CheckStatus { kPass, kFail, kSkipped };

struct CheckResult {
  std::string name;
  std::string params;
  CheckStatus status = CheckStatus::kSkipped;
  std::string detail;
  long elapsed_ms = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;        // sorted by (name, params)
  std::vector<std::string> observations;  // reported patterns; never asserted

  bool all_passed() const;
};

struct VerifyOptions {
  int n_max = 4;
  long k_max = 4;
  mpfr_prec_t precision_bits = 128;
  int max_degree_log2 = kDefaultMaxDegreeLog2;
  long enumeration_guard = kDefaultEnumerationGuard;
  int theta_samples = 10;        // random angles per n in the trig check
  unsigned int rng_seed = 2026;  // deterministic reports
};

/// Runs every cross-method identity at the requested scale: generation vs
/// composition, the Laurent identity, back-substitution vs squaring, level
/// recursion prefixes, invariant sums and their integrality, the two
/// invariant routes against each other, the diagonal against the tree sums,
/// closed forms against enumerated rows, the numeric residuals, and the
/// composed-root index probe. Exact checks compare bit-for-bit; residual
/// checks use the threshold 2^-(precision_bits/2).
VerificationReport run_verification(const VerifyOptions& options);

std::string render_report(const VerificationReport& report);

}  // namespace chebytower
