#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscinfo {

enum class CheckStatus { pass, fail, info };

enum class Comparison {
  at_most,   // measured <= bound
  at_least,  // measured >= bound
  none,      // informational
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  Comparison comparison = Comparison::at_most;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  /// Relative perturbation applied to the cancellation viscosity in the
  /// transform-identity check (negative control).
  double nu_perturbation = 0.0;
  /// Truncation tolerance for the Poisson series.
  double series_tol = 1e-13;
};

/// Runs every acceptance check: information conservation, localization,
/// number-state limits, transform identity, viscosity, Schrodinger residual,
/// unitary evolution, energy gap, energy/information consistency, massless
/// duals and CSV reproducibility. Documented discrepancies come back as info
/// entries.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

/// "[PASS] C5 name: measured=... bound<=..." and similar.
std::string format_check(const CheckResult& result);

void print_report(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace oscinfo
