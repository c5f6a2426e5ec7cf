#pragma once

#include <string>
#include <vector>

namespace symdist {

enum class CheckStatus { pass, fail, discrepancy_documented };

const char* status_name(CheckStatus s);  // "pass", "fail", "discrepancy-documented"

struct Check {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool ok() const;  // no check failed
  std::size_t count(CheckStatus s) const;
};

/// Runs every reference fixture. A check that throws is recorded as a
/// failure carrying the exception text.
VerificationReport run_verification();

}  // namespace symdist
