#pragma once

// The verification suite: every invariant checked over a range of orders, reported
// as one PASS/FAIL line per check group.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace sgb {

struct VerifyOptions {
  std::uint64_t max_order = 30;
  /// Absolute tolerance for the numeric spectral cross-check.
  double tol = 1e-8;
  /// The dense eigen cross-check only runs on orders up to this bound.
  std::uint64_t spectral_max_order = 30;
  /// Relative tolerance when comparing floating catalog values.
  double rel_tol = 1e-9;
};

struct CheckGroupResult {
  std::string name;
  bool passed = true;
  std::string summary;
  /// First failures, capped; also carries DISCREPANCY notes that do not fail the group.
  std::vector<std::string> notes;
};

struct VerifyResult {
  std::vector<CheckGroupResult> groups;
  bool all_passed() const;
};

/// Throws CapExceededError when max_order exceeds the brute-force cap.
VerifyResult run_verify(const VerifyOptions& options);

/// "PASS name: summary" / "FAIL name: summary" lines plus indented notes.
void print_verify(std::ostream& out, const VerifyResult& result);

}  // namespace sgb
