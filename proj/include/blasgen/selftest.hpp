#pragma once

// Checks the reference oracle against the independent dense evaluator on
// every default case, plus the poison sweep for uplo/diag routines.

#include <optional>
#include <string>
#include <vector>

#include "blasgen/routines.hpp"

namespace blasgen {

struct SelftestOptions {
  bool parallel = true;  // OpenMP over cases; false keeps the serial loop
  double tol = 3.0;
  std::optional<Routine> inject_fault;  // perturbs this routine's oracle output
};

struct RoutineSelftest {
  Routine routine = Routine::dasum;
  std::size_t cases = 0;
  std::size_t poison_cases = 0;
  double worst = 0.0;
  std::vector<std::string> failures;  // case ids, manifest order
};

struct SelftestReport {
  std::vector<RoutineSelftest> routines;
  bool ok() const;
};

SelftestReport run_selftest(const SelftestOptions& opts = {});

/// One line per routine, then the failing case ids.
std::string render(const SelftestReport& r);

}  // namespace blasgen
