#pragma once

#include <vector>

#include "blasgen/testgen.hpp"

namespace blasgen {

/// Slack for triangular solves on dominance-conditioned systems, in units of
/// the matrix order. Calibrated against the dense elimination oracle.
inline constexpr double kSolveAllowance = 4.0;

struct ErrorModel {
  double tol_multiplier = 3.0;
  double solve_allowance = kSolveAllowance;
};

/// Forward-error growth g(case) >= 1.
double growth_factor(const TestCase& tc, const ErrorModel& model = {});

/// Logical output values of a case in a fixed order: the scalar result, or
/// the written vector elements, or the written matrix entries (only the
/// stored triangle for dsyr/dsyr2/dsyrk/dsyr2k). Padding is never included.
std::vector<double> output_values(const TestCase& tc, const Problem& p);

/// ||result - reference||_inf / (g * eps * scale). `inputs` are the buffers
/// before the call. Non-finite result values, and any idamax mismatch, give
/// +inf.
double relative_error(const TestCase& tc, const Problem& result, const Problem& reference,
                      const Problem& inputs, const ErrorModel& model = {});

}  // namespace blasgen
