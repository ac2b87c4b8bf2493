#pragma once

#include "blasgen/testgen.hpp"

namespace blasgen {

/// Calls the reference routine for `tc` on the buffers of `p`. Leading
/// dimensions follow leading_dim(rows). idamax stores its index in p.result.
void run_reference(const TestCase& tc, Problem& p);

}  // namespace blasgen
