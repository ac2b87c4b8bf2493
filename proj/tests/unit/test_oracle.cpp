#include <doctest.h>

#include <algorithm>
#include <cstdio>

#include "blasgen/dispatch.hpp"
#include "blasgen/error_model.hpp"
#include "blasgen/naive.hpp"

using namespace blasgen;

TEST_CASE("oracle agrees with the dense evaluator on every default case") {
  for (const RoutineSpec& spec : all_routines()) {
    double worst = 0.0;
    for (const TestCase& tc : enumerate_cases(spec)) {
      const Problem in = init_problem(tc);
      Problem ref = in;
      Problem dense = in;
      run_reference(tc, ref);
      naive::run(tc, dense);
      const double err = relative_error(tc, ref, dense, in);
      worst = std::max(worst, err);
      CHECK_MESSAGE(err <= 3.0, tc.id());
    }
    std::printf("%-7s worst %.3g\n", std::string(spec.name).c_str(), worst);
  }
}
