#include <doctest.h>

#include <cmath>
#include <limits>

#include "blasgen/dispatch.hpp"
#include "blasgen/verifier.hpp"

using namespace blasgen;

namespace {

TestCase dgemm16() {
  TestCase tc;
  tc.routine = Routine::dgemm;
  tc.m = tc.n = tc.k = 16;
  tc.seed = case_seed(tc);
  return tc;
}

}  // namespace

TEST_CASE("growth factors") {
  TestCase dot;
  dot.routine = Routine::ddot;
  dot.n = 100;
  CHECK(growth_factor(dot) == 100.0);
  TestCase gemm;
  gemm.routine = Routine::dgemm;
  gemm.m = gemm.n = 8;
  gemm.k = 2048;
  CHECK(growth_factor(gemm) == 2048.0);
  gemm.k = 0;
  CHECK(growth_factor(gemm) == 1.0);
  TestCase gemv;
  gemv.routine = Routine::dgemv;
  gemv.m = 5;
  gemv.n = 9;
  CHECK(growth_factor(gemv) == 9.0);
  gemv.params.trans = Transpose::Trans;
  CHECK(growth_factor(gemv) == 5.0);
  TestCase trsv;
  trsv.routine = Routine::dtrsv;
  trsv.n = 16;
  CHECK(growth_factor(trsv) == kSolveAllowance * 16);
}

TEST_CASE("relative error basics") {
  const TestCase tc = dgemm16();
  const Problem in = init_problem(tc);
  Problem ref = in;
  run_reference(tc, ref);
  CHECK(relative_error(tc, ref, ref, in) == 0.0);

  Problem bad = ref;
  bad.c[5] = std::numeric_limits<double>::quiet_NaN();
  CHECK(std::isinf(relative_error(tc, bad, ref, in)));
  bad.c[5] = std::numeric_limits<double>::infinity();
  CHECK(std::isinf(relative_error(tc, bad, ref, in)));

  // Padding rows are not part of the output.
  Problem pad = ref;
  pad.c[16] = 1e300;
  CHECK(relative_error(tc, pad, ref, in) == 0.0);

  TestCase ida;
  ida.routine = Routine::idamax;
  ida.n = 5;
  Problem a, b;
  a.result = 3;
  b.result = 4;
  CHECK(std::isinf(relative_error(ida, a, b, a)));
  CHECK(relative_error(ida, a, a, a) == 0.0);
}

TEST_CASE("a 1e-3 relative perturbation is far outside the tolerance") {
  const TestCase tc = dgemm16();
  const Problem in = init_problem(tc);
  Problem ref = in;
  run_reference(tc, ref);
  for (std::size_t idx : {std::size_t{0}, std::size_t{100}, std::size_t{271}}) {
    Problem bad = ref;
    if (idx % 17 == 16) continue;
    bad.c[idx] *= 1.0 + 1e-3;
    CHECK(relative_error(tc, bad, ref, in) > 1e6);
  }
}

TEST_CASE("reference verifies against itself for every routine") {
  for (const RoutineSpec& spec : all_routines()) {
    const Verdict v = verify_reference(enumerate_cases(spec));
    CHECK_MESSAGE(v.kind == VerdictKind::Pass, spec.name);
    CHECK_FALSE(v.failing_case);
    REQUIRE(v.max_rel_err);
    CHECK(*v.max_rel_err == 0.0);
    for (const auto& [combo, ok] : v.combo_pass) CHECK(ok);
  }
}

TEST_CASE("first failure in manifest order and per-combination tracking") {
  const auto cases = enumerate_cases(spec_of(Routine::dgemm));
  FunctionInvoker perturbed([](const TestCase& tc, Problem& p) {
    run_reference(tc, p);
    if (tc.params.transb == Transpose::Trans && tc.m > 0 && tc.n > 0) p.c[0] *= 1.001;
  });
  const Verdict v = verify_candidate(perturbed, cases);
  CHECK(v.kind == VerdictKind::NumericalError);
  REQUIRE(v.failing_case);
  CHECK(*v.failing_case == cases[16]);  // first transb=T case, (1,1,1)
  REQUIRE(v.max_rel_err);
  CHECK(*v.max_rel_err > 3.0);
  CHECK(v.combo_pass.at("transa=N, transb=N"));
  CHECK_FALSE(v.combo_pass.at("transa=N, transb=T"));
  CHECK(v.combo_pass.at("transa=T, transb=N"));
  CHECK_FALSE(v.combo_pass.at("transa=T, transb=T"));
}

TEST_CASE("loosening the tolerance never turns a pass into a failure") {
  const auto cases = enumerate_cases(spec_of(Routine::dsyr2k));
  FunctionInvoker noisy([](const TestCase& tc, Problem& p) {
    run_reference(tc, p);
    for (double& v : p.c) v *= 1.0 + 1e-14;
  });
  VerifyOptions tight;
  tight.model.tol_multiplier = 3.0;
  const Verdict a = verify_candidate(noisy, cases, tight);
  for (double tol : {3.0, 10.0, 1e3, 1e6}) {
    VerifyOptions o;
    o.model.tol_multiplier = tol;
    const Verdict b = verify_candidate(noisy, cases, o);
    if (a.passed()) CHECK(b.passed());
    for (const auto& [combo, ok] : a.combo_pass) {
      if (ok) CHECK(b.combo_pass.at(combo));
    }
  }
}

TEST_CASE("verdict names round trip") {
  for (int k = 0; k < 8; ++k) {
    const auto kind = static_cast<VerdictKind>(k);
    CHECK(verdict_from_string(to_string(kind)) == kind);
  }
  CHECK_FALSE(verdict_from_string("Bogus"));
}
