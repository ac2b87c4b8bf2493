#include <doctest.h>

#include <chrono>

#include "blasgen/sandbox.hpp"
#include "paths.hpp"

using namespace blasgen;
using namespace std::chrono_literals;

namespace {

std::string fixture(const std::string& name) {
  return testing::read_text(testing::source_dir() / "tests/fixtures/candidates" / name);
}

std::string corpus(const std::string& routine, const std::string& name) {
  return testing::read_text(testing::source_dir() / "corpus" / routine / name);
}

CompileResult build(const std::string& source, Routine r) {
  return compile_candidate(source, r, BuildRecipe{}, make_scratch(testing::scratch_root(), "cc"));
}

Verdict run(const CompileResult& built, Routine r, SandboxOptions opts = {},
            VerifyOptions vopts = {}) {
  REQUIRE(built.ok());
  SandboxInvoker inv(built.handle, built.handle.library_path.parent_path(), opts);
  return verify_candidate(inv, enumerate_cases(spec_of(r)), vopts);
}

}  // namespace

TEST_CASE("a correct candidate compiles, resolves and passes") {
  const CompileResult c = build(corpus("daxpy", "ok.c"), Routine::daxpy);
  REQUIRE(c.ok());
  CHECK(c.handle.entry_symbol == "GPTBLAS_daxpy");
  const Verdict v = run(c, Routine::daxpy);
  CHECK(v.kind == VerdictKind::Pass);
  CHECK_FALSE(v.failing_case);
}

TEST_CASE("compile and link failures") {
  const CompileResult syntax = build(fixture("syntax_error.c"), Routine::daxpy);
  CHECK(syntax.kind == VerdictKind::CompileError);
  CHECK(syntax.diagnostics.find("error") != std::string::npos);

  CHECK(build(fixture("wrong_name.c"), Routine::daxpy).kind == VerdictKind::LinkError);
  const CompileResult unresolved = build(fixture("unresolved.c"), Routine::daxpy);
  CHECK(unresolved.kind == VerdictKind::LinkError);
  CHECK(unresolved.diagnostics.find("daxpy_helper_that_does_not_exist") != std::string::npos);
}

TEST_CASE("MIN/MAX are supplied only when missing") {
  CHECK(macro_flags("int v = MIN(a, b);").size() == 1);
  CHECK(macro_flags("#define MIN(a,b) ((a)<(b)?(a):(b))\nint v = MIN(a, b);").empty());
  CHECK(macro_flags("int v = MAX(MIN(a, b), c);").size() == 2);
  CHECK(macro_flags("int MINIMUM(int);").empty());
  const CompileResult c = build(fixture("minmax_user.c"), Routine::daxpy);
  CHECK(c.ok());
  CHECK(run(c, Routine::daxpy).kind == VerdictKind::Pass);
}

TEST_CASE("xerbla calls are recorded; strict mode fails them") {
  const CompileResult c = build(fixture("xerbla_caller.c"), Routine::daxpy);
  REQUIRE(c.ok());
  const Verdict lenient = run(c, Routine::daxpy);
  CHECK(lenient.kind == VerdictKind::NumericalError);  // n = 1 is left unprocessed
  CHECK(lenient.argcheck_mismatches > 0);
  VerifyOptions strict;
  strict.strict_argcheck = true;
  const Verdict v = run(c, Routine::daxpy, {}, strict);
  CHECK(v.kind == VerdictKind::ArgCheckMismatch);
  CHECK(v.detail.find("XERBLA:DAXPY:1") != std::string::npos);
}

TEST_CASE("crashes and hangs are isolated") {
  SandboxOptions opts;
  opts.case_budget = 1s;
  const Verdict crash = run(build(corpus("ddot", "crash.c"), Routine::ddot), Routine::ddot, opts);
  CHECK(crash.kind == VerdictKind::Crash);
  REQUIRE(crash.failing_case);
  CHECK(crash.failing_case->n >= 29);
  // Cases after the crash still ran: the small-n combination passed.
  CHECK(crash.detail.find("signal 11") != std::string::npos);

  const auto t0 = std::chrono::steady_clock::now();
  const Verdict hang = run(build(corpus("ddot", "loop.c"), Routine::ddot), Routine::ddot, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(hang.kind == VerdictKind::Timeout);
  CHECK(secs < 10.0);

  const Verdict smash =
      run(build(fixture("stack_smash.c"), Routine::daxpy), Routine::daxpy, opts);
  CHECK(smash.kind == VerdictKind::Crash);

  const Verdict exits = run(build(fixture("exit_caller.c"), Routine::daxpy), Routine::daxpy, opts);
  CHECK(exits.kind == VerdictKind::Crash);
  REQUIRE(exits.failing_case);
  CHECK(exits.failing_case->n == 7);
}

TEST_CASE("marker presence") {
  const Verdict v = run(build(corpus("dasum", "nomarker.c"), Routine::dasum), Routine::dasum);
  CHECK(v.kind == VerdictKind::MarkerMissing);
}

TEST_CASE("ignoring uplo fails on an upper case") {
  const Verdict v = run(build(corpus("dsymv", "wrong.c"), Routine::dsymv), Routine::dsymv);
  CHECK(v.kind == VerdictKind::NumericalError);
  REQUIRE(v.failing_case);
  CHECK(v.failing_case->params.uplo == Triangle::Upper);
  CHECK(v.combo_pass.at("uplo=L"));
  CHECK_FALSE(v.combo_pass.at("uplo=U"));
}

TEST_CASE("parallel runners give the same verdict") {
  SandboxOptions opts;
  opts.parallel = 4;
  opts.case_budget = 1s;
  const CompileResult ok = build(corpus("dtrsv", "ok.c"), Routine::dtrsv);
  CHECK(run(ok, Routine::dtrsv, opts).kind == VerdictKind::Pass);
  const CompileResult hang = build(corpus("dtrsv", "loop.c"), Routine::dtrsv);
  const Verdict serial = run(hang, Routine::dtrsv, SandboxOptions{.case_budget = 1s});
  const Verdict par = run(hang, Routine::dtrsv, opts);
  CHECK(serial.kind == VerdictKind::Timeout);
  CHECK(par.kind == serial.kind);
  CHECK(par.failing_case == serial.failing_case);
  CHECK(par.combo_pass == serial.combo_pass);
}
