// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "blasgen/dispatch.hpp"
#include "blasgen/pipeline.hpp"
#include "paths.hpp"

using namespace blasgen;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* tag, const std::string& name, bool ok, const std::string& why = "") {
  std::printf("%s [%s] %s%s\n", ok ? "PASS" : "FAIL", tag, name.c_str(),
              ok || why.empty() ? "" : (": " + why).c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SelftestReport selftest;
double selftest_seconds = 0.0;

void oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  selftest = run_selftest();
  selftest_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string why;
  double worst = 0.0;
  for (const auto& r : selftest.routines) {
    worst = std::max(worst, r.worst);
    for (const auto& f : r.failures) {
      if (ends_with(f, "dense evaluator") && why.empty()) why = f;
    }
  }
  if (selftest_seconds >= 120.0) why = fmt::format("took {:.1f} s", selftest_seconds);
  report("PRIMARY", fmt::format("oracle equivalence (20 routines, worst {:.3f} <= 3, {:.2f} s)", worst,
                                selftest_seconds),
         why.empty(), why);
}

void case_counts() {
  const auto dgemv = enumerate_cases(spec_of(Routine::dgemv)).size();
  const auto dtrsm = enumerate_cases(spec_of(Routine::dtrsm)).size();
  const BenchConfig b;
  const bool ok = dgemv == 128 && dtrsm == 256 && b.level1_n == 16777216 && b.level2_mn == 8192 &&
                  b.level3_mnk == 2048;
  report("PRIMARY", "case-count anchors (dgemv 128, dtrsm 256; bench 16777216/8192/2048)", ok,
         fmt::format("dgemv {} dtrsm {} bench {}/{}/{}", dgemv, dtrsm, b.level1_n, b.level2_mn,
                     b.level3_mnk));
}

void verifier_discrimination() {
  std::string why;
  for (const RoutineSpec& spec : all_routines()) {
    const Verdict v = verify_reference(enumerate_cases(spec));
    if (!v.passed() && why.empty()) why = fmt::format("reference fails {}", name_of(spec.id));
  }
  std::size_t trials = 0;
  for (const TestCase& tc : enumerate_cases(spec_of(Routine::dgemm))) {
    if (tc.n != 16) continue;
    const MatrixShape c = *shapes_of(tc).c;
    for (index_t j = 0; j < c.cols; ++j) {
      for (index_t i = 0; i < c.rows; ++i) {
        const auto at = static_cast<std::size_t>(i + j * c.ld);
        FunctionInvoker bad([at](const TestCase& t, Problem& p) {
          run_reference(t, p);
          p.c[at] *= 1.0 + 1e-3;
        });
        const Verdict v = verify_candidate(bad, {tc});
        ++trials;
        if (v.kind != VerdictKind::NumericalError && why.empty()) {
          why = fmt::format("{} element ({},{}) classified {}", tc.id(), i, j, to_string(v.kind));
        }
      }
    }
  }
  if (trials == 0) why = "no dgemm case with n=16";
  report("PRIMARY",
         fmt::format("verifier discrimination (reference passes all; {} perturbed dgemm n=16 outputs "
                     "-> NumericalError)", trials),
         why.empty(), why);
}

void poison() {
  std::string why;
  std::size_t cases = 0;
  for (const auto& r : selftest.routines) {
    cases += r.poison_cases;
    for (const auto& f : r.failures) {
      if (ends_with(f, "non-referenced storage") && why.empty()) why = f;
    }
  }
  report("PRIMARY", fmt::format("poison tests ({} uplo/diag cases bit-identical)", cases),
         why.empty() && cases > 0, why);
}

void prompt_fidelity() {
  const fs::path golden = testing::source_dir() / "tests" / "golden";
  const std::string src =
      testing::read_text(testing::source_dir() / "tests" / "fixtures" / "fortran" / "dsymm.f");
  const std::string p1 = build_prompt(Routine::dgemm, PromptMode::NameToCcode).text;
  const std::string p2 = build_prompt(Routine::daxpy, PromptMode::NameToOptCcode).text;
  const std::string p3 = build_prompt(Routine::dsymm, PromptMode::FrtcodeToOptCcode, src).text;
  std::string why;
  if (p1 != testing::read_text(golden / "name_to_c_dgemm.txt")) why = "NameToCcode differs";
  if (p2 != testing::read_text(golden / "name_to_opt_c_daxpy.txt")) why = "NameToOptCcode differs";
  if (p3 != testing::read_text(golden / "frt_to_opt_c_dsymm.txt") + "\n\n" + src) {
    why = "FrtcodeToOptCcode differs";
  }
  const std::string speedup =
      "Thread parallelization, SIMD vectorization, and cache blocking should be considered for "
      "speed-up.";
  const std::string marker = "Insert printf(\"[gptblas]\");";
  for (const std::string* p : {&p1, &p2, &p3}) {
    if (p->find(marker) == std::string::npos) why = "marker sentence missing";
  }
  if (p2.find(speedup) == std::string::npos || p3.find(speedup) == std::string::npos) {
    why = "speed-up sentence missing";
  }
  report("PRIMARY", "prompt fidelity (3 templates byte-identical to goldens)", why.empty(), why);
}

void cost_accounting() {
  const double in = cost_usd(gpt41_profile(), 1000000, 0);
  const double out = cost_usd(o4mini_profile(), 0, 1000000);
  report("PRIMARY", "cost accounting (1M in on gpt-4.1 = $2.00; 1M out on o4-mini = $4.40)",
         in == 2.00 && out == 4.40, fmt::format("{:.17g} / {:.17g}", in, out));
}

bool within_ulp(double got, double want) {
  return std::fabs(got - want) <= std::fabs(std::nextafter(want, INFINITY) - want);
}

void metric_arithmetic() {
  BenchConfig cfg;
  FixedTimer one(1.0);
  const BenchSample g = run_bench(one, "synthetic", bench_case(Routine::dgemm, {}, cfg), cfg);
  const BenchSample a = run_bench(one, "synthetic", bench_case(Routine::daxpy, {}, cfg), cfg);
  report("PRIMARY",
         "metric arithmetic (dgemm 2048^3 @1 s = 17.179869184 GFlops/s; daxpy 2^24 @1 s = "
         "0.402653184 GB/s)",
         g.metric == MetricKind::FlopsPerSec && a.metric == MetricKind::BytesPerSec &&
             within_ulp(g.metric_value, 17.179869184) && within_ulp(a.metric_value, 0.402653184),
         fmt::format("{:.17g} / {:.17g}", g.metric_value, a.metric_value));
}

void mock_end_to_end() {
  const fs::path cfg_path = testing::source_dir() / "configs" / "mock.json";
  std::string why;
  std::vector<fs::path> outs;
  for (int run = 0; run < 2 && why.empty(); ++run) {
    RunConfig cfg = load_config(cfg_path);
    cfg.output_dir = make_scratch(testing::scratch_root(), "acceptance-mock");
    std::ostringstream log;
    if (cmd_run(cfg, log) != kExitOk) why = "run failed:\n" + log.str();
    outs.push_back(cfg.output_dir);
  }
  if (why.empty()) {
    const std::string expected =
        testing::read_text(testing::source_dir() / "tests" / "golden" / "mock_pass_table.csv");
    if (testing::read_text(OutputLayout{outs[0]}.reports() / "pass.csv") != expected) {
      why = "pass table differs from the frozen one";
    }
    for (const auto& e : fs::directory_iterator(OutputLayout{outs[0]}.reports())) {
      const fs::path twin = OutputLayout{outs[1]}.reports() / e.path().filename();
      if (testing::read_text(e.path()) != testing::read_text(twin)) {
        why = e.path().filename().string() + " differs between runs";
      }
    }
  }
  report("PRIMARY", "mock end-to-end (frozen pass table, byte-identical reports across two runs)",
         why.empty(), why);
}

void not_reproducible() {
  // Published figures cannot be regenerated here; what is checked is the
  // rendering convention: ratios come from unrounded values.
  const bool rounded = format_ratio(68.0, 6.0) == "(11.3x)";
  const bool raw = format_metric(68.04) == "68.0" && format_metric(5.96) == "6.0" &&
                   format_ratio(68.04, 5.96) == "(11.4x)";
  const bool simple = format_ratio(20.0, 10.0) == "(2.0x)";
  report("PRIMARY",
         "NOT REPRODUCIBLE: absolute pass counts and GB/s-GFlops/s values; substituted by the "
         "checks above and ratio formatting (68.0 vs 6.0 cells render (11.4x) from unrounded inputs)",
         rounded && raw && simple);
}

void shim_round_trip() {
  std::mt19937_64 rng(7);
  auto pick = [&rng](index_t lo, index_t hi) {
    return std::uniform_int_distribution<index_t>(lo, hi)(rng);
  };
  std::string why;
  std::size_t total = 0;
  for (const RoutineSpec& spec : all_routines()) {
    const auto grid = enumerate_cases(spec);
    std::vector<TestCase> cases;
    for (int i = 0; i < 50; ++i) {
      TestCase tc = grid[static_cast<std::size_t>(pick(0, static_cast<index_t>(grid.size()) - 1))];
      tc.seed = rng();
      cases.push_back(tc);
    }
    std::vector<Problem> inputs;
    for (const TestCase& tc : cases) inputs.push_back(init_problem(tc));
    SandboxInvoker runner(handle_for(reference_library_path(), spec.id),
                          make_scratch(testing::scratch_root(), "acceptance-shim"));
    const auto got = runner.invoke(cases, inputs);
    FunctionInvoker direct([](const TestCase& tc, Problem& p) { run_reference(tc, p); });
    const auto want = direct.invoke(cases, inputs);
    for (std::size_t i = 0; i < cases.size(); ++i, ++total) {
      if (got[i].status != CaseOutcome::Status::Ok || !(got[i].output == want[i].output)) {
        if (why.empty()) why = cases[i].id();
      }
    }
  }
  report("SECONDARY", fmt::format("shim round-trip ({} randomized cases bit-identical)", total),
         why.empty(), why);
}

void isolation() {
  const fs::path corpus = testing::source_dir() / "corpus" / "ddot";
  const auto cases = enumerate_cases(spec_of(Routine::ddot));
  SandboxOptions so;
  so.case_budget = std::chrono::seconds(2);
  auto verdict = [&](const char* file, bool& marker) {
    const fs::path scratch = make_scratch(testing::scratch_root(), "acceptance-iso");
    const CompileResult built =
        compile_candidate(testing::read_text(corpus / file), Routine::ddot, BuildRecipe{}, scratch);
    if (!built.ok()) return built.kind;
    SandboxInvoker inv(built.handle, scratch / "cases", so);
    std::vector<Problem> inputs;
    for (const TestCase& tc : cases) inputs.push_back(init_problem(tc));
    const auto outcomes = inv.invoke(cases, inputs);
    marker = !outcomes.empty() && outcomes.front().marker;
    return verify_candidate(inv, cases).kind;
  };
  bool m_crash = false, m_loop = false, m_ok = false;
  const VerdictKind crash = verdict("crash.c", m_crash);
  const VerdictKind loop = verdict("loop.c", m_loop);
  const VerdictKind ok = verdict("ok.c", m_ok);
  report("SECONDARY", "isolation (crasher -> Crash, infinite loop -> Timeout, marker captured)",
         crash == VerdictKind::Crash && loop == VerdictKind::Timeout && ok == VerdictKind::Pass && m_ok,
         fmt::format("{} / {} / {} marker={}", to_string(crash), to_string(loop), to_string(ok), m_ok));
}

}  // namespace

int main() {
  oracle_equivalence();
  case_counts();
  verifier_discrimination();
  poison();
  prompt_fidelity();
  cost_accounting();
  metric_arithmetic();
  mock_end_to_end();
  not_reproducible();
  shim_round_trip();
  isolation();
  return failures == 0 ? 0 : 1;
}
