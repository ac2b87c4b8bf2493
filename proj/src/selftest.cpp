#include "blasgen/selftest.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "blasgen/dispatch.hpp"
#include "blasgen/error_model.hpp"
#include "blasgen/naive.hpp"
#include "blasgen/poison.hpp"

namespace blasgen {

bool SelftestReport::ok() const {
  return std::all_of(routines.begin(), routines.end(),
                     [](const RoutineSelftest& r) { return r.failures.empty(); });
}

namespace {

struct CaseResult {
  double err = 0.0;
  bool equivalent = true;
  bool poison_checked = false;
  bool poison_ok = true;
};

void perturb(Problem& p) {
  constexpr double f = 1.0 + 1e-3;
  p.result *= f;
  if (p.result == 0.0) p.result = 1e-3;
  for (auto* buf : {&p.x, &p.y, &p.a, &p.b, &p.c}) {
    for (double& v : *buf) v *= f;
  }
}

CaseResult check_case(const TestCase& tc, const SelftestOptions& opts) {
  CaseResult r;
  const Problem in = init_problem(tc);
  Problem ref = in;
  Problem dense = in;
  run_reference(tc, ref);
  if (opts.inject_fault == tc.routine) perturb(ref);
  naive::run(tc, dense);
  r.err = relative_error(tc, ref, dense, in);
  r.equivalent = r.err <= opts.tol;
  if (has_uplo(tc.routine)) {
    r.poison_checked = true;
    Problem dirty = in;
    const PoisonMask mask = poison_unreferenced(tc, dirty);
    run_reference(tc, dirty);
    Problem clean = in;
    run_reference(tc, clean);
    r.poison_ok = poison_run_matches(clean, dirty, mask);
  }
  return r;
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
  std::vector<TestCase> cases;
  for (const RoutineSpec& spec : all_routines()) {
    const auto more = enumerate_cases(spec);
    cases.insert(cases.end(), more.begin(), more.end());
  }
  std::vector<CaseResult> results(cases.size());
  const auto count = static_cast<long>(cases.size());
  if (opts.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) results[i] = check_case(cases[i], opts);
  } else {
    for (long i = 0; i < count; ++i) results[i] = check_case(cases[i], opts);
  }

  SelftestReport report;
  for (const RoutineSpec& spec : all_routines()) {
    RoutineSelftest r;
    r.routine = spec.id;
    report.routines.push_back(r);
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    RoutineSelftest& r = report.routines[static_cast<std::size_t>(cases[i].routine)];
    const CaseResult& c = results[i];
    ++r.cases;
    if (c.poison_checked) ++r.poison_cases;
    r.worst = std::max(r.worst, c.err);
    if (!c.equivalent) r.failures.push_back(cases[i].id() + ": oracle disagrees with dense evaluator");
    if (!c.poison_ok) r.failures.push_back(cases[i].id() + ": touched non-referenced storage");
  }
  return report;
}

std::string render(const SelftestReport& rep) {
  std::string out = fmt::format("{:<8} {:>6} {:>7} {:>10}  {}\n", "routine", "cases", "poison",
                                "worst_err", "status");
  for (const RoutineSelftest& r : rep.routines) {
    out += fmt::format("{:<8} {:>6} {:>7} {:>10.3g}  {}\n", name_of(r.routine), r.cases,
                       r.poison_cases, r.worst, r.failures.empty() ? "ok" : "FAIL");
  }
  for (const RoutineSelftest& r : rep.routines) {
    for (const std::string& f : r.failures) out += "  " + f + "\n";
  }
  return out;
}

}  // namespace blasgen
