#include "blasgen/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "blasgen/dispatch.hpp"

namespace blasgen {

namespace {

constexpr std::array<std::string_view, 8> kVerdictNames = {
    "Pass",  "CompileError", "LinkError",      "Crash",
    "Timeout", "MarkerMissing", "NumericalError", "ArgCheckMismatch",
};

std::string describe(const CaseOutcome& o) {
  switch (o.status) {
    case CaseOutcome::Status::Crash: return "terminated by signal " + std::to_string(o.signal);
    case CaseOutcome::Status::Timeout: return "wall-clock budget exceeded";
    case CaseOutcome::Status::Error:
      return o.detail.empty() ? "runner exited with code " + std::to_string(o.exit_code) : o.detail;
    default: return o.detail;
  }
}

}  // namespace

std::string_view to_string(VerdictKind k) { return kVerdictNames[static_cast<std::size_t>(k)]; }

std::optional<VerdictKind> verdict_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kVerdictNames.size(); ++i) {
    if (kVerdictNames[i] == s) return static_cast<VerdictKind>(i);
  }
  return std::nullopt;
}

std::vector<CaseOutcome> FunctionInvoker::invoke(const std::vector<TestCase>& cases,
                                                 const std::vector<Problem>& inputs) {
  std::vector<CaseOutcome> out(cases.size());
  for (std::size_t i = 0; i < cases.size(); ++i) {
    CaseOutcome& o = out[i];
    o.output = inputs[i];
    o.status = CaseOutcome::Status::Ok;
    o.marker = true;
    try {
      fn_(cases[i], o.output);
    } catch (const ArgumentError& e) {
      o.xerbla.push_back("XERBLA:" + e.routine() + ":" + std::to_string(e.position()));
    }
  }
  return out;
}

Verdict verify_candidate(KernelInvoker& kernel, const std::vector<TestCase>& cases,
                         const VerifyOptions& opts) {
  std::vector<Problem> inputs;
  inputs.reserve(cases.size());
  for (const TestCase& tc : cases) inputs.push_back(init_problem(tc));
  const std::vector<CaseOutcome> outcomes = kernel.invoke(cases, inputs);

  Verdict v;
  for (const TestCase& tc : cases) v.combo_pass.emplace(tc.param_combo(), true);
  std::optional<std::size_t> first_fail;
  VerdictKind fail_kind = VerdictKind::Pass;
  std::string fail_detail;
  double max_err = 0.0;
  bool any_marker = false;

  auto fail = [&](std::size_t i, VerdictKind kind, std::string detail) {
    v.combo_pass[cases[i].param_combo()] = false;
    if (!first_fail) {
      first_fail = i;
      fail_kind = kind;
      fail_detail = std::move(detail);
    }
  };

  for (std::size_t i = 0; i < cases.size(); ++i) {
    const TestCase& tc = cases[i];
    const CaseOutcome& o = i < outcomes.size() ? outcomes[i] : CaseOutcome{};
    switch (o.status) {
      case CaseOutcome::Status::Crash: fail(i, VerdictKind::Crash, describe(o)); continue;
      case CaseOutcome::Status::Timeout: fail(i, VerdictKind::Timeout, describe(o)); continue;
      case CaseOutcome::Status::Error: fail(i, VerdictKind::Crash, describe(o)); continue;
      case CaseOutcome::Status::NotRun:
        v.combo_pass[tc.param_combo()] = false;
        continue;
      case CaseOutcome::Status::Ok: break;
    }
    any_marker |= o.marker;
    if (!o.xerbla.empty()) {
      ++v.argcheck_mismatches;
      if (opts.strict_argcheck) {
        fail(i, VerdictKind::ArgCheckMismatch, "valid input rejected: " + o.xerbla.front());
        continue;
      }
    }
    Problem expected = inputs[i];
    run_reference(tc, expected);
    const double err = relative_error(tc, o.output, expected, inputs[i], opts.model);
    max_err = std::max(max_err, err);
    if (!(err <= opts.model.tol_multiplier)) {
      std::ostringstream ss;
      ss << "normalized error " << err << " exceeds " << opts.model.tol_multiplier;
      fail(i, VerdictKind::NumericalError, ss.str());
    }
  }

  bool any_ran = false;
  for (const CaseOutcome& o : outcomes) any_ran |= o.status == CaseOutcome::Status::Ok;
  if (any_ran) v.max_rel_err = max_err;
  if (first_fail) {
    v.kind = fail_kind;
    v.failing_case = cases[*first_fail];
    v.detail = fail_detail;
  } else if (any_ran && !any_marker) {
    v.kind = VerdictKind::MarkerMissing;
    v.failing_case = cases.front();
    v.detail = "no case printed the marker";
    for (auto& [combo, ok] : v.combo_pass) ok = false;
  }
  return v;
}

Verdict verify_reference(const std::vector<TestCase>& cases, const VerifyOptions& opts) {
  FunctionInvoker oracle([](const TestCase& tc, Problem& p) { run_reference(tc, p); });
  return verify_candidate(oracle, cases, opts);
}

}  // namespace blasgen
