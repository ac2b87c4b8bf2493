#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blasgen/error_model.hpp"
#include "blasgen/testgen.hpp"

namespace blasgen {

enum class VerdictKind {
  Pass,
  CompileError,
  LinkError,
  Crash,
  Timeout,
  MarkerMissing,
  NumericalError,
  ArgCheckMismatch,
};

std::string_view to_string(VerdictKind k);
std::optional<VerdictKind> verdict_from_string(std::string_view s);

inline constexpr std::string_view kMarker = "[gptblas]";

/// What happened when one case was executed.
struct CaseOutcome {
  enum class Status { Ok, Crash, Timeout, NotRun, Error };
  Status status = Status::NotRun;
  int signal = 0;
  int exit_code = 0;
  bool marker = false;
  std::vector<std::string> xerbla;  // "XERBLA:<name>:<info>" lines
  Problem output;
  std::string detail;
};

/// Executes a batch of cases. Implementations must return one outcome per
/// case, in order; cases after a timeout may be left NotRun.
class KernelInvoker {
 public:
  virtual ~KernelInvoker() = default;
  virtual std::vector<CaseOutcome> invoke(const std::vector<TestCase>& cases,
                                          const std::vector<Problem>& inputs) = 0;
};

/// Runs a callable in-process (used for the oracle and for tests).
/// ArgumentError thrown by the callable is reported as a xerbla call.
class FunctionInvoker : public KernelInvoker {
 public:
  using Fn = std::function<void(const TestCase&, Problem&)>;
  explicit FunctionInvoker(Fn fn) : fn_(std::move(fn)) {}
  std::vector<CaseOutcome> invoke(const std::vector<TestCase>& cases,
                                  const std::vector<Problem>& inputs) override;

 private:
  Fn fn_;
};

struct VerifyOptions {
  ErrorModel model;
  bool strict_argcheck = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Pass;
  std::optional<TestCase> failing_case;
  std::string detail;
  std::optional<double> max_rel_err;
  /// Per parameter combination: true when every case of the combination ran
  /// and passed. Empty combination key for stride-only routines.
  std::map<std::string, bool> combo_pass;
  /// Valid inputs that triggered xerbla (reported even when not fatal).
  std::size_t argcheck_mismatches = 0;

  bool passed() const { return kind == VerdictKind::Pass; }
};

/// Executes every case and classifies the candidate. Pass iff every case
/// passes; otherwise the verdict describes the first failing case in
/// manifest order.
Verdict verify_candidate(KernelInvoker& kernel, const std::vector<TestCase>& cases,
                         const VerifyOptions& opts = {});

Verdict verify_reference(const std::vector<TestCase>& cases, const VerifyOptions& opts = {});

}  // namespace blasgen
