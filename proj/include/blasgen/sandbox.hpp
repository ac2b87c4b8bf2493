#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "blasgen/abi.hpp"
#include "blasgen/verifier.hpp"

namespace blasgen {

struct BuildRecipe {
  std::string compiler = "cc";
  std::string arch_flag = "-march=native";
  std::vector<std::string> opt_flags;  // none by default
  std::vector<std::string> extra_flags{"-fopenmp"};
  std::vector<std::string> extra_libs{"-lm"};
  std::chrono::milliseconds timeout{std::chrono::seconds(120)};
};

struct KernelHandle {
  std::filesystem::path library_path;
  std::string entry_symbol;
  Routine routine = Routine::dasum;
  abi::IntWidth int_width = abi::IntWidth::I32;
};

struct CompileResult {
  VerdictKind kind = VerdictKind::Pass;  // Pass, CompileError or LinkError
  KernelHandle handle;
  std::string diagnostics;
  bool ok() const { return kind == VerdictKind::Pass; }
};

/// Support translation unit compiled next to every candidate: a weak
/// recorder `xerbla` printing "XERBLA:<name>:<info>" to stderr.
std::string support_source();

/// Extra -D flags for MIN/MAX when the source uses them without defining them.
std::vector<std::string> macro_flags(const std::string& source);

/// Path of the child runner: $BLASGEN_EXEC, else the one built alongside.
std::filesystem::path runner_path();
/// The oracle exported with the candidate ABI: $BLASGEN_REFABI, else the
/// one built alongside.
std::filesystem::path reference_library_path();

/// Writes the source into `scratch`, builds lib.so and checks that the
/// entry symbol resolves in a child process.
CompileResult compile_candidate(const std::string& source, Routine routine,
                                const BuildRecipe& recipe, const std::filesystem::path& scratch);

/// Wraps an already-built library (e.g. the exported oracle).
KernelHandle handle_for(const std::filesystem::path& library, Routine routine,
                        abi::IntWidth width = abi::IntWidth::I32);

struct SandboxOptions {
  std::chrono::milliseconds case_budget{std::chrono::seconds(10)};
  int parallel = 1;  // concurrent runner processes
  int threads = 0;   // OMP_NUM_THREADS for the child, 0 leaves it unset
};

/// Runs cases in child processes. A crash is charged to the case that was
/// executing; the runner is restarted after it. A timeout stops the batch.
class SandboxInvoker : public KernelInvoker {
 public:
  SandboxInvoker(KernelHandle handle, std::filesystem::path scratch, SandboxOptions opts = {});
  std::vector<CaseOutcome> invoke(const std::vector<TestCase>& cases,
                                  const std::vector<Problem>& inputs) override;

 private:
  void run_range(const std::vector<TestCase>& cases, const std::vector<Problem>& inputs,
                 std::size_t first, std::size_t last, std::vector<CaseOutcome>& out);

  KernelHandle handle_;
  std::filesystem::path scratch_;
  SandboxOptions opts_;
};

/// Unique scratch directory below `root`.
std::filesystem::path make_scratch(const std::filesystem::path& root, const std::string& stem);

}  // namespace blasgen
