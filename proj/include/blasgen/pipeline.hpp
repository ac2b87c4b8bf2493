#pragma once

// Orchestration behind the command-line tool. Every stage reads and writes
// through the output directory:
//   <out>/candidates/<model>/<mode>/<routine>/<i>.c (+ .json)   sampled code
//   <out>/ledger.jsonl                                          verdicts, timings
//   <out>/reports/{pass,perf}.{txt,md,csv}                      tables
// candidates/ has the replay-store layout, so a finished run can be replayed.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blasgen/bench.hpp"
#include "blasgen/llm_client.hpp"
#include "blasgen/report.hpp"
#include "blasgen/sandbox.hpp"
#include "blasgen/selftest.hpp"

namespace blasgen {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BackendSpec {
  enum class Kind { Live, Mock, Replay };
  Kind kind = Kind::Mock;
  std::filesystem::path path;  // corpus or store
};

struct RunConfig {
  std::vector<Routine> routines;  // default: all 20
  std::vector<PromptMode> modes;  // default: all three
  std::vector<std::string> models{"gpt-4.1"};
  BackendSpec backend;
  LiveOptions live;
  SamplingConfig sampling;
  std::optional<std::filesystem::path> fortran_src_dir;  // <routine>.f files
  bool bench_enabled = false;
  BenchConfig bench;
  BuildRecipe build;
  SandboxOptions sandbox;
  bool strict_argcheck = false;
  int jobs = 1;  // candidates verified concurrently
  std::vector<ReportFormat> formats{ReportFormat::Text, ReportFormat::Markdown, ReportFormat::Csv};
  PerfAggregate aggregate = PerfAggregate::Best;
  std::filesystem::path output_dir = "blasgen-out";
};

/// Parses a JSON config; relative paths resolve against base_dir. Unknown
/// keys and invalid values raise ConfigError.
RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);
/// Cross-field checks (profiles exist, Fortran sources present, ...).
void validate(const RunConfig& cfg);

struct OutputLayout {
  std::filesystem::path root;
  std::filesystem::path candidates() const { return root / "candidates"; }
  std::filesystem::path ledger() const { return root / "ledger.jsonl"; }
  std::filesystem::path reports() const { return root / "reports"; }
  std::filesystem::path work() const { return root / "work"; }
};

std::unique_ptr<Backend> make_backend(const RunConfig& cfg);

/// Loads the Fortran attachment for the Fortran-based mode.
std::optional<std::string> fortran_attachment(const RunConfig& cfg, Routine r, PromptMode mode);

/// Each stage skips work already recorded, so re-running resumes.
int cmd_gen(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& log);
int cmd_bench(const RunConfig& cfg, std::ostream& log);
int cmd_report(const std::filesystem::path& ledger, const std::filesystem::path& reports_dir,
               const std::vector<ReportFormat>& formats, PerfAggregate aggregate,
               std::ostream& log);
/// gen, verify, bench (when enabled), report.
int cmd_run(const RunConfig& cfg, std::ostream& log);

int cmd_prompt(Routine r, PromptMode mode, const std::optional<std::filesystem::path>& fortran,
               std::ostream& out);
int cmd_oracle_selftest(const SelftestOptions& opts, std::ostream& out);

std::string_view extension_of(ReportFormat f);

}  // namespace blasgen
