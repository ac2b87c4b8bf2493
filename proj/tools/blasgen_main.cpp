// blasgen: generate, verify, benchmark and tabulate BLAS kernel candidates.

#include <CLI11.hpp>

#include <iostream>

#include "blasgen/pipeline.hpp"

using namespace blasgen;

namespace {

Routine routine_arg(const std::string& name) {
  const auto r = routine_from_name(name);
  if (!r) throw ConfigError("unknown routine: " + name);
  return *r;
}

PromptMode mode_arg(const std::string& name) {
  const auto m = prompt_mode_from_string(name);
  if (!m) throw ConfigError("unknown prompt mode: " + name + " (NameToCcode, NameToOptCcode, FrtcodeToOptCcode)");
  return *m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LLM-generated BLAS kernel evaluation harness"};
  app.require_subcommand(1);
  std::string config_path = "blasgen.json";

  auto* selftest = app.add_subcommand("oracle-selftest", "check the reference oracle against an independent evaluator");
  bool serial = false;
  std::string fault;
  selftest->add_flag("--serial", serial, "disable the OpenMP sweep");
  selftest->add_option("--inject-fault", fault, "perturb one routine's oracle output (testing aid)")
      ->group("");

  auto* prompt = app.add_subcommand("prompt", "print the prompt for a routine");
  std::string routine;
  std::string mode = "NameToCcode";
  std::string fortran;
  prompt->add_option("routine", routine, "routine name, e.g. dgemm")->required();
  prompt->add_option("-m,--mode", mode, "NameToCcode, NameToOptCcode or FrtcodeToOptCcode");
  prompt->add_option("-f,--fortran", fortran, "Fortran reference to attach");

  std::vector<CLI::App*> staged;
  for (const char* name : {"gen", "verify", "bench", "run"}) {
    const char* what = std::string_view(name) == "gen"      ? "sample candidates into <out>/candidates"
                       : std::string_view(name) == "verify" ? "compile and verify sampled candidates"
                       : std::string_view(name) == "bench"  ? "time passing candidates and the reference"
                                                            : "gen, verify, bench (if enabled) and report";
    auto* sub = app.add_subcommand(name, what);
    sub->add_option("-c,--config", config_path, "run configuration (JSON)")->capture_default_str();
    staged.push_back(sub);
  }

  auto* report = app.add_subcommand("report", "write pass and performance tables from a ledger");
  std::string ledger;
  std::string out_dir;
  std::vector<std::string> formats;
  std::string aggregate;
  report->add_option("-c,--config", config_path, "run configuration (JSON)")->capture_default_str();
  report->add_option("--ledger", ledger, "ledger file (overrides the config)");
  report->add_option("-o,--out", out_dir, "report directory (default: next to the ledger)");
  report->add_option("--format", formats, "text, markdown, csv")->delimiter(',');
  report->add_option("--aggregate", aggregate, "best or median")
      ->check(CLI::IsMember({"best", "median"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (selftest->parsed()) {
      SelftestOptions opts;
      opts.parallel = !serial;
      if (!fault.empty()) opts.inject_fault = routine_arg(fault);
      return cmd_oracle_selftest(opts, std::cout);
    }
    if (prompt->parsed()) {
      std::optional<std::filesystem::path> f;
      if (!fortran.empty()) f = fortran;
      return cmd_prompt(routine_arg(routine), mode_arg(mode), f, std::cout);
    }
    if (report->parsed()) {
      std::vector<ReportFormat> fmts{ReportFormat::Text, ReportFormat::Markdown, ReportFormat::Csv};
      PerfAggregate agg = PerfAggregate::Best;
      std::filesystem::path ledger_path;
      std::filesystem::path reports_dir;
      if (ledger.empty()) {
        const RunConfig cfg = load_config(config_path);
        const OutputLayout layout{cfg.output_dir};
        ledger_path = layout.ledger();
        reports_dir = layout.reports();
        fmts = cfg.formats;
        agg = cfg.aggregate;
      } else {
        ledger_path = ledger;
        reports_dir = std::filesystem::path(ledger).parent_path() / "reports";
      }
      if (!out_dir.empty()) reports_dir = out_dir;
      if (!formats.empty()) {
        fmts.clear();
        for (const std::string& f : formats) {
          if (f == "text") {
            fmts.push_back(ReportFormat::Text);
          } else if (f == "markdown" || f == "md") {
            fmts.push_back(ReportFormat::Markdown);
          } else if (f == "csv") {
            fmts.push_back(ReportFormat::Csv);
          } else {
            throw ConfigError("unknown report format: " + f);
          }
        }
      }
      if (!aggregate.empty()) agg = aggregate == "median" ? PerfAggregate::Median : PerfAggregate::Best;
      return cmd_report(ledger_path, reports_dir, fmts, agg, std::cout);
    }
    const RunConfig cfg = load_config(config_path);
    if (staged[0]->parsed()) return cmd_gen(cfg, std::cout);
    if (staged[1]->parsed()) return cmd_verify(cfg, std::cout);
    if (staged[2]->parsed()) return cmd_bench(cfg, std::cout);
    return cmd_run(cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
