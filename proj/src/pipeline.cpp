#include "blasgen/pipeline.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "blasgen/ledger.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace blasgen {

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
      throw ConfigError(fmt::format("unknown key \"{}\" in {}", k, where));
    }
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("bad value for \"{}\": {}", key, e.what()));
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

ReportFormat format_from(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  if (s == "csv") return ReportFormat::Csv;
  throw ConfigError("unknown report format: " + s);
}

std::string dir_name(std::string key) {
  std::replace(key.begin(), key.end(), '/', '_');
  return key;
}

std::string clip(const std::string& s, std::size_t n = 4000) {
  return s.size() <= n ? s : s.substr(0, n) + "\n[truncated]";
}

struct StoredCandidate {
  std::string source;
  std::string failure;
  std::int64_t tokens_in = 0;
  std::int64_t tokens_out = 0;
  std::int64_t reasoning_tokens = 0;
  double cost_usd = 0.0;
  bool salvaged = false;
};

std::optional<StoredCandidate> load_stored(const fs::path& src) {
  if (!fs::exists(src)) return std::nullopt;
  StoredCandidate c;
  c.source = slurp(src);
  const fs::path meta = fs::path(src).replace_extension(".json");
  if (fs::exists(meta)) {
    const json j = json::parse(slurp(meta), nullptr, false);
    if (j.is_object()) {
      c.failure = j.value("failure", std::string());
      c.tokens_in = j.value("tokens_in", std::int64_t{0});
      c.tokens_out = j.value("tokens_out", std::int64_t{0});
      c.reasoning_tokens = j.value("reasoning_tokens", std::int64_t{0});
      c.cost_usd = j.value("cost_usd", 0.0);
      c.salvaged = j.value("salvaged", false);
    }
  }
  return c;
}

struct Slot {
  std::string model;
  PromptMode mode;
  Routine routine;
  int index;
  std::string key() const { return candidate_key(model, mode, routine, index); }
};

std::vector<Slot> all_slots(const RunConfig& cfg) {
  std::vector<Slot> out;
  for (const std::string& model : cfg.models) {
    for (Routine r : cfg.routines) {
      for (PromptMode m : cfg.modes) {
        for (int i = 0; i < cfg.sampling.n_samples; ++i) out.push_back({model, m, r, i});
      }
    }
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text, const fs::path& base_dir) {
  const json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON");
  check_keys(j,
             {"routines", "modes", "models", "backend", "live", "n_samples", "temperature",
              "top_p", "send_sampling_params", "max_in_flight", "salvage_fences",
              "fortran_src_dir", "bench", "build", "verify", "report", "output_dir"},
             "config");
  RunConfig cfg;
  std::vector<std::string> names;
  read(j, "routines", names);
  for (const std::string& n : names) {
    const auto r = routine_from_name(n);
    if (!r) throw ConfigError("unknown routine: " + n);
    cfg.routines.push_back(*r);
  }
  names.clear();
  read(j, "modes", names);
  for (const std::string& n : names) {
    const auto m = prompt_mode_from_string(n);
    if (!m) throw ConfigError("unknown prompt mode: " + n);
    cfg.modes.push_back(*m);
  }
  read(j, "models", cfg.models);

  std::string backend = "mock:corpus";
  read(j, "backend", backend);
  if (backend == "live") {
    cfg.backend.kind = BackendSpec::Kind::Live;
  } else if (backend.rfind("mock:", 0) == 0) {
    cfg.backend = {BackendSpec::Kind::Mock, resolve(base_dir, backend.substr(5))};
  } else if (backend.rfind("replay:", 0) == 0) {
    cfg.backend = {BackendSpec::Kind::Replay, resolve(base_dir, backend.substr(7))};
  } else {
    throw ConfigError("backend must be live, mock:<corpus> or replay:<store>");
  }
  if (j.contains("live")) {
    const json& l = j["live"];
    check_keys(l, {"base_url", "path", "api_key_env", "max_attempts", "backoff_ms",
                   "request_timeout_s"}, "live");
    read(l, "base_url", cfg.live.base_url);
    read(l, "path", cfg.live.path);
    read(l, "api_key_env", cfg.live.api_key_env);
    read(l, "max_attempts", cfg.live.max_attempts);
    long long ms = cfg.live.backoff.count();
    read(l, "backoff_ms", ms);
    cfg.live.backoff = std::chrono::milliseconds(ms);
    long long s = cfg.live.request_timeout.count();
    read(l, "request_timeout_s", s);
    cfg.live.request_timeout = std::chrono::seconds(s);
  }

  read(j, "n_samples", cfg.sampling.n_samples);
  read(j, "temperature", cfg.sampling.temperature);
  read(j, "top_p", cfg.sampling.top_p);
  read(j, "send_sampling_params", cfg.sampling.send_sampling_params);
  read(j, "max_in_flight", cfg.sampling.max_in_flight);
  read(j, "salvage_fences", cfg.sampling.salvage_fences);
  if (j.contains("fortran_src_dir")) {
    std::string d;
    read(j, "fortran_src_dir", d);
    cfg.fortran_src_dir = resolve(base_dir, d);
  }

  if (j.contains("bench")) {
    const json& b = j["bench"];
    check_keys(b, {"enabled", "level1_n", "level2_mn", "level3_mnk", "reps", "warmups", "threads",
                   "budget_s"}, "bench");
    read(b, "enabled", cfg.bench_enabled);
    read(b, "level1_n", cfg.bench.level1_n);
    read(b, "level2_mn", cfg.bench.level2_mn);
    read(b, "level3_mnk", cfg.bench.level3_mnk);
    read(b, "reps", cfg.bench.reps);
    read(b, "warmups", cfg.bench.warmups);
    read(b, "threads", cfg.bench.threads);
    long long s = std::chrono::duration_cast<std::chrono::seconds>(cfg.bench.budget).count();
    read(b, "budget_s", s);
    cfg.bench.budget = std::chrono::seconds(s);
  }
  if (j.contains("build")) {
    const json& b = j["build"];
    check_keys(b, {"compiler", "arch_flag", "opt_flags", "extra_flags", "extra_libs", "timeout_s"},
               "build");
    read(b, "compiler", cfg.build.compiler);
    read(b, "arch_flag", cfg.build.arch_flag);
    read(b, "opt_flags", cfg.build.opt_flags);
    read(b, "extra_flags", cfg.build.extra_flags);
    read(b, "extra_libs", cfg.build.extra_libs);
    long long s = std::chrono::duration_cast<std::chrono::seconds>(cfg.build.timeout).count();
    read(b, "timeout_s", s);
    cfg.build.timeout = std::chrono::seconds(s);
  }
  if (j.contains("verify")) {
    const json& v = j["verify"];
    check_keys(v, {"case_budget_ms", "parallel", "threads", "strict_argcheck", "jobs"}, "verify");
    long long ms = cfg.sandbox.case_budget.count();
    read(v, "case_budget_ms", ms);
    cfg.sandbox.case_budget = std::chrono::milliseconds(ms);
    read(v, "parallel", cfg.sandbox.parallel);
    read(v, "threads", cfg.sandbox.threads);
    read(v, "strict_argcheck", cfg.strict_argcheck);
    read(v, "jobs", cfg.jobs);
  }
  if (j.contains("report")) {
    const json& r = j["report"];
    check_keys(r, {"formats", "aggregate"}, "report");
    std::vector<std::string> formats;
    read(r, "formats", formats);
    if (!formats.empty()) {
      cfg.formats.clear();
      for (const std::string& f : formats) cfg.formats.push_back(format_from(f));
    }
    std::string agg = "best";
    read(r, "aggregate", agg);
    if (agg == "best") {
      cfg.aggregate = PerfAggregate::Best;
    } else if (agg == "median") {
      cfg.aggregate = PerfAggregate::Median;
    } else {
      throw ConfigError("report.aggregate must be best or median");
    }
  }
  std::string out = cfg.output_dir.string();
  read(j, "output_dir", out);
  cfg.output_dir = resolve(base_dir, out);

  if (cfg.routines.empty()) {
    for (const RoutineSpec& s : all_routines()) cfg.routines.push_back(s.id);
  }
  if (cfg.modes.empty()) cfg.modes.assign(std::begin(kAllModes), std::end(kAllModes));
  validate(cfg);
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), fs::absolute(path).parent_path());
}

void validate(const RunConfig& cfg) {
  if (cfg.models.empty()) throw ConfigError("no models configured");
  for (const std::string& m : cfg.models) {
    if (!find_profile(m)) throw ConfigError("no profile for model " + m);
  }
  if (cfg.sampling.n_samples < 1) throw ConfigError("n_samples must be at least 1");
  if (cfg.sampling.max_in_flight < 1) throw ConfigError("max_in_flight must be at least 1");
  if (cfg.jobs < 1 || cfg.sandbox.parallel < 1) throw ConfigError("jobs and parallel must be >= 1");
  if (cfg.sandbox.case_budget.count() <= 0) throw ConfigError("case_budget_ms must be positive");
  if (cfg.bench.reps < 3) throw ConfigError("bench.reps must be at least 3");
  if (cfg.bench.warmups < 0) throw ConfigError("bench.warmups must not be negative");
  if (cfg.bench.level1_n < 1 || cfg.bench.level2_mn < 1 || cfg.bench.level3_mnk < 1) {
    throw ConfigError("bench sizes must be positive");
  }
  if (cfg.backend.kind != BackendSpec::Kind::Live && !fs::is_directory(cfg.backend.path)) {
    throw ConfigError("backend directory not found: " + cfg.backend.path.string());
  }
  const bool fortran_mode = std::find(cfg.modes.begin(), cfg.modes.end(),
                                      PromptMode::FrtcodeToOptCcode) != cfg.modes.end();
  if (fortran_mode) {
    if (!cfg.fortran_src_dir) throw ConfigError("FrtcodeToOptCcode needs fortran_src_dir");
    for (Routine r : cfg.routines) {
      const fs::path f = *cfg.fortran_src_dir / (std::string(name_of(r)) + ".f");
      if (!fs::exists(f)) throw ConfigError("missing Fortran source " + f.string());
    }
  }
}

std::unique_ptr<Backend> make_backend(const RunConfig& cfg) {
  switch (cfg.backend.kind) {
    case BackendSpec::Kind::Live: return std::make_unique<LiveBackend>(cfg.live);
    case BackendSpec::Kind::Mock: return std::make_unique<MockBackend>(cfg.backend.path);
    case BackendSpec::Kind::Replay: return std::make_unique<ReplayBackend>(cfg.backend.path);
  }
  return nullptr;
}

std::optional<std::string> fortran_attachment(const RunConfig& cfg, Routine r, PromptMode mode) {
  if (mode != PromptMode::FrtcodeToOptCcode || !cfg.fortran_src_dir) return std::nullopt;
  return slurp(*cfg.fortran_src_dir / (std::string(name_of(r)) + ".f"));
}

int cmd_gen(const RunConfig& cfg, std::ostream& log) {
  const OutputLayout out{cfg.output_dir};
  const Ledger ledger = load_ledger(out.ledger());
  try {
    std::unique_ptr<Backend> backend;
    for (const std::string& model : cfg.models) {
      const ModelProfile profile = *find_profile(model);
      for (Routine r : cfg.routines) {
        for (PromptMode mode : cfg.modes) {
          std::vector<int> missing;
          for (int i = 0; i < cfg.sampling.n_samples; ++i) {
            const bool stored = fs::exists(replay_path(out.candidates(), model, mode, r, i));
            if (!stored && !ledger.find_candidate(candidate_key(model, mode, r, i))) {
              missing.push_back(i);
            }
          }
          if (missing.empty()) continue;
          if (!backend) backend = make_backend(cfg);
          const PromptBundle prompt = build_prompt(r, mode, fortran_attachment(cfg, r, mode));
          const auto got = sample_candidates(*backend, prompt, profile, cfg.sampling, missing);
          double cost = 0.0;
          for (const KernelCandidate& c : got) {
            save_replay(out.candidates(), c);
            cost += c.cost_usd;
          }
          log << fmt::format("gen    {}/{}/{}: {} sampled, ${:.4f}\n", model, to_string(mode),
                             name_of(r), got.size(), cost);
        }
      }
    }
  } catch (const TerminalError& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ReplayMiss& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  const OutputLayout out{cfg.output_dir};
  const Ledger ledger = load_ledger(out.ledger());
  LedgerWriter writer(out.ledger());
  std::vector<Slot> todo;
  bool missing = false;
  for (const Slot& s : all_slots(cfg)) {
    if (ledger.find_candidate(s.key())) continue;
    if (!fs::exists(replay_path(out.candidates(), s.model, s.mode, s.routine, s.index))) {
      log << "verify " << s.key() << ": no candidate source (run gen first)\n";
      missing = true;
      continue;
    }
    todo.push_back(s);
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
      const Slot& s = todo[i];
      const fs::path src = replay_path(out.candidates(), s.model, s.mode, s.routine, s.index);
      const StoredCandidate stored = *load_stored(src);
      CandidateRecord rec;
      rec.routine = s.routine;
      rec.mode = s.mode;
      rec.model = s.model;
      rec.sample_index = s.index;
      rec.tokens_in = stored.tokens_in;
      rec.tokens_out = stored.tokens_out;
      rec.reasoning_tokens = stored.reasoning_tokens;
      rec.cost_usd = stored.cost_usd;
      rec.salvaged = stored.salvaged;
      rec.source_file = fs::relative(src, out.root).generic_string();
      if (stored.source.empty()) {
        rec.verdict = VerdictKind::CompileError;
        rec.detail = "no source: " + (stored.failure.empty() ? "empty response" : stored.failure);
      } else {
        const fs::path scratch = make_scratch(out.work(), dir_name(s.key()));
        const CompileResult built = compile_candidate(stored.source, s.routine, cfg.build, scratch);
        if (!built.ok()) {
          rec.verdict = built.kind;
          rec.detail = clip(built.diagnostics);
        } else {
          SandboxInvoker invoker(built.handle, scratch / "cases", cfg.sandbox);
          VerifyOptions vo;
          vo.strict_argcheck = cfg.strict_argcheck;
          const Verdict v = verify_candidate(invoker, enumerate_cases(spec_of(s.routine)), vo);
          rec.verdict = v.kind;
          if (v.failing_case) rec.failing_case = v.failing_case->id();
          rec.max_rel_err = v.max_rel_err;
          rec.detail = clip(v.detail);
          rec.combo_pass = v.combo_pass;
          rec.argcheck_mismatches = v.argcheck_mismatches;
        }
        std::error_code ec;
        fs::remove_all(scratch, ec);
      }
      std::lock_guard<std::mutex> lock(mu);
      writer.append(rec);
      log << fmt::format("verify {}: {}{}\n", s.key(), to_string(rec.verdict),
                         rec.failing_case.empty() ? "" : " at " + rec.failing_case);
    }
  };
  const int workers = std::clamp<int>(cfg.jobs, 1, std::max<int>(1, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return missing ? kExitFailure : kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& log) {
  const OutputLayout out{cfg.output_dir};
  const Ledger ledger = load_ledger(out.ledger());
  LedgerWriter writer(out.ledger());
  auto have = [&ledger](const std::string& impl, Routine r, const std::string& combo) {
    BenchRecord probe;
    probe.routine = r;
    probe.impl = impl;
    probe.param_combo = combo;
    return ledger.find_bench(probe.key()) != nullptr;
  };
  auto record = [&](const BenchSample& s, const std::string& impl) {
    BenchRecord b;
    b.routine = s.routine;
    b.param_combo = s.param_combo;
    b.impl = impl;
    b.ok = s.ok;
    b.seconds = s.seconds;
    b.metric_value = s.metric_value;
    b.metric = s.metric;
    b.detail = s.detail;
    writer.append(b);
    log << fmt::format("bench  {} {} [{}]: {}\n", impl, name_of(s.routine),
                       s.param_combo.empty() ? "-" : s.param_combo,
                       s.ok ? format_metric(s.metric_value) : "failed: " + s.detail);
  };

  const std::set<std::string> models(cfg.models.begin(), cfg.models.end());
  const std::set<PromptMode> modes(cfg.modes.begin(), cfg.modes.end());
  for (Routine r : cfg.routines) {
    const auto combos = bench_cases(r, cfg.bench);
    SandboxTimer ref_timer(handle_for(reference_library_path(), r),
                           out.work() / ("bench-ref-" + std::string(name_of(r))));
    for (const TestCase& tc : combos) {
      if (have(std::string(kRefImpl), r, tc.param_combo())) continue;
      record(run_bench(ref_timer, std::string(kRefImpl), tc, cfg.bench), std::string(kRefImpl));
    }
    for (const CandidateRecord& c : ledger.candidates) {
      if (c.routine != r || !models.count(c.model) || !modes.count(c.mode)) continue;
      std::vector<TestCase> todo;
      for (const TestCase& tc : combos) {
        const auto pass = c.combo_pass.find(tc.param_combo());
        if (pass != c.combo_pass.end() && pass->second && !have(c.key(), r, tc.param_combo())) {
          todo.push_back(tc);
        }
      }
      if (todo.empty()) continue;
      const fs::path scratch = make_scratch(out.work(), "bench-" + dir_name(c.key()));
      const auto stored = load_stored(out.root / c.source_file);
      const CompileResult built =
          stored ? compile_candidate(stored->source, r, cfg.build, scratch) : CompileResult{};
      for (const TestCase& tc : todo) {
        if (!stored || !built.ok()) {
          BenchSample failed;
          failed.routine = r;
          failed.param_combo = tc.param_combo();
          failed.metric = metric_kind(r);
          failed.detail = stored ? "rebuild failed" : "candidate source missing";
          record(failed, c.key());
          continue;
        }
        SandboxTimer timer(built.handle, scratch / "timing");
        record(run_bench(timer, c.key(), tc, cfg.bench), c.key());
      }
      std::error_code ec;
      fs::remove_all(scratch, ec);
    }
  }
  return kExitOk;
}

std::string_view extension_of(ReportFormat f) {
  switch (f) {
    case ReportFormat::Text: return "txt";
    case ReportFormat::Markdown: return "md";
    case ReportFormat::Csv: return "csv";
  }
  return "txt";
}

int cmd_report(const fs::path& ledger_path, const fs::path& reports_dir,
               const std::vector<ReportFormat>& formats, PerfAggregate aggregate,
               std::ostream& log) {
  const Ledger ledger = load_ledger(ledger_path);
  if (ledger.candidates.empty()) {
    log << "error: ledger " << ledger_path.string() << " has no candidate records\n";
    return kExitFailure;
  }
  fs::create_directories(reports_dir);
  auto emit = [&](const std::string& stem, const auto& table) {
    for (ReportFormat f : formats) {
      const fs::path p = reports_dir / (stem + "." + std::string(extension_of(f)));
      std::ofstream os(p, std::ios::binary | std::ios::trunc);
      os << render(table, f);
      if (!os) throw std::runtime_error("cannot write " + p.string());
      log << "report " << p.string() << '\n';
    }
  };
  try {
    emit("pass", build_pass_table(ledger));
    if (!ledger.bench.empty()) emit("perf", build_perf_table(ledger, aggregate));
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& log) {
  const OutputLayout out{cfg.output_dir};
  fs::create_directories(out.root);
  if (int rc = cmd_gen(cfg, log); rc != kExitOk) return rc;
  const int verified = cmd_verify(cfg, log);
  if (cfg.bench_enabled) cmd_bench(cfg, log);
  const int reported = cmd_report(out.ledger(), out.reports(), cfg.formats, cfg.aggregate, log);
  return verified != kExitOk ? verified : reported;
}

int cmd_prompt(Routine r, PromptMode mode, const std::optional<fs::path>& fortran,
               std::ostream& out) {
  std::optional<std::string> attachment;
  if (fortran) {
    if (!fs::exists(*fortran)) throw ConfigError("missing Fortran source " + fortran->string());
    attachment = slurp(*fortran);
  }
  try {
    out << build_prompt(r, mode, attachment).text << '\n';
  } catch (const PromptError& e) {
    throw ConfigError(e.what());
  }
  return kExitOk;
}

int cmd_oracle_selftest(const SelftestOptions& opts, std::ostream& out) {
  const SelftestReport rep = run_selftest(opts);
  out << render(rep);
  std::size_t total = 0;
  for (const auto& r : rep.routines) total += r.cases;
  out << fmt::format("{} cases, {}\n", total, rep.ok() ? "all passed" : "FAILED");
  return rep.ok() ? kExitOk : kExitFailure;
}

}  // namespace blasgen
