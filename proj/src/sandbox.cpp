#include "blasgen/sandbox.hpp"

#include <stdlib.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "blasgen/casefile.hpp"
#include "blasgen/process.hpp"

namespace fs = std::filesystem;

namespace blasgen {

namespace {

constexpr int kExitLoad = 4;
constexpr int kExitSymbol = 5;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + p.string());
}

std::vector<std::string> xerbla_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("XERBLA:", 0) == 0) out.push_back(line);
  }
  return out;
}

fs::path case_base(const fs::path& dir, std::size_t i) { return dir / ("case_" + std::to_string(i)); }

}  // namespace

std::string support_source() {
  return "#include <stdio.h>\n"
         "\n"
         "__attribute__((weak)) void xerbla(const char *srname, const int info) {\n"
         "  fprintf(stderr, \"XERBLA:%s:%d\\n\", srname ? srname : \"\", info);\n"
         "  fflush(stderr);\n"
         "}\n";
}

std::vector<std::string> macro_flags(const std::string& source) {
  std::vector<std::string> flags;
  for (const auto& [name, op] : {std::pair{"MIN", "<"}, std::pair{"MAX", ">"}}) {
    const std::regex use(std::string("\\b") + name + "\\s*\\(");
    const std::regex def(std::string("#\\s*define\\s+") + name + "\\b");
    if (std::regex_search(source, use) && !std::regex_search(source, def)) {
      flags.push_back(std::string("-D") + name + "(a,b)=((a)" + op + "(b)?(a):(b))");
    }
  }
  return flags;
}

fs::path runner_path() {
  if (const char* env = std::getenv("BLASGEN_EXEC"); env && *env) return env;
#ifdef BLASGEN_EXEC_PATH
  return BLASGEN_EXEC_PATH;
#else
  return "blasgen-exec";
#endif
}

fs::path reference_library_path() {
  if (const char* env = std::getenv("BLASGEN_REFABI"); env && *env) return env;
#ifdef BLASGEN_REFABI_LIB
  return BLASGEN_REFABI_LIB;
#else
  return "libblasgen_refabi.so";
#endif
}

fs::path make_scratch(const fs::path& root, const std::string& stem) {
  fs::create_directories(root);
  std::string tmpl = (root / (stem + "-XXXXXX")).string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed under " + root.string());
  return tmpl;
}

KernelHandle handle_for(const fs::path& library, Routine routine, abi::IntWidth width) {
  return KernelHandle{fs::absolute(library), abi::entry_symbol(routine), routine, width};
}

CompileResult compile_candidate(const std::string& source, Routine routine,
                                const BuildRecipe& recipe, const fs::path& scratch) {
  CompileResult r;
  fs::create_directories(scratch);
  const fs::path src = fs::absolute(scratch / "candidate.c");
  const fs::path support = fs::absolute(scratch / "support.c");
  const fs::path lib = fs::absolute(scratch / "lib.so");
  spit(src, source);
  spit(support, support_source());

  std::vector<std::string> argv{recipe.compiler};
  if (!recipe.arch_flag.empty()) argv.push_back(recipe.arch_flag);
  argv.insert(argv.end(), recipe.opt_flags.begin(), recipe.opt_flags.end());
  argv.insert(argv.end(), recipe.extra_flags.begin(), recipe.extra_flags.end());
  argv.insert(argv.end(), {"-fPIC", "-shared"});
  for (const std::string& f : macro_flags(source)) argv.push_back(f);
  argv.insert(argv.end(), {src.string(), support.string(), "-o", lib.string()});
  argv.insert(argv.end(), recipe.extra_libs.begin(), recipe.extra_libs.end());

  const ProcessResult cc = run_capture(argv, r.diagnostics, recipe.timeout);
  if (!cc.started || cc.timed_out || cc.signal != 0 || cc.exit_code != 0) {
    r.kind = VerdictKind::CompileError;
    if (!cc.error.empty()) r.diagnostics += cc.error;
    if (cc.timed_out) r.diagnostics += "\ncompiler timed out";
    return r;
  }

  std::string probe_log;
  const ProcessResult probe = run_capture(
      {runner_path().string(), "probe", lib.string(), std::string(name_of(routine))}, probe_log,
      std::chrono::seconds(30));
  r.handle = handle_for(lib, routine);
  if (!probe.started || probe.exit_code != 0) {
    r.kind = VerdictKind::LinkError;
    r.diagnostics += probe_log;
    if (!probe.error.empty()) r.diagnostics += probe.error;
    if (probe.exit_code == kExitLoad || probe.exit_code == kExitSymbol) return r;
    if (probe.signal) r.diagnostics += "\nlibrary crashed while loading";
    return r;
  }
  return r;
}

SandboxInvoker::SandboxInvoker(KernelHandle handle, fs::path scratch, SandboxOptions opts)
    : handle_(std::move(handle)), scratch_(std::move(scratch)), opts_(opts) {}

void SandboxInvoker::run_range(const std::vector<TestCase>& cases,
                               const std::vector<Problem>& inputs, std::size_t first,
                               std::size_t last, std::vector<CaseOutcome>& out) {
  const fs::path dir = fs::absolute(scratch_);
  std::size_t pos = first;
  while (pos < last) {
    std::optional<std::size_t> started;
    std::vector<std::size_t> done;
    SpawnOptions so;
    so.argv = {runner_path().string(), "run"};
    if (handle_.int_width == abi::IntWidth::I64) so.argv.push_back("--int64");
    so.argv.insert(so.argv.end(), {handle_.library_path.string(), dir.string(),
                                   std::to_string(pos), std::to_string(last - pos)});
    so.stderr_path = (dir / ("runner_" + std::to_string(pos) + ".log")).string();
    so.timeout = opts_.case_budget;
    if (opts_.threads > 0) so.env.emplace_back("OMP_NUM_THREADS", std::to_string(opts_.threads));
    so.on_progress = [&](std::string_view line) {
      if (line.size() < 3) return;
      std::size_t idx = 0;
      try {
        idx = std::stoul(std::string(line.substr(2)));
      } catch (const std::exception&) {
        return;
      }
      if (idx < pos || idx >= last) return;
      if (line[0] == 'S') started = idx;
      if (line[0] == 'D') {
        done.push_back(idx);
        started.reset();
      }
    };
    const ProcessResult pr = run_process(so);

    for (std::size_t i : done) {
      CaseOutcome& o = out[i];
      const fs::path base = case_base(dir, i);
      o.output = inputs[i];
      try {
        casefile::decode_output(casefile::read_file(base.string() + ".out"), cases[i], o.output);
        o.status = CaseOutcome::Status::Ok;
      } catch (const std::exception& e) {
        o.status = CaseOutcome::Status::Error;
        o.detail = e.what();
      }
      o.marker = slurp(base.string() + ".stdout").find(kMarker) != std::string::npos;
      o.xerbla = xerbla_lines(slurp(base.string() + ".stderr"));
    }
    const std::size_t next = done.empty() ? pos : done.back() + 1;
    if (!pr.started) {
      out[next].status = CaseOutcome::Status::Error;
      out[next].detail = pr.error;
      return;
    }
    if (pr.exit_code == 0 && !pr.timed_out && pr.signal == 0) return;

    const std::size_t culprit = started.value_or(next);
    CaseOutcome& bad = out[culprit];
    bad.signal = pr.signal;
    bad.exit_code = pr.exit_code;
    if (pr.timed_out) {
      bad.status = CaseOutcome::Status::Timeout;
      return;
    }
    if (pr.signal != 0 || started) {
      // Killed by a signal, or the candidate called exit() mid-case.
      bad.status = CaseOutcome::Status::Crash;
      if (pr.signal == 0) bad.detail = "candidate exited with code " + std::to_string(pr.exit_code);
      pos = culprit + 1;
      continue;
    }
    bad.status = CaseOutcome::Status::Error;
    bad.detail = "runner exited with code " + std::to_string(pr.exit_code) + ": " +
                 slurp(so.stderr_path);
    return;
  }
}

std::vector<CaseOutcome> SandboxInvoker::invoke(const std::vector<TestCase>& cases,
                                                const std::vector<Problem>& inputs) {
  fs::create_directories(scratch_);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    casefile::write_file(case_base(scratch_, i).string() + ".in",
                         casefile::encode_input(cases[i], inputs[i]));
  }
  std::vector<CaseOutcome> out(cases.size());
  const std::size_t workers =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(1, opts_.parallel)), 1,
                              std::max<std::size_t>(1, cases.size()));
  const std::size_t chunk = (cases.size() + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(cases.size(), lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] { run_range(cases, inputs, lo, hi, out); });
  }
  for (std::thread& t : pool) t.join();

  // A serial run stops at the first timeout; make parallel runs agree.
  auto timeout = std::find_if(out.begin(), out.end(), [](const CaseOutcome& o) {
    return o.status == CaseOutcome::Status::Timeout;
  });
  if (timeout != out.end()) {
    for (auto it = timeout + 1; it != out.end(); ++it) *it = CaseOutcome{};
  }
  return out;
}

}  // namespace blasgen
