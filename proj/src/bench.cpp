#include "blasgen/bench.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include "blasgen/casefile.hpp"
#include "blasgen/process.hpp"

namespace fs = std::filesystem;

namespace blasgen {

int physical_cores() {
  std::set<std::pair<std::string, std::string>> cores;
  for (unsigned cpu = 0;; ++cpu) {
    const fs::path topo = fmt::format("/sys/devices/system/cpu/cpu{}/topology", cpu);
    if (!fs::exists(topo)) break;
    std::ifstream core(topo / "core_id");
    std::ifstream pkg(topo / "physical_package_id");
    std::string c, p;
    if (!(core >> c) || !(pkg >> p)) break;
    cores.emplace(p, c);
  }
  if (!cores.empty()) return static_cast<int>(cores.size());
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

MetricKind metric_kind(Routine r) {
  return spec_of(r).level == 3 ? MetricKind::FlopsPerSec : MetricKind::BytesPerSec;
}

std::uint64_t traffic_model(const TestCase& tc) {
  const auto m = static_cast<std::uint64_t>(tc.m);
  const auto n = static_cast<std::uint64_t>(tc.n);
  const std::uint64_t tri = n * n / 2;
  const bool notrans = tc.params.trans == Transpose::NoTrans;
  switch (tc.routine) {
    case Routine::dasum:
    case Routine::idamax:
    case Routine::dnrm2: return 8 * n;
    case Routine::ddot: return 16 * n;
    case Routine::daxpy: return 24 * n;
    case Routine::drot:
    case Routine::drotm: return 32 * n;
    case Routine::dgemv: return notrans ? 8 * (m * n + n + 2 * m) : 8 * (m * n + m + 2 * n);
    case Routine::dger: return 8 * (2 * m * n + m + n);
    case Routine::dsymv: return 8 * (tri + 3 * n);
    case Routine::dsyr: return 8 * (2 * tri + n);
    case Routine::dsyr2: return 8 * (2 * tri + 2 * n);
    case Routine::dtrmv:
    case Routine::dtrsv: return 8 * (tri + 2 * n);
    default: break;
  }
  throw std::invalid_argument(fmt::format("traffic_model: {} is measured in flops",
                                          name_of(tc.routine)));
}

std::uint64_t flop_model(const TestCase& tc) {
  const auto m = static_cast<std::uint64_t>(tc.m);
  const auto n = static_cast<std::uint64_t>(tc.n);
  const auto k = static_cast<std::uint64_t>(tc.k);
  const bool left = tc.params.side == Side::Left;
  switch (tc.routine) {
    case Routine::dgemm: return 2 * m * n * k;
    case Routine::dsymm: return left ? 2 * m * m * n : 2 * m * n * n;
    case Routine::dsyrk: return n * (n + 1) * k;
    case Routine::dsyr2k: return 2 * n * (n + 1) * k;
    case Routine::dtrmm:
    case Routine::dtrsm: return left ? n * m * m : m * n * n;
    default: break;
  }
  throw std::invalid_argument(fmt::format("flop_model: {} is measured in bytes",
                                          name_of(tc.routine)));
}

double metric_value(const TestCase& tc, double seconds) {
  const std::uint64_t work =
      metric_kind(tc.routine) == MetricKind::FlopsPerSec ? flop_model(tc) : traffic_model(tc);
  return static_cast<double>(work) / seconds / 1e9;
}

TestCase bench_case(Routine r, const BoundParams& params, const BenchConfig& cfg) {
  TestCase tc;
  tc.routine = r;
  tc.params = params;
  const DimUse use = dims_used(r);
  const int level = spec_of(r).level;
  const index_t size = level == 1 ? cfg.level1_n : level == 2 ? cfg.level2_mn : cfg.level3_mnk;
  tc.m = use.m ? size : 0;
  tc.n = use.n ? size : 0;
  tc.k = use.k ? size : 0;
  tc.incx = 1;
  tc.incy = 1;
  tc.seed = case_seed(tc);
  return tc;
}

std::vector<TestCase> bench_cases(Routine r, const BenchConfig& cfg) {
  std::vector<TestCase> out;
  std::set<std::string> seen;
  for (const TestCase& tc : enumerate_cases(spec_of(r))) {
    if (seen.insert(tc.param_combo()).second) out.push_back(bench_case(r, tc.params, cfg));
  }
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of nothing");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::optional<std::vector<double>> SandboxTimer::time(const TestCase& tc, const BenchConfig& cfg,
                                                      std::string& detail) {
  fs::create_directories(scratch_);
  const fs::path in = fs::absolute(scratch_ / "bench.in");
  const fs::path times = fs::absolute(scratch_ / "bench.times");
  fs::remove(times);
  casefile::write_file(in.string(), casefile::encode_header(tc));

  SpawnOptions so;
  so.argv = {runner_path().string(), "bench"};
  if (handle_.int_width == abi::IntWidth::I64) so.argv.push_back("--int64");
  so.argv.insert(so.argv.end(),
                 {handle_.library_path.string(), in.string(), times.string(),
                  std::to_string(cfg.warmups), std::to_string(cfg.reps)});
  so.stderr_path = (scratch_ / "bench.stderr").string();
  so.timeout = cfg.budget;
  const int threads = cfg.threads > 0 ? cfg.threads : physical_cores();
  so.env.emplace_back("OMP_NUM_THREADS", std::to_string(threads));
  so.on_progress = [](std::string_view) {};
  const ProcessResult pr = run_process(so);
  if (!pr.started) {
    detail = pr.error;
    return std::nullopt;
  }
  if (pr.timed_out) {
    detail = "timeout";
    return std::nullopt;
  }
  if (pr.signal != 0) {
    detail = fmt::format("crash (signal {})", pr.signal);
    return std::nullopt;
  }
  if (pr.exit_code != 0) {
    detail = fmt::format("runner exited with code {}", pr.exit_code);
    return std::nullopt;
  }
  std::vector<double> out;
  std::ifstream f(times);
  for (double s; f >> s;) out.push_back(s);
  if (out.size() != static_cast<std::size_t>(cfg.reps)) {
    detail = "incomplete timing output";
    return std::nullopt;
  }
  return out;
}

BenchSample run_bench(BenchTimer& timer, const std::string& impl_id, const TestCase& tc,
                      const BenchConfig& cfg) {
  BenchSample s;
  s.routine = tc.routine;
  s.param_combo = tc.param_combo();
  s.impl_id = impl_id;
  s.metric = metric_kind(tc.routine);
  const auto times = timer.time(tc, cfg, s.detail);
  if (!times || times->empty()) return s;
  s.seconds = median(*times);
  if (!(s.seconds > 0.0)) {
    s.detail = "non-positive timing";
    return s;
  }
  s.metric_value = metric_value(tc, s.seconds);
  s.ok = true;
  return s;
}

std::string format_metric(double v) { return fmt::format("{:.1f}", v); }

std::string format_ratio(double value, double reference) {
  return fmt::format("({:.1f}x)", value / reference);
}

}  // namespace blasgen
