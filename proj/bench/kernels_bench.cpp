// Serial vs OpenMP: the oracle self-test sweep, and the corpus kernels that
// exist in both a plain and an OpenMP form (ok.c / ok_omp.c) next to the
// built-in reference. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>
#include <dlfcn.h>
#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "blasgen/abi.hpp"
#include "blasgen/bench.hpp"
#include "blasgen/dispatch.hpp"
#include "blasgen/sandbox.hpp"
#include "blasgen/selftest.hpp"

using namespace blasgen;
namespace fs = std::filesystem;

namespace {

void* load_kernel(Routine r, const std::string& file) {
  static std::map<std::string, void*> cache;
  const std::string key = std::string(name_of(r)) + "/" + file;
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::ifstream in(fs::path(BLASGEN_SOURCE_DIR) / "corpus" / name_of(r) / file);
  std::ostringstream src;
  src << in.rdbuf();
  BuildRecipe recipe;
  recipe.opt_flags = {"-O2"};
  const CompileResult built =
      compile_candidate(src.str(), r, recipe, make_scratch(fs::temp_directory_path(), "blasgen-bench"));
  void* fn = nullptr;
  if (built.ok()) {
    void* lib = dlopen(built.handle.library_path.c_str(), RTLD_NOW | RTLD_LOCAL);
    if (lib) fn = dlsym(lib, built.handle.entry_symbol.c_str());
  }
  return cache[key] = fn;
}

TestCase square(Routine r, index_t n) {
  TestCase tc;
  tc.routine = r;
  tc.m = dims_used(r).m ? n : 0;
  tc.n = n;
  tc.k = dims_used(r).k ? n : 0;
  tc.seed = case_seed(tc);
  return tc;
}

void set_rate(benchmark::State& state, const TestCase& tc) {
  const bool flops = metric_kind(tc.routine) == MetricKind::FlopsPerSec;
  const double work = static_cast<double>(flops ? flop_model(tc) : traffic_model(tc));
  state.counters[flops ? "GFlop" : "GB"] =
      benchmark::Counter(work / 1e9, benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Selftest(benchmark::State& state) {
  SelftestOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_selftest(opts).ok());
  state.SetLabel(opts.parallel ? "openmp" : "serial");
}
BENCHMARK(BM_Selftest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Reference(benchmark::State& state, Routine r) {
  const TestCase tc = square(r, state.range(0));
  const Problem in = init_problem(tc);
  Problem p = in;
  for (auto _ : state) {
    run_reference(tc, p);
    benchmark::ClobberMemory();
  }
  set_rate(state, tc);
}

void BM_Corpus(benchmark::State& state, Routine r, const char* file) {
  void* fn = load_kernel(r, file);
  if (!fn) {
    state.SkipWithError("candidate did not build");
    return;
  }
  const TestCase tc = square(r, state.range(0));
  const Problem in = init_problem(tc);
  Problem p = in;
  for (auto _ : state) {
    abi::call(fn, tc, p);
    benchmark::ClobberMemory();
  }
  set_rate(state, tc);
}

BENCHMARK_CAPTURE(BM_Reference, dgemm, Routine::dgemm)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, dgemm_serial, Routine::dgemm, "ok.c")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, dgemm_openmp, Routine::dgemm, "ok_omp.c")->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Reference, daxpy, Routine::daxpy)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_Corpus, daxpy_serial, Routine::daxpy, "ok.c")->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_Corpus, daxpy_openmp, Routine::daxpy, "ok_omp.c")->Arg(1 << 20);

}  // namespace

int main(int argc, char** argv) {
  // Kernels print their marker on stdout; keep the tables on stderr.
  std::fflush(stdout);
  const int devnull = open("/dev/null", O_WRONLY);
  if (devnull >= 0) dup2(devnull, STDOUT_FILENO);
  benchmark::Initialize(&argc, argv);
  benchmark::ConsoleReporter console;
  console.SetOutputStream(&std::cerr);
  console.SetErrorStream(&std::cerr);
  benchmark::RunSpecifiedBenchmarks(&console);
  benchmark::Shutdown();
  return 0;
}
