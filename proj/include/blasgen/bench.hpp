#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blasgen/sandbox.hpp"
#include "blasgen/testgen.hpp"

namespace blasgen {

struct BenchConfig {
  index_t level1_n = 16777216;
  index_t level2_mn = 8192;
  index_t level3_mnk = 2048;
  int reps = 5;
  int warmups = 1;
  int threads = 0;  // 0: physical core count
  std::chrono::milliseconds budget{std::chrono::minutes(10)};  // per timed call
};

/// Physical cores (distinct core/package pairs), falling back to logical CPUs.
int physical_cores();

enum class MetricKind { BytesPerSec, FlopsPerSec };

MetricKind metric_kind(Routine r);

/// Bytes moved under a touch-once streaming model. Level 3 is an error.
std::uint64_t traffic_model(const TestCase& tc);
/// Floating-point operation count. Levels 1 and 2 are an error.
std::uint64_t flop_model(const TestCase& tc);

/// model / seconds / 1e9: GB/s for levels 1-2, GFlops/s for level 3.
double metric_value(const TestCase& tc, double seconds);

/// The benchmark problem for one parameter combination: config sizes,
/// unit strides.
TestCase bench_case(Routine r, const BoundParams& params, const BenchConfig& cfg);

/// One representative case per parameter combination, in enumeration order.
std::vector<TestCase> bench_cases(Routine r, const BenchConfig& cfg);

struct BenchSample {
  Routine routine = Routine::dasum;
  std::string param_combo;
  std::string impl_id;
  bool ok = false;
  double seconds = 0.0;
  double metric_value = 0.0;
  MetricKind metric = MetricKind::BytesPerSec;
  std::string detail;
};

/// Source of timings for one case: `reps` seconds values, or nothing when
/// the run failed (detail explains).
class BenchTimer {
 public:
  virtual ~BenchTimer() = default;
  virtual std::optional<std::vector<double>> time(const TestCase& tc, const BenchConfig& cfg,
                                                  std::string& detail) = 0;
};

/// Reports the same duration for every repetition.
class FixedTimer : public BenchTimer {
 public:
  explicit FixedTimer(double seconds) : seconds_(seconds) {}
  std::optional<std::vector<double>> time(const TestCase&, const BenchConfig& cfg,
                                          std::string&) override {
    return std::vector<double>(static_cast<std::size_t>(cfg.reps), seconds_);
  }

 private:
  double seconds_;
};

/// Times a compiled kernel in a child process; the child generates the data
/// from the case seed.
class SandboxTimer : public BenchTimer {
 public:
  SandboxTimer(KernelHandle handle, std::filesystem::path scratch)
      : handle_(std::move(handle)), scratch_(std::move(scratch)) {}
  std::optional<std::vector<double>> time(const TestCase& tc, const BenchConfig& cfg,
                                          std::string& detail) override;

 private:
  KernelHandle handle_;
  std::filesystem::path scratch_;
};

double median(std::vector<double> v);

BenchSample run_bench(BenchTimer& timer, const std::string& impl_id, const TestCase& tc,
                      const BenchConfig& cfg);

/// Metric with one decimal, e.g. "68.0".
std::string format_metric(double v);
/// Ratio of unrounded values with one decimal, e.g. "(11.4x)".
std::string format_ratio(double value, double reference);

}  // namespace blasgen
