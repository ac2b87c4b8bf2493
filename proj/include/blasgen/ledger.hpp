#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blasgen/bench.hpp"
#include "blasgen/promptkit.hpp"
#include "blasgen/verifier.hpp"

namespace blasgen {

/// One verified candidate.
struct CandidateRecord {
  Routine routine = Routine::dasum;
  PromptMode mode = PromptMode::NameToCcode;
  std::string model;
  int sample_index = 0;
  VerdictKind verdict = VerdictKind::Pass;
  std::string failing_case;  // TestCase::id(), empty on pass
  std::optional<double> max_rel_err;
  std::string detail;
  std::map<std::string, bool> combo_pass;
  std::size_t argcheck_mismatches = 0;
  std::int64_t tokens_in = 0;
  std::int64_t tokens_out = 0;
  std::int64_t reasoning_tokens = 0;
  double cost_usd = 0.0;
  bool salvaged = false;
  std::string source_file;  // relative to the output directory

  std::string key() const;
};

/// One timing of one implementation on one parameter combination. The
/// reference has impl "ref"; candidates use CandidateRecord::key().
struct BenchRecord {
  Routine routine = Routine::dasum;
  std::string param_combo;
  std::string impl;
  bool ok = false;
  double seconds = 0.0;
  double metric_value = 0.0;
  MetricKind metric = MetricKind::BytesPerSec;
  std::string detail;

  std::string key() const;  // impl + routine + combo
};

inline constexpr std::string_view kRefImpl = "ref";

std::string candidate_key(const std::string& model, PromptMode mode, Routine routine,
                          int sample_index);

struct Ledger {
  std::vector<CandidateRecord> candidates;
  std::vector<BenchRecord> bench;

  const CandidateRecord* find_candidate(const std::string& key) const;
  const BenchRecord* find_bench(const std::string& key) const;
};

std::string to_json_line(const CandidateRecord& r);
std::string to_json_line(const BenchRecord& r);

/// Reads a JSON-lines ledger. A torn final line (interrupted write) is
/// ignored; repeated keys keep the first record.
Ledger load_ledger(const std::filesystem::path& path);

/// Appends one line and flushes.
class LedgerWriter {
 public:
  explicit LedgerWriter(std::filesystem::path path);
  void append(const CandidateRecord& r);
  void append(const BenchRecord& r);

 private:
  void write(const std::string& line);
  std::filesystem::path path_;
};

}  // namespace blasgen
