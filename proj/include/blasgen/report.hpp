#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blasgen/ledger.hpp"

namespace blasgen {

/// A (mode, model) column, ordered by mode then model name.
struct ReportColumn {
  PromptMode mode = PromptMode::NameToCcode;
  std::string model;
  std::string label() const;
  friend auto operator<=>(const ReportColumn&, const ReportColumn&) = default;
};

struct PassCell {
  int passed = 0;
  int total = 0;
};

/// Candidates passing every case, per routine and column.
struct PassCountTable {
  std::vector<ReportColumn> columns;
  struct Row {
    int level = 1;
    Routine routine = Routine::dasum;
    std::vector<std::optional<PassCell>> cells;  // nullopt: nothing sampled
  };
  std::vector<Row> rows;  // routine order of the BLAS tables
};

PassCountTable build_pass_table(const Ledger& ledger);

enum class PerfAggregate { Best, Median };

/// Per-parameter performance; a cell aggregates candidates that passed the
/// combination and timed successfully, blank when there are none.
struct PerfTable {
  PerfAggregate aggregate = PerfAggregate::Best;
  std::vector<ReportColumn> columns;
  struct Row {
    Routine routine = Routine::dasum;
    std::string param_combo;
    MetricKind metric = MetricKind::BytesPerSec;
    double ref = 0.0;
    std::vector<std::optional<double>> cells;
  };
  std::vector<Row> rows;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ReportError when a row has candidate timings but no reference.
PerfTable build_perf_table(const Ledger& ledger, PerfAggregate aggregate = PerfAggregate::Best);

enum class ReportFormat { Text, Markdown, Csv };

std::string render(const PassCountTable& t, ReportFormat f);
std::string render(const PerfTable& t, ReportFormat f);

/// "68.0 (11.3x)", or "" for a blank cell.
std::string perf_cell_text(std::optional<double> value, double ref);

}  // namespace blasgen
