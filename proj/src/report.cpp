#include "blasgen/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

namespace blasgen {

std::string ReportColumn::label() const {
  return std::string(to_string(mode)) + "/" + model;
}

namespace {

std::vector<ReportColumn> columns_of(const Ledger& ledger) {
  std::set<ReportColumn> cols;
  for (const auto& c : ledger.candidates) cols.insert({c.mode, c.model});
  return {cols.begin(), cols.end()};
}

std::size_t column_index(const std::vector<ReportColumn>& cols, PromptMode mode,
                         const std::string& model) {
  const ReportColumn key{mode, model};
  return static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), key) - cols.begin());
}

std::string_view unit_of(MetricKind m) { return m == MetricKind::FlopsPerSec ? "GFlops/s" : "GB/s"; }

std::string raw(double v) { return fmt::format("{:.17g}", v); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Aligned plain text: first `left` columns left-aligned, the rest right.
std::string aligned(const std::vector<std::vector<std::string>>& grid, std::size_t left) {
  std::vector<std::size_t> width;
  for (const auto& row : grid) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      const std::size_t pad = width[i] - row[i].size();
      if (i < left) {
        line += row[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string markdown(const std::vector<std::vector<std::string>>& grid, std::size_t left) {
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out += "|";
    for (const auto& cell : grid[r]) out += " " + cell + " |";
    out += '\n';
    if (r == 0) {
      out += "|";
      for (std::size_t i = 0; i < grid[0].size(); ++i) out += i < left ? "---|" : "---:|";
      out += '\n';
    }
  }
  return out;
}

}  // namespace

PassCountTable build_pass_table(const Ledger& ledger) {
  PassCountTable t;
  t.columns = columns_of(ledger);
  std::map<Routine, PassCountTable::Row> rows;
  for (const auto& c : ledger.candidates) {
    auto [it, fresh] = rows.try_emplace(c.routine);
    if (fresh) {
      it->second.routine = c.routine;
      it->second.level = spec_of(c.routine).level;
      it->second.cells.assign(t.columns.size(), std::nullopt);
    }
    auto& cell = it->second.cells[column_index(t.columns, c.mode, c.model)];
    if (!cell) cell = PassCell{};
    ++cell->total;
    if (c.verdict == VerdictKind::Pass) ++cell->passed;
  }
  for (auto& [r, row] : rows) t.rows.push_back(std::move(row));
  return t;
}

PerfTable build_perf_table(const Ledger& ledger, PerfAggregate aggregate) {
  PerfTable t;
  t.aggregate = aggregate;
  t.columns = columns_of(ledger);

  std::map<std::string, const CandidateRecord*> by_key;
  for (const auto& c : ledger.candidates) by_key.emplace(c.key(), &c);

  // Row order: routine order, then the enumeration order of combinations.
  using RowKey = std::pair<Routine, std::size_t>;
  std::map<RowKey, PerfTable::Row> rows;
  std::map<RowKey, std::vector<std::vector<double>>> values;
  auto row_for = [&](Routine r, const std::string& combo, MetricKind metric) -> RowKey {
    const auto combos = bench_cases(r, BenchConfig{});
    std::size_t pos = combos.size();
    for (std::size_t i = 0; i < combos.size(); ++i) {
      if (combos[i].param_combo() == combo) pos = i;
    }
    const RowKey key{r, pos};
    auto [it, fresh] = rows.try_emplace(key);
    if (fresh) {
      it->second.routine = r;
      it->second.param_combo = combo;
      it->second.metric = metric;
      it->second.ref = -1.0;
      values[key].assign(t.columns.size(), {});
    }
    return key;
  };

  for (const auto& b : ledger.bench) {
    if (b.impl == kRefImpl) {
      if (!b.ok) continue;
      rows[row_for(b.routine, b.param_combo, b.metric)].ref = b.metric_value;
      continue;
    }
    const auto c = by_key.find(b.impl);
    if (c == by_key.end()) continue;
    const RowKey key = row_for(b.routine, b.param_combo, b.metric);
    const auto pass = c->second->combo_pass.find(b.param_combo);
    if (!b.ok || pass == c->second->combo_pass.end() || !pass->second) continue;
    values[key][column_index(t.columns, c->second->mode, c->second->model)].push_back(
        b.metric_value);
  }

  for (auto& [key, row] : rows) {
    if (row.ref < 0.0) {
      throw ReportError(fmt::format("no reference timing for {} ({})", name_of(row.routine),
                                    row.param_combo.empty() ? "-" : row.param_combo));
    }
    row.cells.assign(t.columns.size(), std::nullopt);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      const auto& v = values[key][i];
      if (v.empty()) continue;
      row.cells[i] = aggregate == PerfAggregate::Best ? *std::max_element(v.begin(), v.end())
                                                      : median(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string perf_cell_text(std::optional<double> value, double ref) {
  if (!value) return "";
  return format_metric(*value) + " " + format_ratio(*value, ref);
}

std::string render(const PassCountTable& t, ReportFormat f) {
  if (f == ReportFormat::Csv) {
    std::string out = "level,routine,mode,model,passed,total\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (!row.cells[i]) continue;
        out += fmt::format("{},{},{},{},{},{}\n", row.level, name_of(row.routine),
                           to_string(t.columns[i].mode), csv_field(t.columns[i].model),
                           row.cells[i]->passed, row.cells[i]->total);
      }
    }
    return out;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"level", "routine"};
  for (const auto& c : t.columns) head.push_back(c.label());
  grid.push_back(head);
  for (const auto& row : t.rows) {
    std::vector<std::string> line{std::to_string(row.level), std::string(name_of(row.routine))};
    for (const auto& cell : row.cells) {
      line.push_back(cell ? fmt::format("{}/{}", cell->passed, cell->total) : "");
    }
    grid.push_back(line);
  }
  const std::string title = "Candidates passing every test case (passed/sampled)";
  if (f == ReportFormat::Markdown) return "### " + title + "\n\n" + markdown(grid, 2);
  return title + "\n\n" + aligned(grid, 2);
}

std::string render(const PerfTable& t, ReportFormat f) {
  const std::string agg = t.aggregate == PerfAggregate::Best ? "best" : "median";
  if (f == ReportFormat::Csv) {
    std::string out = "routine,param_combo,unit,aggregate,mode,model,value,ref,ratio\n";
    for (const auto& row : t.rows) {
      const std::string unit(unit_of(row.metric));
      out += fmt::format("{},{},{},{},,ref,{},{},1\n", name_of(row.routine),
                         csv_field(row.param_combo), unit, agg, raw(row.ref), raw(row.ref));
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const auto& v = row.cells[i];
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n", name_of(row.routine),
                           csv_field(row.param_combo), unit, agg, to_string(t.columns[i].mode),
                           csv_field(t.columns[i].model), v ? raw(*v) : "", raw(row.ref),
                           v ? raw(*v / row.ref) : "");
      }
    }
    return out;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"routine", "parameters", "unit", "Ref"};
  for (const auto& c : t.columns) head.push_back(c.label());
  grid.push_back(head);
  for (const auto& row : t.rows) {
    std::vector<std::string> line{std::string(name_of(row.routine)),
                                  row.param_combo.empty() ? "-" : row.param_combo,
                                  std::string(unit_of(row.metric)), format_metric(row.ref)};
    for (const auto& v : row.cells) line.push_back(perf_cell_text(v, row.ref));
    grid.push_back(line);
  }
  const std::string title = "Performance (" + agg +
                            " of passing candidates; ratio to Ref in parentheses; blank: every "
                            "candidate failed)";
  if (f == ReportFormat::Markdown) return "### " + title + "\n\n" + markdown(grid, 3);
  return title + "\n\n" + aligned(grid, 3);
}

}  // namespace blasgen
