#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "blasgen/llm_client.hpp"
#include "blasgen/report.hpp"
#include "blasgen/sandbox.hpp"
#include "paths.hpp"

using namespace blasgen;
namespace fs = std::filesystem;

namespace {

CandidateRecord cand(Routine r, PromptMode mode, const std::string& model, int idx, VerdictKind v,
                     std::map<std::string, bool> combos = {}) {
  CandidateRecord c;
  c.routine = r;
  c.mode = mode;
  c.model = model;
  c.sample_index = idx;
  c.verdict = v;
  c.combo_pass = std::move(combos);
  return c;
}

BenchRecord timing(Routine r, const std::string& combo, const std::string& impl, double value,
                   bool ok = true) {
  BenchRecord b;
  b.routine = r;
  b.param_combo = combo;
  b.impl = impl;
  b.ok = ok;
  b.metric = metric_kind(r);
  b.metric_value = value;
  b.seconds = 1.0;
  return b;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("pass table counts") {
  Ledger l;
  for (int i = 0; i < 10; ++i) {
    l.candidates.push_back(cand(Routine::dtrsm, PromptMode::NameToCcode, "gpt-4.1", i,
                                VerdictKind::NumericalError));
    l.candidates.push_back(cand(Routine::daxpy, PromptMode::NameToCcode, "gpt-4.1", i,
                                i < 7 ? VerdictKind::Pass : VerdictKind::Crash));
  }
  const PassCountTable t = build_pass_table(l);
  REQUIRE(t.columns.size() == 1);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].routine == Routine::daxpy);  // table order, not ledger order
  CHECK(t.rows[0].cells[0]->passed == 7);
  CHECK(t.rows[0].cells[0]->total == 10);
  CHECK(t.rows[1].cells[0]->passed == 0);
  CHECK(render(t, ReportFormat::Text).find("7/10") != std::string::npos);
  CHECK(build_pass_table(Ledger{}).rows.empty());
  CHECK(build_pass_table(Ledger{}).columns.empty());
}

TEST_CASE("columns sort by mode then model") {
  Ledger l;
  l.candidates.push_back(cand(Routine::ddot, PromptMode::FrtcodeToOptCcode, "gpt-4.1", 0, VerdictKind::Pass));
  l.candidates.push_back(cand(Routine::ddot, PromptMode::NameToCcode, "o4-mini", 0, VerdictKind::Pass));
  l.candidates.push_back(cand(Routine::ddot, PromptMode::NameToCcode, "gpt-4.1", 0, VerdictKind::Pass));
  const auto t = build_pass_table(l);
  REQUIRE(t.columns.size() == 3);
  CHECK(t.columns[0].label() == "NameToCcode/gpt-4.1");
  CHECK(t.columns[1].label() == "NameToCcode/o4-mini");
  CHECK(t.columns[2].label() == "FrtcodeToOptCcode/gpt-4.1");
}

TEST_CASE("perf table cells") {
  Ledger l;
  const std::string u = "uplo=U, trans=N, diag=N";
  const std::string lo = "uplo=L, trans=N, diag=N";
  l.candidates.push_back(cand(Routine::dasum, PromptMode::NameToCcode, "m", 0, VerdictKind::Pass, {{"", true}}));
  l.candidates.push_back(cand(Routine::dasum, PromptMode::NameToCcode, "m", 1, VerdictKind::Pass, {{"", true}}));
  l.candidates.push_back(cand(Routine::dtrmv, PromptMode::NameToCcode, "m", 0,
                              VerdictKind::NumericalError, {{u, false}, {lo, true}}));
  l.bench.push_back(timing(Routine::dasum, "", "ref", 6.0));
  l.bench.push_back(timing(Routine::dasum, "", "m/NameToCcode/dasum/0", 50.0));
  l.bench.push_back(timing(Routine::dasum, "", "m/NameToCcode/dasum/1", 68.0));
  l.bench.push_back(timing(Routine::dtrmv, u, "ref", 1.0));
  l.bench.push_back(timing(Routine::dtrmv, lo, "ref", 2.0));
  l.bench.push_back(timing(Routine::dtrmv, u, "m/NameToCcode/dtrmv/0", 9.0));  // combo failed
  l.bench.push_back(timing(Routine::dtrmv, lo, "m/NameToCcode/dtrmv/0", 4.0));

  const PerfTable t = build_perf_table(l);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].routine == Routine::dasum);
  CHECK(t.rows[0].cells[0] == 68.0);
  CHECK(perf_cell_text(t.rows[0].cells[0], t.rows[0].ref) == "68.0 (11.3x)");
  // Enumeration order puts uplo=L first.
  CHECK(t.rows[1].param_combo == lo);
  CHECK(perf_cell_text(t.rows[1].cells[0], t.rows[1].ref) == "4.0 (2.0x)");
  CHECK_FALSE(t.rows[2].cells[0]);
  CHECK(perf_cell_text(t.rows[2].cells[0], t.rows[2].ref).empty());
  CHECK(build_perf_table(l, PerfAggregate::Median).rows[0].cells[0] == 59.0);
  CHECK(perf_cell_text(10.0, 10.0) == "10.0 (1.0x)");

  const std::string text = render(t, ReportFormat::Text);
  CHECK(text.find("68.0 (11.3x)") != std::string::npos);
  CHECK(text.find("best of passing candidates") != std::string::npos);

  l.bench.push_back(timing(Routine::ddot, "", "m/NameToCcode/ddot/0", 1.0));
  l.candidates.push_back(cand(Routine::ddot, PromptMode::NameToCcode, "m", 0, VerdictKind::Pass, {{"", true}}));
  CHECK_THROWS_AS(build_perf_table(l), ReportError);
}

TEST_CASE("csv keeps raw values") {
  Ledger l;
  l.candidates.push_back(cand(Routine::dasum, PromptMode::NameToCcode, "m", 0, VerdictKind::Pass, {{"", true}}));
  l.bench.push_back(timing(Routine::dasum, "", "ref", 5.96));
  l.bench.push_back(timing(Routine::dasum, "", "m/NameToCcode/dasum/0", 68.04));
  const std::string csv = render(build_perf_table(l), ReportFormat::Csv);
  std::istringstream in(csv);
  std::string header, ref_line, line;
  std::getline(in, header);
  std::getline(in, ref_line);
  std::getline(in, line);
  CHECK(header == "routine,param_combo,unit,aggregate,mode,model,value,ref,ratio");
  const auto f = split(line);
  REQUIRE(f.size() == 9);
  CHECK(std::stod(f[6]) == 68.04);
  CHECK(std::stod(f[7]) == 5.96);
  CHECK(std::stod(f[8]) == 68.04 / 5.96);
  CHECK(render(build_perf_table(l), ReportFormat::Text).find("68.0 (11.4x)") != std::string::npos);
  const std::string md = render(build_perf_table(l), ReportFormat::Markdown);
  CHECK(md.find("| dasum | - | GB/s | 6.0 | 68.0 (11.4x) |") != std::string::npos);
}

TEST_CASE("ledger round trip and resume safety") {
  const fs::path dir = make_scratch(testing::scratch_root(), "ledger");
  const fs::path path = dir / "ledger.jsonl";
  CandidateRecord c = cand(Routine::dgemm, PromptMode::NameToOptCcode, "o4-mini", 3,
                           VerdictKind::NumericalError, {{"transa=N, transb=T", false}});
  c.failing_case = "dgemm(transa=N, transb=T; m=16, n=16, k=16)";
  c.max_rel_err = INFINITY;
  c.tokens_in = 120;
  c.tokens_out = 900;
  c.cost_usd = cost_usd(o4mini_profile(), 120, 900);
  {
    LedgerWriter w(path);
    w.append(c);
    w.append(timing(Routine::dgemm, "transa=N, transb=N", "ref", 3.25));
    w.append(c);  // duplicate key
  }
  // Simulate a kill halfway through a write.
  std::ofstream(path, std::ios::app) << "{\"type\":\"candidate\",\"rout";
  Ledger l = load_ledger(path);
  REQUIRE(l.candidates.size() == 1);
  REQUIRE(l.bench.size() == 1);
  const auto& back = l.candidates[0];
  CHECK(back.key() == "o4-mini/NameToOptCcode/dgemm/3");
  CHECK(back.verdict == VerdictKind::NumericalError);
  CHECK(back.failing_case == c.failing_case);
  CHECK(std::isinf(*back.max_rel_err));
  CHECK(back.combo_pass == c.combo_pass);
  CHECK(back.cost_usd == c.cost_usd);
  CHECK(l.bench[0].metric_value == 3.25);
  CHECK(l.bench[0].metric == MetricKind::FlopsPerSec);
  {
    LedgerWriter w(path);
    CandidateRecord next = c;
    next.sample_index = 4;
    w.append(next);
  }
  l = load_ledger(path);
  CHECK(l.candidates.size() == 2);
  CHECK(l.find_candidate("o4-mini/NameToOptCcode/dgemm/4"));
  CHECK_FALSE(load_ledger(dir / "missing.jsonl").candidates.size());
}
