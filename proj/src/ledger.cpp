#include "blasgen/ledger.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

using nlohmann::json;

namespace blasgen {

std::string candidate_key(const std::string& model, PromptMode mode, Routine routine,
                          int sample_index) {
  return model + "/" + std::string(to_string(mode)) + "/" + std::string(name_of(routine)) + "/" +
         std::to_string(sample_index);
}

std::string CandidateRecord::key() const { return candidate_key(model, mode, routine, sample_index); }

std::string BenchRecord::key() const {
  return impl + "|" + std::string(name_of(routine)) + "|" + param_combo;
}

const CandidateRecord* Ledger::find_candidate(const std::string& key) const {
  for (const auto& c : candidates) {
    if (c.key() == key) return &c;
  }
  return nullptr;
}

const BenchRecord* Ledger::find_bench(const std::string& key) const {
  for (const auto& b : bench) {
    if (b.key() == key) return &b;
  }
  return nullptr;
}

namespace {

// JSON has no infinity.
json number_or_tag(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double number_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
  }
  return j.get<double>();
}

std::string_view metric_name(MetricKind m) {
  return m == MetricKind::FlopsPerSec ? "flops_per_sec" : "bytes_per_sec";
}

Routine routine_at(const json& j) {
  const auto r = routine_from_name(j.at("routine").get<std::string>());
  if (!r) throw std::runtime_error("unknown routine in ledger");
  return *r;
}

CandidateRecord candidate_from(const json& j) {
  CandidateRecord r;
  r.routine = routine_at(j);
  const auto mode = prompt_mode_from_string(j.at("mode").get<std::string>());
  const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (!mode || !verdict) throw std::runtime_error("bad mode or verdict in ledger");
  r.mode = *mode;
  r.verdict = *verdict;
  r.model = j.at("model").get<std::string>();
  r.sample_index = j.at("sample_index").get<int>();
  r.failing_case = j.value("failing_case", std::string());
  if (j.contains("max_rel_err") && !j["max_rel_err"].is_null()) {
    r.max_rel_err = number_from(j["max_rel_err"]);
  }
  r.detail = j.value("detail", std::string());
  if (j.contains("combo_pass")) {
    for (const auto& [k, v] : j["combo_pass"].items()) r.combo_pass[k] = v.get<bool>();
  }
  r.argcheck_mismatches = j.value("argcheck_mismatches", std::size_t{0});
  r.tokens_in = j.value("tokens_in", std::int64_t{0});
  r.tokens_out = j.value("tokens_out", std::int64_t{0});
  r.reasoning_tokens = j.value("reasoning_tokens", std::int64_t{0});
  r.cost_usd = j.value("cost_usd", 0.0);
  r.salvaged = j.value("salvaged", false);
  r.source_file = j.value("source_file", std::string());
  return r;
}

BenchRecord bench_from(const json& j) {
  BenchRecord r;
  r.routine = routine_at(j);
  r.param_combo = j.at("param_combo").get<std::string>();
  r.impl = j.at("impl").get<std::string>();
  r.ok = j.at("ok").get<bool>();
  r.seconds = j.value("seconds", 0.0);
  r.metric_value = j.value("metric_value", 0.0);
  r.metric = j.value("metric", std::string()) == "flops_per_sec" ? MetricKind::FlopsPerSec
                                                                 : MetricKind::BytesPerSec;
  r.detail = j.value("detail", std::string());
  return r;
}

}  // namespace

std::string to_json_line(const CandidateRecord& r) {
  json j{{"type", "candidate"},
         {"routine", name_of(r.routine)},
         {"mode", to_string(r.mode)},
         {"model", r.model},
         {"sample_index", r.sample_index},
         {"verdict", to_string(r.verdict)},
         {"failing_case", r.failing_case},
         {"max_rel_err", r.max_rel_err ? number_or_tag(*r.max_rel_err) : json(nullptr)},
         {"detail", r.detail},
         {"combo_pass", r.combo_pass},
         {"argcheck_mismatches", r.argcheck_mismatches},
         {"tokens_in", r.tokens_in},
         {"tokens_out", r.tokens_out},
         {"reasoning_tokens", r.reasoning_tokens},
         {"cost_usd", r.cost_usd},
         {"salvaged", r.salvaged},
         {"source_file", r.source_file}};
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string to_json_line(const BenchRecord& r) {
  json j{{"type", "bench"},
         {"routine", name_of(r.routine)},
         {"param_combo", r.param_combo},
         {"impl", r.impl},
         {"ok", r.ok},
         {"seconds", r.seconds},
         {"metric_value", r.metric_value},
         {"metric", metric_name(r.metric)},
         {"detail", r.detail}};
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

Ledger load_ledger(const std::filesystem::path& path) {
  Ledger out;
  std::ifstream in(path);
  if (!in) return out;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      if (in.peek() == EOF) break;  // torn tail
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": bad JSON");
    }
    const std::string type = j.value("type", std::string());
    if (type == "candidate") {
      CandidateRecord r = candidate_from(j);
      if (seen.insert("c|" + r.key()).second) out.candidates.push_back(std::move(r));
    } else if (type == "bench") {
      BenchRecord r = bench_from(j);
      if (seen.insert("b|" + r.key()).second) out.bench.push_back(std::move(r));
    }
  }
  return out;
}

LedgerWriter::LedgerWriter(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  // Drop a torn tail left by an interrupted write.
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!data.empty() && data.back() != '\n') {
    const std::size_t keep = data.rfind('\n');
    std::filesystem::resize_file(path_, keep == std::string::npos ? 0 : keep + 1);
  }
}

void LedgerWriter::append(const CandidateRecord& r) { write(to_json_line(r)); }
void LedgerWriter::append(const BenchRecord& r) { write(to_json_line(r)); }

void LedgerWriter::write(const std::string& line) {
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out << line << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path_.string());
}

}  // namespace blasgen
