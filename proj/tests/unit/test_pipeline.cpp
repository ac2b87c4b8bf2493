#include <doctest.h>

#include <fstream>
#include <sstream>

#include "blasgen/pipeline.hpp"
#include "paths.hpp"

using namespace blasgen;
namespace fs = std::filesystem;

namespace {

// daxpy: ok + wrong; dsymv: ok + wrong (the wrong one ignores uplo).
fs::path small_corpus() {
  const fs::path root = make_scratch(testing::scratch_root(), "pipe-corpus");
  for (const char* r : {"daxpy", "dsymv"}) {
    fs::create_directories(root / r);
    for (const char* f : {"ok.c", "wrong.c"}) {
      fs::copy_file(testing::source_dir() / "corpus" / r / f, root / r / f);
    }
  }
  return root;
}

std::string config_json(const fs::path& corpus, const fs::path& out, const std::string& extra = "") {
  return R"({"routines": ["daxpy", "dsymv"], "modes": ["NameToCcode", "NameToOptCcode"],
             "models": ["gpt-4.1"], "n_samples": 3, "backend": "mock:)" +
         corpus.string() + R"(", "output_dir": ")" + out.string() + "\"" + extra + "}";
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("config parsing") {
  const fs::path corpus = small_corpus();
  // All three modes by default, and the Fortran one needs sources.
  CHECK_THROWS_AS(parse_config(R"({"backend": "mock:)" + corpus.string() + "\"}", "/base"),
                  ConfigError);
  const fs::path fortran = testing::source_dir() / "tests" / "fixtures" / "fortran";
  const RunConfig d = parse_config(R"({"routines": ["dsymm"], "fortran_src_dir": ")" +
                                       fortran.string() + R"(", "backend": "mock:)" +
                                       corpus.string() + "\"}",
                                   "/base");
  CHECK(d.routines.size() == 1);
  CHECK(parse_config(R"({"modes": ["NameToCcode"], "backend": "mock:)" + corpus.string() + "\"}", "/")
            .routines.size() == 20);
  CHECK(d.sampling.n_samples == 10);
  CHECK(d.sampling.temperature == 1.0);
  CHECK(d.sampling.top_p == 1.0);
  CHECK(d.bench.level1_n == 16777216);
  CHECK(d.build.opt_flags.empty());
  CHECK(d.output_dir == fs::path("/base/blasgen-out"));
  CHECK(d.backend.kind == BackendSpec::Kind::Mock);
  CHECK(d.modes.size() == 3);
  CHECK_THROWS_AS(parse_config(R"({"routines": ["dgemm"], "backend": "mock:)" + corpus.string() +
                                   R"(", "modes": ["FrtcodeToOptCcode"]})", "/"),
                  ConfigError);
  const RunConfig f = parse_config(R"({"routines": ["dsymm"], "modes": ["FrtcodeToOptCcode"],
      "backend": "mock:)" + corpus.string() + R"(", "fortran_src_dir": ")" + fortran.string() + "\"}", "/");
  CHECK(fortran_attachment(f, Routine::dsymm, PromptMode::FrtcodeToOptCcode)->find("DSYMM") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_config(R"({"n_samplez": 3})", "/"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"backend": "carrier-pigeon"})", "/"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"backend": "mock:)" + corpus.string() + R"(", "models": ["gpt-2"]})", "/"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"backend": "mock:)" + corpus.string() + R"(", "bench": {"reps": 2}})", "/"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("{", "/"), ConfigError);
}

TEST_CASE("mock run: cardinality, resume and replay") {
  const fs::path corpus = small_corpus();
  const fs::path out = make_scratch(testing::scratch_root(), "pipe-run");
  const RunConfig cfg = parse_config(config_json(corpus, out), "/");
  std::ostringstream log;
  REQUIRE(cmd_run(cfg, log) == kExitOk);
  const OutputLayout layout{out};
  Ledger l = load_ledger(layout.ledger());
  CHECK(l.candidates.size() == 2 * 2 * 3);
  std::map<std::string, int> passes;
  for (const auto& c : l.candidates) passes[std::string(name_of(c.routine))] += (c.verdict == VerdictKind::Pass ? 1 : 0);
  CHECK(passes["daxpy"] == 2 * 2);  // indices 0 and 2 are ok.c in both modes
  CHECK(passes["dsymv"] == 2 * 2);
  for (const auto& c : l.candidates) {
    if (c.routine == Routine::dsymv && c.verdict != VerdictKind::Pass) {
      CHECK(c.combo_pass.at("uplo=L"));
      CHECK_FALSE(c.combo_pass.at("uplo=U"));
    }
    CHECK(c.tokens_in > 0);
    CHECK(fs::exists(out / c.source_file));
  }
  CHECK(fs::exists(layout.reports() / "pass.txt"));
  CHECK(fs::exists(layout.reports() / "pass.md"));
  CHECK(fs::exists(layout.reports() / "pass.csv"));
  CHECK_FALSE(fs::exists(layout.reports() / "perf.txt"));

  // Kill mid-run: keep five records and half of the sixth.
  const auto all = lines_of(layout.ledger());
  {
    std::ofstream trunc(layout.ledger(), std::ios::trunc);
    for (int i = 0; i < 5; ++i) trunc << all[static_cast<std::size_t>(i)] << '\n';
    trunc << all[5].substr(0, all[5].size() / 2);
  }
  REQUIRE(cmd_run(cfg, log) == kExitOk);
  l = load_ledger(layout.ledger());
  CHECK(l.candidates.size() == 12);
  CHECK(lines_of(layout.ledger()).size() == 12);

  // Deleting compiled artifacts does not change the tables.
  const std::string pass_before = testing::read_text(layout.reports() / "pass.csv");
  fs::remove_all(layout.work());
  REQUIRE(cmd_report(layout.ledger(), layout.reports(), cfg.formats, cfg.aggregate, log) == kExitOk);
  CHECK(testing::read_text(layout.reports() / "pass.csv") == pass_before);

  // Replay the sampled candidates into a fresh directory.
  const fs::path out2 = make_scratch(testing::scratch_root(), "pipe-replay");
  RunConfig replay = cfg;
  replay.backend = {BackendSpec::Kind::Replay, layout.candidates()};
  replay.output_dir = out2;
  const fs::path fresh = make_scratch(testing::scratch_root(), "pipe-fresh");
  RunConfig original = cfg;
  original.output_dir = fresh;
  REQUIRE(cmd_run(original, log) == kExitOk);
  REQUIRE(cmd_run(replay, log) == kExitOk);
  CHECK(testing::read_text(OutputLayout{out2}.ledger()) ==
        testing::read_text(OutputLayout{fresh}.ledger()));
}

TEST_CASE("replay miss aborts with exit 1") {
  const fs::path empty_store = make_scratch(testing::scratch_root(), "pipe-empty-store");
  const fs::path out = make_scratch(testing::scratch_root(), "pipe-miss");
  const RunConfig cfg = parse_config(
      R"({"routines": ["daxpy"], "modes": ["NameToCcode"], "n_samples": 1, "backend": "replay:)" +
          empty_store.string() + R"(", "output_dir": ")" + out.string() + "\"}",
      "/");
  std::ostringstream log;
  CHECK(cmd_run(cfg, log) == kExitFailure);
  CHECK(log.str().find("replay miss: gpt-4.1/NameToCcode/daxpy/0") != std::string::npos);
  CHECK(cmd_report(OutputLayout{out}.ledger(), OutputLayout{out}.reports(), {ReportFormat::Text},
                   PerfAggregate::Best, log) == kExitFailure);
}

TEST_CASE("bench stage fills the performance table") {
  const fs::path corpus = small_corpus();
  const fs::path out = make_scratch(testing::scratch_root(), "pipe-bench");
  const RunConfig cfg = parse_config(
      config_json(corpus, out,
                  R"(, "bench": {"enabled": true, "level1_n": 4096, "level2_mn": 64, "reps": 3,
                     "threads": 1})"),
      "/");
  std::ostringstream log;
  REQUIRE(cmd_run(cfg, log) == kExitOk);
  const Ledger l = load_ledger(OutputLayout{out}.ledger());
  std::size_t refs = 0;
  for (const auto& b : l.bench) {
    if (b.impl == kRefImpl) ++refs;
    CHECK_MESSAGE(b.ok, b.detail);
    // The wrong dsymv never gets timed on the combination it fails.
    if (b.routine == Routine::dsymv && b.impl != kRefImpl) {
      const CandidateRecord* c = l.find_candidate(b.impl);
      REQUIRE(c);
      if (c->verdict != VerdictKind::Pass) CHECK(b.param_combo == "uplo=L");
    }
  }
  CHECK(refs == 1 + 2);
  const std::string perf = testing::read_text(OutputLayout{out}.reports() / "perf.txt");
  CHECK(perf.find("GB/s") != std::string::npos);
  CHECK(perf.find("x)") != std::string::npos);
  const std::size_t before = l.bench.size();
  REQUIRE(cmd_run(cfg, log) == kExitOk);
  CHECK(load_ledger(OutputLayout{out}.ledger()).bench.size() == before);
}

TEST_CASE("oracle self-test") {
  SelftestOptions serial;
  serial.parallel = false;
  const SelftestReport a = run_selftest(serial);
  const SelftestReport b = run_selftest();
  CHECK(a.ok());
  CHECK(render(a) == render(b));
  std::size_t dgemv = 0, dtrsm = 0;
  for (const auto& r : a.routines) {
    if (r.routine == Routine::dgemv) dgemv = r.cases;
    if (r.routine == Routine::dtrsm) dtrsm = r.cases;
  }
  CHECK(dgemv == 128);
  CHECK(dtrsm == 256);
  std::ostringstream out;
  CHECK(cmd_oracle_selftest({}, out) == kExitOk);
  SelftestOptions broken;
  broken.inject_fault = Routine::dsyrk;
  std::ostringstream bad;
  CHECK(cmd_oracle_selftest(broken, bad) == kExitFailure);
  CHECK(bad.str().find("dsyrk(uplo=") != std::string::npos);
}
