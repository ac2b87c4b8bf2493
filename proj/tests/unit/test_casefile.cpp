#include <doctest.h>

#include <random>

#include "blasgen/casefile.hpp"
#include "blasgen/dispatch.hpp"
#include "blasgen/process.hpp"
#include "blasgen/sandbox.hpp"
#include "paths.hpp"

using namespace blasgen;
namespace cf = blasgen::casefile;

namespace {

TestCase dgemm_case() {
  TestCase tc;
  tc.routine = Routine::dgemm;
  tc.params.trans = Transpose::Trans;
  tc.m = 3;
  tc.n = 2;
  tc.k = 4;
  tc.seed = case_seed(tc);
  return tc;
}

int run_exec(const std::vector<std::string>& args) {
  std::vector<std::string> argv{runner_path().string()};
  argv.insert(argv.end(), args.begin(), args.end());
  std::string log;
  return run_capture(argv, log, std::chrono::seconds(30)).exit_code;
}

}  // namespace

TEST_CASE("header layout is fixed and little-endian") {
  const cf::Bytes h = cf::encode_header(dgemm_case());
  REQUIRE(h.size() == cf::kHeaderSize);
  CHECK(std::string(h.begin(), h.begin() + 4) == "KGAU");
  CHECK(h[4] == 1);
  CHECK(h[8] == static_cast<std::uint8_t>(Routine::dgemm));
  CHECK(h[12] == 3);  // m
  CHECK(h[20] == 2);  // n
  CHECK(h[28] == 4);  // k
  CHECK(h[36] == 1);  // incx
  CHECK(h[52] == 'T');
  CHECK(h[53] == 'N');  // transb sits in the side slot
  CHECK(h[54] == 0);
  CHECK(h[55] == 0);
}

TEST_CASE("input and output round trip") {
  for (const RoutineSpec& spec : all_routines()) {
    for (const TestCase& tc : enumerate_cases(spec)) {
      const Problem p = init_problem(tc);
      const cf::Bytes in = cf::encode_input(tc, p);
      CHECK(in.size() == cf::kHeaderSize + 8 * cf::input_values(tc));
      const cf::DecodedInput d = cf::decode_input(in);
      CHECK(d.tc == tc);
      CHECK(cf::encode_input(d.tc, d.problem) == in);
      CHECK((d.problem.x == p.x && d.problem.y == p.y && d.problem.a == p.a &&
             d.problem.b == p.b && d.problem.c == p.c));
      CHECK_FALSE(d.generated);

      Problem out = p;
      out.result = 42.0;
      for (double& v : out.c) v = -v;
      Problem back = p;
      cf::decode_output(cf::encode_output(tc, out), tc, back);
      if (spec.returns != ReturnKind::None) CHECK(back.result == 42.0);
      CHECK(back.c == out.c);
    }
  }
}

TEST_CASE("header-only input regenerates data from the seed") {
  const TestCase tc = dgemm_case();
  const cf::DecodedInput d = cf::decode_input(cf::encode_header(tc));
  CHECK(d.generated);
  CHECK(d.problem == init_problem(tc));
}

TEST_CASE("structural errors") {
  cf::Bytes h = cf::encode_input(dgemm_case(), init_problem(dgemm_case()));
  using K = cf::CaseFileError::Kind;
  auto kind_of = [](const cf::Bytes& b) {
    try {
      cf::decode_input(b);
    } catch (const cf::CaseFileError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  cf::Bytes truncated(h.begin(), h.end() - 3);
  CHECK(kind_of(truncated) == static_cast<int>(K::Malformed));
  cf::Bytes short_header(h.begin(), h.begin() + 20);
  CHECK(kind_of(short_header) == static_cast<int>(K::Malformed));
  cf::Bytes magic = h;
  magic[0] = 'X';
  CHECK(kind_of(magic) == static_cast<int>(K::Malformed));
  cf::Bytes routine = h;
  routine[8] = 99;
  CHECK(kind_of(routine) == static_cast<int>(K::UnknownRoutine));
  cf::Bytes param = h;
  param[52] = 'C';
  CHECK(kind_of(param) == static_cast<int>(K::Malformed));
}

TEST_CASE("runner exit-code protocol") {
  const auto dir = make_scratch(testing::scratch_root(), "exitcodes");
  const TestCase tc = dgemm_case();
  cf::Bytes good = cf::encode_input(tc, init_problem(tc));
  const std::string lib = testing::refabi_path().string();

  cf::write_file((dir / "case_0.in").string(), good);
  CHECK(run_exec({"run", lib, dir.string(), "0", "1"}) == 0);
  CHECK(std::filesystem::exists(dir / "case_0.out"));
  CHECK(testing::read_text(dir / "case_0.stdout") == "[gptblas]");

  cf::Bytes truncated(good.begin(), good.end() - 5);
  cf::write_file((dir / "case_1.in").string(), truncated);
  CHECK(run_exec({"run", lib, dir.string(), "1", "1"}) == 2);

  cf::Bytes unknown = good;
  unknown[8] = 77;
  cf::write_file((dir / "case_2.in").string(), unknown);
  CHECK(run_exec({"run", lib, dir.string(), "2", "1"}) == 3);

  CHECK(run_exec({"run", (dir / "missing.so").string(), dir.string(), "0", "1"}) == 4);
  CHECK(run_exec({"probe", lib, "dgemm"}) == 0);
  CHECK(run_exec({"probe", "/lib/x86_64-linux-gnu/libm.so.6", "dgemm"}) == 5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("oracle through the ABI reproduces direct calls bit for bit") {
  std::mt19937_64 rng(20240601);
  auto pick = [&rng](index_t lo, index_t hi) {
    return std::uniform_int_distribution<index_t>(lo, hi)(rng);
  };
  auto coin = [&rng] { return (rng() & 1) != 0; };
  const KernelHandle handle = handle_for(testing::refabi_path(), Routine::dasum);
  for (const RoutineSpec& spec : all_routines()) {
    std::vector<TestCase> cases;
    for (int i = 0; i < 50; ++i) {
      TestCase tc;
      tc.routine = spec.id;
      tc.m = dims_used(spec.id).m ? pick(0, 12) : 0;
      tc.n = pick(0, 12);
      tc.k = dims_used(spec.id).k ? pick(0, 12) : 0;
      const index_t incs[] = {-2, -1, 1, 2, 3};
      // Single-vector reductions reject non-positive strides.
      const bool positive_only = spec.level == 1 && spec.returns != ReturnKind::None &&
                                 spec.id != Routine::ddot;
      tc.incx = positive_only ? pick(1, 3) : incs[pick(0, 4)];
      tc.incy = incs[pick(0, 4)];
      if (has_axis(spec, Axis::IncX) == false) tc.incx = 1;
      if (has_axis(spec, Axis::IncY) == false) tc.incy = 1;
      tc.params.trans = coin() ? Transpose::Trans : Transpose::NoTrans;
      tc.params.transb = coin() ? Transpose::Trans : Transpose::NoTrans;
      tc.params.side = coin() ? Side::Right : Side::Left;
      tc.params.uplo = coin() ? Triangle::Upper : Triangle::Lower;
      tc.params.diag = coin() ? DiagKind::Unit : DiagKind::NonUnit;
      // Unused axes keep their defaults so the header round-trips.
      const RoutineSpec& s = spec_of(tc.routine);
      if (!has_axis(s, Axis::Trans) && !has_axis(s, Axis::TransA)) tc.params.trans = {};
      if (!has_axis(s, Axis::TransB)) tc.params.transb = {};
      if (!has_axis(s, Axis::Side)) tc.params.side = {};
      if (!has_axis(s, Axis::Uplo)) tc.params.uplo = {};
      if (!has_axis(s, Axis::Diag)) tc.params.diag = {};
      tc.seed = case_seed(tc);
      cases.push_back(tc);
    }
    std::vector<Problem> inputs;
    for (const TestCase& tc : cases) inputs.push_back(init_problem(tc));

    KernelHandle h = handle;
    h.routine = spec.id;
    h.entry_symbol = abi::entry_symbol(spec.id);
    SandboxInvoker runner(h, make_scratch(testing::scratch_root(), "roundtrip"));
    const auto outcomes = runner.invoke(cases, inputs);
    FunctionInvoker direct([](const TestCase& tc, Problem& p) { run_reference(tc, p); });
    const auto expected = direct.invoke(cases, inputs);
    for (std::size_t i = 0; i < cases.size(); ++i) {
      REQUIRE(outcomes[i].status == CaseOutcome::Status::Ok);
      CHECK_MESSAGE(outcomes[i].output == expected[i].output, cases[i].id());
      CHECK(outcomes[i].marker);
    }
  }
}
