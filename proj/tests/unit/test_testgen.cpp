#include <doctest.h>

#include <set>
#include <sstream>

#include "blasgen/testgen.hpp"

using namespace blasgen;

TEST_CASE("case counts") {
  CHECK(enumerate_cases(spec_of(Routine::dgemv)).size() == 128);
  CHECK(enumerate_cases(spec_of(Routine::dtrsm)).size() == 256);
  CHECK(enumerate_cases(spec_of(Routine::dasum)).size() == 16);
}

TEST_CASE("size grids cover tall, wide and degenerate shapes") {
  for (int level : {2, 3}) {
    const SizeProfile p = default_size_profile(level);
    CHECK(p.dims.size() == 16);
    bool tall = false, wide = false, zero = false;
    for (const DimTuple& d : p.dims) {
      tall |= d.m > d.n;
      wide |= d.m < d.n;
      zero |= d.m == 0 || d.n == 0;
      CHECK(d.m <= 32);
      CHECK(d.n <= 32);
      CHECK(d.k <= 32);
    }
    CHECK((tall && wide && zero));
  }
  CHECK(default_size_profile(1).dims.size() == 8);
}

TEST_CASE("enumeration is pure and seeds are distinct") {
  for (const RoutineSpec& spec : all_routines()) {
    const auto a = enumerate_cases(spec);
    const auto b = enumerate_cases(spec);
    CHECK(a == b);
    std::set<std::uint64_t> seeds;
    std::set<std::string> ids;
    for (const TestCase& tc : a) {
      seeds.insert(tc.seed);
      ids.insert(tc.id());
      CHECK((tc.incx == 1 || tc.incx == 2));
      CHECK((tc.incy == 1 || tc.incy == 2));
    }
    CHECK(seeds.size() == a.size());
    CHECK(ids.size() == a.size());
  }
}

TEST_CASE("every axis value appears") {
  const auto cases = enumerate_cases(spec_of(Routine::dtrsm));
  std::set<std::string> combos;
  for (const TestCase& tc : cases) combos.insert(tc.param_combo());
  CHECK(combos.size() == 16);
  CHECK(cases.front().param_combo() == "side=L, uplo=L, trans=N, diag=N");
  CHECK(enumerate_cases(spec_of(Routine::dgemm)).front().param_combo() == "transa=N, transb=N");
  CHECK(enumerate_cases(spec_of(Routine::dasum)).front().param_combo().empty());
}

TEST_CASE("init_problem is deterministic and draws from (0,1)") {
  for (const RoutineSpec& spec : all_routines()) {
    for (const TestCase& tc : enumerate_cases(spec)) {
      const Problem p = init_problem(tc);
      CHECK(p == init_problem(tc));
      if (tc.routine == Routine::dtrsv || tc.routine == Routine::dtrsm) continue;
      for (const auto* buf : {&p.x, &p.y, &p.a, &p.b, &p.c}) {
        for (double v : *buf) {
          CHECK(v > 0.0);
          CHECK(v < 1.0);
        }
      }
    }
  }
}

TEST_CASE("manifest round trip") {
  std::vector<TestCase> all;
  for (const RoutineSpec& spec : all_routines()) {
    const auto c = enumerate_cases(spec);
    all.insert(all.end(), c.begin(), c.end());
  }
  std::stringstream ss;
  write_manifest(ss, all);
  CHECK(read_manifest(ss) == all);

  std::istringstream bad("dgemv NNLLN 1 2\n");
  CHECK_THROWS(read_manifest(bad));
}
