#include "blasgen/testgen.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blasgen {

SizeProfile default_size_profile(int level) {
  SizeProfile p;
  if (level == 1) {
    for (index_t n : {0, 1, 2, 3, 7, 16, 31, 32}) p.dims.push_back({0, n, 0});
    return p;
  }
  // The n values are pairwise distinct so square-only routines, which read
  // just n, still get 16 different problems.
  p.dims = {
      // square
      {1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}, {7, 7, 7}, {16, 16, 16}, {31, 31, 31},
      {32, 32, 32},
      // tall (m > n)
      {17, 5, 9}, {32, 6, 16}, {31, 8, 0},
      // wide (m < n)
      {5, 17, 31}, {3, 30, 8}, {9, 29, 2},
      // degenerate
      {0, 9, 3}, {9, 0, 5},
  };
  return p;
}

namespace {

template <typename T>
std::vector<T> both(T a, T b) {
  return {a, b};
}

}  // namespace

std::vector<TestCase> enumerate_cases(const RoutineSpec& spec, const SizeProfile& profile) {
  TestCase base;
  base.routine = spec.id;
  std::vector<TestCase> cases{base};
  // Expand one axis at a time; later axes vary fastest.
  auto expand = [&cases](auto&& apply, const auto& values) {
    std::vector<TestCase> next;
    next.reserve(cases.size() * values.size());
    for (const TestCase& tc : cases) {
      for (const auto& v : values) {
        TestCase t = tc;
        apply(t, v);
        next.push_back(t);
      }
    }
    cases = std::move(next);
  };
  for (Axis axis : spec.axes) {
    switch (axis) {
      case Axis::Trans:
      case Axis::TransA:
        expand([](TestCase& t, Transpose v) { t.params.trans = v; },
               both(Transpose::NoTrans, Transpose::Trans));
        break;
      case Axis::TransB:
        expand([](TestCase& t, Transpose v) { t.params.transb = v; },
               both(Transpose::NoTrans, Transpose::Trans));
        break;
      case Axis::Side:
        expand([](TestCase& t, Side v) { t.params.side = v; }, both(Side::Left, Side::Right));
        break;
      case Axis::Uplo:
        expand([](TestCase& t, Triangle v) { t.params.uplo = v; },
               both(Triangle::Lower, Triangle::Upper));
        break;
      case Axis::Diag:
        expand([](TestCase& t, DiagKind v) { t.params.diag = v; },
               both(DiagKind::NonUnit, DiagKind::Unit));
        break;
      case Axis::IncX:
        expand([](TestCase& t, index_t v) { t.incx = v; }, profile.strides);
        break;
      case Axis::IncY:
        expand([](TestCase& t, index_t v) { t.incy = v; }, profile.strides);
        break;
    }
  }
  const DimUse use = dims_used(spec.id);
  expand(
      [&use](TestCase& t, const DimTuple& d) {
        t.m = use.m ? d.m : 0;
        t.n = use.n ? d.n : 0;
        t.k = use.k ? d.k : 0;
      },
      profile.dims);
  for (TestCase& tc : cases) tc.seed = case_seed(tc);
  return cases;
}

std::vector<TestCase> enumerate_cases(const RoutineSpec& spec) {
  return enumerate_cases(spec, default_size_profile(spec.level));
}

namespace {

std::string params_string(const BoundParams& p) {
  return {to_char(p.trans), to_char(p.transb), to_char(p.side), to_char(p.uplo),
          to_char(p.diag)};
}

}  // namespace

std::uint64_t case_seed(const TestCase& tc) {
  std::ostringstream os;
  os << name_of(tc.routine) << '|' << params_string(tc.params) << '|' << tc.m << '|' << tc.n
     << '|' << tc.k << '|' << tc.incx << '|' << tc.incy;
  const std::string s = os.str();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

UniformStream::UniformStream(std::uint64_t seed) : engine_(seed) {}

double UniformStream::next() {
  // 53 random bits centred in their interval: never 0, never 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

Problem allocate_problem(const TestCase& tc) {
  Problem p;
  const OperandShapes s = shapes_of(tc);
  if (s.x_len) p.x.assign(static_cast<std::size_t>(vector_storage(*s.x_len, tc.incx)), 0.0);
  if (s.y_len) p.y.assign(static_cast<std::size_t>(vector_storage(*s.y_len, tc.incy)), 0.0);
  if (s.a) p.a.assign(static_cast<std::size_t>(matrix_storage(*s.a)), 0.0);
  if (s.b) p.b.assign(static_cast<std::size_t>(matrix_storage(*s.b)), 0.0);
  if (s.c) p.c.assign(static_cast<std::size_t>(matrix_storage(*s.c)), 0.0);
  return p;
}

Problem init_problem(const TestCase& tc) {
  Problem p = allocate_problem(tc);
  UniformStream rng(tc.seed);
  p.alpha = kDefaultAlpha;
  p.beta = kDefaultBeta;

  // Rotation from a rational parametrisation (no libm, so portable bits).
  const double t = rng.next();
  p.rot.c = (1.0 - t * t) / (1.0 + t * t);
  p.rot.s = (2.0 * t) / (1.0 + t * t);

  static constexpr double kFlags[4] = {-2.0, -1.0, 0.0, 1.0};
  p.rotm.flag = kFlags[tc.n % 4];
  p.rotm.h11 = rng.next();
  p.rotm.h21 = rng.next();
  p.rotm.h12 = rng.next();
  p.rotm.h22 = rng.next();
  if (p.rotm.flag == 0.0) {
    p.rotm.h11 = 1.0;
    p.rotm.h22 = 1.0;
  } else if (p.rotm.flag == 1.0) {
    p.rotm.h21 = -1.0;
    p.rotm.h12 = 1.0;
  }

  for (auto* buf : {&p.x, &p.y, &p.a, &p.b, &p.c}) {
    for (double& v : *buf) v = rng.next();
  }

  if (tc.routine == Routine::dtrsv || tc.routine == Routine::dtrsm) {
    const MatrixShape sa = *shapes_of(tc).a;
    const index_t order = sa.rows;
    ColMajorMatrix<double> A(p.a, sa.rows, sa.cols, sa.ld);
    const bool upper = tc.params.uplo == Triangle::Upper;
    const bool unit = tc.params.diag == DiagKind::Unit;
    for (index_t j = 0; j < order; ++j) {
      A(j, j) += static_cast<double>(order);
      if (!unit) continue;
      const index_t lo = upper ? 0 : j + 1;
      const index_t hi = upper ? j : order;
      for (index_t i = lo; i < hi; ++i) A(i, j) /= static_cast<double>(order);
    }
  }
  return p;
}

void write_manifest(std::ostream& os, const std::vector<TestCase>& cases) {
  for (const TestCase& tc : cases) {
    os << name_of(tc.routine) << ' ' << params_string(tc.params) << ' ' << tc.m << ' ' << tc.n
       << ' ' << tc.k << ' ' << tc.incx << ' ' << tc.incy << ' ' << tc.seed << '\n';
  }
}

std::vector<TestCase> read_manifest(std::istream& is) {
  std::vector<TestCase> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, params;
    TestCase tc;
    if (!(ls >> name >> params >> tc.m >> tc.n >> tc.k >> tc.incx >> tc.incy >> tc.seed) ||
        params.size() != 5) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) + ": malformed");
    }
    auto r = routine_from_name(name);
    auto trans = parse_transpose(params[0]);
    auto transb = parse_transpose(params[1]);
    auto side = parse_side(params[2]);
    auto uplo = parse_triangle(params[3]);
    auto diag = parse_diag(params[4]);
    if (!r || !trans || !transb || !side || !uplo || !diag) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) + ": bad routine/params");
    }
    tc.routine = *r;
    tc.params = {*trans, *transb, *side, *uplo, *diag};
    out.push_back(tc);
  }
  return out;
}

}  // namespace blasgen
