#include <doctest.h>

#include <cmath>
#include <vector>

#include "blasgen/dispatch.hpp"
#include "blasgen/error_model.hpp"
#include "blasgen/naive.hpp"
#include "blasgen/oracle.hpp"
#include "blasgen/poison.hpp"

using namespace blasgen;
using Vec = std::vector<double>;

namespace {

int arg_position(auto&& fn) {
  try {
    fn();
  } catch (const ArgumentError& e) {
    return e.position();
  }
  return 0;
}

Vec identity(index_t n, index_t ld) {
  Vec a(static_cast<std::size_t>(ld * n), 0.0);
  for (index_t i = 0; i < n; ++i) a[static_cast<std::size_t>(i + i * ld)] = 1.0;
  return a;
}

}  // namespace

TEST_CASE("level 1 examples") {
  CHECK(ref::dasum(3, Vec{1, -2, 3}, 1) == 6.0);
  CHECK(ref::dasum(2, Vec{1, 2, 3, 4}, 2) == 4.0);
  CHECK(ref::dasum(0, Vec{5}, 1) == 0.0);

  Vec y{3, 4};
  ref::daxpy(2, 2.0, Vec{1, 2}, 1, y, 1);
  CHECK(y == Vec{5, 8});
  ref::daxpy(2, 0.0, Vec{NAN, NAN}, 1, y, 1);
  CHECK(y == Vec{5, 8});

  CHECK(ref::ddot(3, Vec{1, 2, 3}, 1, Vec{1, 2, 3}, 1) == 14.0);
  CHECK(ref::ddot(2, Vec{1, 0}, 1, Vec{0, 1}, 1) == 0.0);

  CHECK(ref::idamax(3, Vec{2, -5, 5}, 1) == 2);
  CHECK(ref::idamax(1, Vec{7}, 1) == 1);
  CHECK(ref::idamax(0, Vec{7}, 1) == 0);

  CHECK(ref::dnrm2(2, Vec{3, 4}, 1) == 5.0);
  CHECK(ref::dnrm2(2, Vec{3e200, 4e200}, 1) == doctest::Approx(5e200).epsilon(1e-15));
  CHECK(ref::dnrm2(3, Vec{0, 0, 0}, 1) == 0.0);

  Vec x{1}, yy{2};
  ref::drot(1, x, 1, yy, 1, {1.0, 0.0});
  CHECK((x == Vec{1} && yy == Vec{2}));
  ref::drot(1, x, 1, yy, 1, {0.0, 1.0});
  CHECK((x == Vec{2} && yy == Vec{-1}));

  Vec rx{1}, ry{1};
  ref::drotm(1, rx, 1, ry, 1, {-2.0, 9, 9, 9, 9});
  CHECK((rx == Vec{1} && ry == Vec{1}));
  ref::drotm(1, rx, 1, ry, 1, {-1.0, 2, 0, 0, 3});
  CHECK((rx == Vec{2} && ry == Vec{3}));
}

TEST_CASE("level 2 examples") {
  Vec y(3, 0.0);
  ref::dgemv(Transpose::NoTrans, 3, 3, 1.0, identity(3, 3), 3, Vec{1, 2, 3}, 1, 0.0, y, 1);
  CHECK(y == Vec{1, 2, 3});

  Vec y2{1, 1};
  ref::dgemv(Transpose::NoTrans, 2, 2, 0.0, Vec{NAN, NAN, NAN, NAN}, 2, Vec{NAN, NAN}, 1, 2.0,
             y2, 1);
  CHECK(y2 == Vec{2, 2});

  Vec yb{NAN, NAN};
  ref::dgemv(Transpose::NoTrans, 2, 2, 1.0, identity(2, 2), 2, Vec{1, 2}, 1, 0.0, yb, 1);
  CHECK(yb == Vec{1, 2});

  Vec a(4, 0.0);
  ref::dger(2, 2, 1.0, Vec{1, 0}, 1, Vec{0, 1}, 1, a, 2);
  CHECK(a == Vec{0, 0, 1, 0});

  Vec s(9, 0.0);
  ref::dsyr(Triangle::Upper, 3, 1.0, Vec{1, 0, 0}, 1, s, 3);
  CHECK(s == Vec{1, 0, 0, 0, 0, 0, 0, 0, 0});
  Vec s2(4, 0.0);
  ref::dsyr2(Triangle::Lower, 2, 1.0, Vec{1, 0}, 1, Vec{1, 0}, 1, s2, 2);
  CHECK(s2 == Vec{2, 0, 0, 0});

  Vec x{1, 2, 3};
  ref::dtrmv(Triangle::Lower, Transpose::NoTrans, DiagKind::NonUnit, 3, identity(3, 3), 3, x, 1);
  CHECK(x == Vec{1, 2, 3});
  ref::dtrsv(Triangle::Upper, Transpose::Trans, DiagKind::NonUnit, 3, identity(3, 3), 3, x, 1);
  CHECK(x == Vec{1, 2, 3});
}

TEST_CASE("level 3 examples") {
  const Vec a{1, 3, 2, 4};  // [[1,2],[3,4]]
  Vec c(4, NAN);
  ref::dgemm(Transpose::NoTrans, Transpose::NoTrans, 2, 2, 2, 1.0, a, 2, identity(2, 2), 2, 0.0,
             c, 2);
  CHECK(c == a);

  Vec sc{1, 1, 1, 1};
  ref::dsymm(Side::Left, Triangle::Upper, 2, 2, 2.0, identity(2, 2), 2, a, 2, 1.0, sc, 2);
  CHECK(sc == Vec{3, 7, 5, 9});

  Vec k{1, 2, 3, 4};
  ref::dsyrk(Triangle::Lower, Transpose::NoTrans, 2, 1, 0.0, Vec{NAN, NAN}, 2, 2.0, k, 2);
  CHECK(k == Vec{2, 4, 3, 8});

  Vec b = a;
  ref::dtrmm(Side::Left, Triangle::Lower, Transpose::NoTrans, DiagKind::NonUnit, 2, 2, 2.0,
             identity(2, 2), 2, b, 2);
  CHECK(b == Vec{2, 6, 4, 8});
  ref::dtrsm(Side::Right, Triangle::Upper, Transpose::Trans, DiagKind::NonUnit, 2, 2, 0.5,
             identity(2, 2), 2, b, 2);
  CHECK(b == a);
}

TEST_CASE("dsyr2k with A == B equals dsyrk with doubled alpha") {
  TestCase tc;
  tc.routine = Routine::dsyr2k;
  tc.n = 10;
  tc.k = 6;
  for (Transpose t : {Transpose::NoTrans, Transpose::Trans}) {
    tc.params.trans = t;
    tc.seed = case_seed(tc);
    Problem p = init_problem(tc);
    p.b = p.a;
    Problem q = p;
    ref::dsyr2k(Triangle::Upper, t, 10, 6, 1.5, p.a, shapes_of(tc).a->ld, p.b,
                shapes_of(tc).b->ld, p.beta, p.c, 11);
    ref::dsyrk(Triangle::Upper, t, 10, 6, 3.0, q.a, shapes_of(tc).a->ld, q.beta, q.c, 11);
    tc.params.uplo = Triangle::Upper;
    CHECK(relative_error(tc, p, q, q) <= 3.0);
  }
}

TEST_CASE("dtrsv then dtrmv restores x") {
  for (const TestCase& tc : enumerate_cases(spec_of(Routine::dtrsv))) {
    if (tc.n != 16) continue;
    Problem p = init_problem(tc);
    const Vec x0 = p.x;
    ref::dtrsv(tc.params.uplo, tc.params.trans, tc.params.diag, tc.n, p.a, 17, p.x, tc.incx);
    ref::dtrmv(tc.params.uplo, tc.params.trans, tc.params.diag, tc.n, p.a, 17, p.x, tc.incx);
    double worst = 0.0;
    for (std::size_t i = 0; i < x0.size(); ++i) worst = std::max(worst, std::fabs(p.x[i] - x0[i]));
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("argument errors carry the xerbla position") {
  Vec v(64, 0.0);
  CHECK(arg_position([&] { ref::dasum(-1, v, 1); }) == 1);
  CHECK(arg_position([&] { ref::daxpy(2, 1.0, v, 0, v, 1); }) == 4);
  CHECK(arg_position([&] { ref::daxpy(2, 1.0, v, 1, v, 0); }) == 6);
  CHECK(arg_position([&] { ref::ddot(2, v, 1, v, 0); }) == 5);
  CHECK(arg_position([&] {
          ref::dgemv(Transpose::NoTrans, -1, 2, 1.0, v, 1, v, 1, 0.0, v, 1);
        }) == 2);
  CHECK(arg_position([&] {
          ref::dgemv(Transpose::NoTrans, 4, 2, 1.0, v, 3, v, 1, 0.0, v, 1);
        }) == 6);
  CHECK(arg_position([&] {
          ref::dgemv(Transpose::NoTrans, 4, 2, 1.0, v, 4, v, 0, 0.0, v, 1);
        }) == 8);
  CHECK(arg_position([&] { ref::dger(2, 2, 1.0, v, 1, v, 1, v, 1); }) == 9);
  CHECK(arg_position([&] {
          ref::dtrsv(Triangle::Lower, Transpose::NoTrans, DiagKind::Unit, 3, v, 2, v, 1);
        }) == 6);
  CHECK(arg_position([&] {
          ref::dgemm(Transpose::NoTrans, Transpose::NoTrans, 2, 2, -1, 1.0, v, 2, v, 1, 0.0, v, 2);
        }) == 5);
  CHECK(arg_position([&] {
          ref::dgemm(Transpose::NoTrans, Transpose::NoTrans, 4, 2, 2, 1.0, v, 4, v, 2, 0.0, v, 3);
        }) == 13);
  CHECK(arg_position([&] {
          ref::dtrsm(Side::Left, Triangle::Lower, Transpose::NoTrans, DiagKind::Unit, 4, 2, 1.0, v,
                     3, v, 4);
        }) == 9);
  CHECK(arg_position([&] {
          ref::dsyrk(Triangle::Lower, Transpose::NoTrans, 3, 2, 1.0, v, 3, 0.0, v, 2);
        }) == 10);
}

TEST_CASE("negative increments follow the reversed mapping") {
  TestCase tc;
  tc.routine = Routine::daxpy;
  tc.n = 7;
  tc.incx = -2;
  tc.incy = 3;
  tc.seed = 11;
  Problem in = init_problem(tc);
  Problem r = in, d = in;
  run_reference(tc, r);
  naive::run(tc, d);
  CHECK(r.y == d.y);

  Vec x{1, 2, 3};
  CHECK(ref::ddot(3, x, -1, Vec{1, 0, 0}, 1) == 3.0);
}

TEST_CASE("empty dimensions are no-ops") {
  for (const RoutineSpec& spec : all_routines()) {
    for (const TestCase& tc : enumerate_cases(spec)) {
      const bool empty = tc.n == 0 || (dims_used(tc.routine).m && tc.m == 0);
      if (!empty) continue;
      const Problem in = init_problem(tc);
      Problem out = in;
      run_reference(tc, out);
      const bool reduction = spec.returns != ReturnKind::None;
      CHECK_MESSAGE((reduction ? out.result == 0.0 : out == in), tc.id());
    }
  }
}

TEST_CASE("non-referenced storage is neither read nor written") {
  for (const RoutineSpec& spec : all_routines()) {
    if (!has_uplo(spec.id)) continue;
    for (const TestCase& tc : enumerate_cases(spec)) {
      Problem clean = init_problem(tc);
      Problem dirty = clean;
      const PoisonMask mask = poison_unreferenced(tc, dirty);
      run_reference(tc, clean);
      run_reference(tc, dirty);
      CHECK_MESSAGE(poison_run_matches(clean, dirty, mask), tc.id());
    }
  }
}
