#include "blasgen/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blasgen/naive.hpp"

namespace blasgen {

double growth_factor(const TestCase& tc, const ErrorModel& model) {
  const BoundParams& q = tc.params;
  const bool left = q.side == Side::Left;
  double g = 1.0;
  switch (tc.routine) {
    case Routine::dasum:
    case Routine::ddot:
    case Routine::dnrm2:
    case Routine::idamax: g = static_cast<double>(tc.n); break;
    case Routine::daxpy:
    case Routine::drot:
    case Routine::drotm: g = 2.0; break;
    case Routine::dgemv: g = static_cast<double>(q.trans == Transpose::NoTrans ? tc.n : tc.m); break;
    case Routine::dger: g = static_cast<double>(tc.n); break;
    case Routine::dsymv:
    case Routine::dtrmv: g = static_cast<double>(tc.n); break;
    case Routine::dsyr: g = 2.0; break;
    case Routine::dsyr2: g = 3.0; break;
    case Routine::dtrsv: g = model.solve_allowance * static_cast<double>(tc.n); break;
    case Routine::dgemm:
    case Routine::dsyrk: g = static_cast<double>(tc.k); break;
    case Routine::dsyr2k: g = 2.0 * static_cast<double>(tc.k); break;
    case Routine::dsymm:
    case Routine::dtrmm: g = static_cast<double>(left ? tc.m : tc.n); break;
    case Routine::dtrsm:
      g = model.solve_allowance * static_cast<double>(left ? tc.m : tc.n);
      break;
  }
  return std::max(1.0, g);
}

namespace {

void push_vector(std::vector<double>& out, const std::vector<double>& buf, index_t len,
                 index_t inc) {
  const index_t start = inc < 0 ? (1 - len) * inc : 0;
  for (index_t i = 0; i < len; ++i) out.push_back(buf[static_cast<std::size_t>(start + i * inc)]);
}

void push_matrix(std::vector<double>& out, const std::vector<double>& buf, const MatrixShape& s,
                 const Triangle* uplo) {
  for (index_t j = 0; j < s.cols; ++j) {
    for (index_t i = 0; i < s.rows; ++i) {
      if (uplo && (*uplo == Triangle::Upper ? i > j : i < j)) continue;
      out.push_back(buf[static_cast<std::size_t>(i + j * s.ld)]);
    }
  }
}

bool is_solve(Routine r) { return r == Routine::dtrsv || r == Routine::dtrsm; }

Problem absolute(const Problem& p) {
  Problem q = p;
  q.alpha = std::fabs(q.alpha);
  q.beta = std::fabs(q.beta);
  q.rot.c = std::fabs(q.rot.c);
  q.rot.s = std::fabs(q.rot.s);
  q.rotm.h11 = std::fabs(q.rotm.h11);
  q.rotm.h12 = std::fabs(q.rotm.h12);
  q.rotm.h21 = std::fabs(q.rotm.h21);
  q.rotm.h22 = std::fabs(q.rotm.h22);
  for (auto* buf : {&q.x, &q.y, &q.a, &q.b, &q.c}) {
    for (double& v : *buf) v = std::fabs(v);
  }
  return q;
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

std::vector<double> output_values(const TestCase& tc, const Problem& p) {
  const OperandShapes s = shapes_of(tc);
  const Triangle uplo = tc.params.uplo;
  std::vector<double> out;
  switch (tc.routine) {
    case Routine::dasum:
    case Routine::ddot:
    case Routine::idamax:
    case Routine::dnrm2: out.push_back(p.result); break;
    case Routine::daxpy:
    case Routine::dgemv:
    case Routine::dsymv: push_vector(out, p.y, *s.y_len, tc.incy); break;
    case Routine::drot:
    case Routine::drotm:
      push_vector(out, p.x, *s.x_len, tc.incx);
      push_vector(out, p.y, *s.y_len, tc.incy);
      break;
    case Routine::dtrmv:
    case Routine::dtrsv: push_vector(out, p.x, *s.x_len, tc.incx); break;
    case Routine::dger: push_matrix(out, p.a, *s.a, nullptr); break;
    case Routine::dsyr:
    case Routine::dsyr2: push_matrix(out, p.a, *s.a, &uplo); break;
    case Routine::dgemm:
    case Routine::dsymm: push_matrix(out, p.c, *s.c, nullptr); break;
    case Routine::dsyrk:
    case Routine::dsyr2k: push_matrix(out, p.c, *s.c, &uplo); break;
    case Routine::dtrmm:
    case Routine::dtrsm: push_matrix(out, p.b, *s.b, nullptr); break;
  }
  return out;
}

double relative_error(const TestCase& tc, const Problem& result, const Problem& reference,
                      const Problem& inputs, const ErrorModel& model) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::vector<double> got = output_values(tc, result);
  const std::vector<double> want = output_values(tc, reference);
  if (got.size() != want.size()) return kInf;
  for (double v : got) {
    if (!std::isfinite(v)) return kInf;
  }
  if (tc.routine == Routine::idamax) return got == want ? 0.0 : kInf;

  double diff = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) diff = std::max(diff, std::fabs(got[i] - want[i]));
  if (diff == 0.0) return 0.0;

  double scale = 0.0;
  if (is_solve(tc.routine)) {
    scale = inf_norm(want);
  } else {
    // Componentwise magnitude bound: the same computation on |inputs|.
    Problem bound = absolute(inputs);
    naive::run(tc, bound);
    scale = inf_norm(output_values(tc, bound));
  }
  if (scale == 0.0) return kInf;
  const double eps = std::numeric_limits<double>::epsilon();
  return diff / (growth_factor(tc, model) * eps * scale);
}

}  // namespace blasgen
