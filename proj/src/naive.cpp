#include "blasgen/naive.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace blasgen::naive {

Dense transpose(const Dense& a) {
  Dense t(a.cols, a.rows);
  for (index_t j = 0; j < a.cols; ++j)
    for (index_t i = 0; i < a.rows; ++i) t(j, i) = a(i, j);
  return t;
}

Dense multiply(const Dense& a, const Dense& b) {
  if (a.cols != b.rows) throw std::logic_error("naive::multiply: shape mismatch");
  Dense c(a.rows, b.cols);
  for (index_t i = 0; i < a.rows; ++i) {
    for (index_t j = 0; j < b.cols; ++j) {
      double sum = 0.0;
      for (index_t l = 0; l < a.cols; ++l) sum += a(i, l) * b(l, j);
      c(i, j) = sum;
    }
  }
  return c;
}

Dense solve(const Dense& a, const Dense& b) {
  const index_t n = a.rows;
  Dense lu = a;
  Dense x = b;
  for (index_t col = 0; col < n; ++col) {
    index_t piv = col;
    for (index_t i = col + 1; i < n; ++i) {
      if (std::fabs(lu(i, col)) > std::fabs(lu(piv, col))) piv = i;
    }
    if (piv != col) {
      for (index_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(piv, j));
      for (index_t j = 0; j < x.cols; ++j) std::swap(x(col, j), x(piv, j));
    }
    for (index_t i = col + 1; i < n; ++i) {
      const double f = lu(i, col) / lu(col, col);
      if (f == 0.0) continue;
      for (index_t j = col; j < n; ++j) lu(i, j) -= f * lu(col, j);
      for (index_t j = 0; j < x.cols; ++j) x(i, j) -= f * x(col, j);
    }
  }
  for (index_t j = 0; j < x.cols; ++j) {
    for (index_t i = n - 1; i >= 0; --i) {
      double sum = x(i, j);
      for (index_t l = i + 1; l < n; ++l) sum -= lu(i, l) * x(l, j);
      x(i, j) = sum / lu(i, i);
    }
  }
  return x;
}

namespace {

std::vector<double> gather(const std::vector<double>& buf, index_t len, index_t inc) {
  std::vector<double> out(static_cast<std::size_t>(len));
  const index_t start = inc < 0 ? (1 - len) * inc : 0;
  for (index_t i = 0; i < len; ++i) out[static_cast<std::size_t>(i)] = buf[static_cast<std::size_t>(start + i * inc)];
  return out;
}

void scatter(const std::vector<double>& vals, std::vector<double>& buf, index_t inc) {
  const auto len = static_cast<index_t>(vals.size());
  const index_t start = inc < 0 ? (1 - len) * inc : 0;
  for (index_t i = 0; i < len; ++i) buf[static_cast<std::size_t>(start + i * inc)] = vals[static_cast<std::size_t>(i)];
}

Dense load(const std::vector<double>& buf, const MatrixShape& s) {
  Dense d(s.rows, s.cols);
  for (index_t j = 0; j < s.cols; ++j)
    for (index_t i = 0; i < s.rows; ++i) d(i, j) = buf[static_cast<std::size_t>(i + j * s.ld)];
  return d;
}

bool in_triangle(index_t i, index_t j, Triangle uplo) {
  return uplo == Triangle::Upper ? i <= j : i >= j;
}

void store(const Dense& d, std::vector<double>& buf, const MatrixShape& s) {
  for (index_t j = 0; j < s.cols; ++j)
    for (index_t i = 0; i < s.rows; ++i) buf[static_cast<std::size_t>(i + j * s.ld)] = d(i, j);
}

void store_triangle(const Dense& d, std::vector<double>& buf, const MatrixShape& s,
                    Triangle uplo) {
  for (index_t j = 0; j < s.cols; ++j)
    for (index_t i = 0; i < s.rows; ++i)
      if (in_triangle(i, j, uplo)) buf[static_cast<std::size_t>(i + j * s.ld)] = d(i, j);
}

Dense symmetrize(const Dense& a, Triangle uplo) {
  Dense s(a.rows, a.cols);
  for (index_t j = 0; j < a.cols; ++j)
    for (index_t i = 0; i < a.rows; ++i) s(i, j) = in_triangle(i, j, uplo) ? a(i, j) : a(j, i);
  return s;
}

Dense triangularize(const Dense& a, Triangle uplo, DiagKind diag) {
  Dense t(a.rows, a.cols);
  for (index_t j = 0; j < a.cols; ++j) {
    for (index_t i = 0; i < a.rows; ++i) {
      if (i == j) {
        t(i, j) = diag == DiagKind::Unit ? 1.0 : a(i, j);
      } else if (in_triangle(i, j, uplo)) {
        t(i, j) = a(i, j);
      }
    }
  }
  return t;
}

Dense column(const std::vector<double>& v) {
  Dense d(static_cast<index_t>(v.size()), 1);
  d.v = v;
  return d;
}

Dense op(const Dense& a, Transpose t) { return t == Transpose::Trans ? transpose(a) : a; }

// alpha * prod + beta * old, assigning when beta == 0.
Dense combine(double alpha, const Dense& prod, double beta, const Dense& old) {
  Dense out(prod.rows, prod.cols);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    out.v[i] = beta == 0.0 ? alpha * prod.v[i] : alpha * prod.v[i] + beta * old.v[i];
  }
  return out;
}

Dense scaled(double alpha, Dense d) {
  for (double& v : d.v) v *= alpha;
  return d;
}

Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

Dense rotation_matrix(const Problem& p, Routine r) {
  Dense h(2, 2);
  if (r == Routine::drot) {
    h(0, 0) = p.rot.c;
    h(0, 1) = p.rot.s;
    h(1, 0) = -p.rot.s;
    h(1, 1) = p.rot.c;
    return h;
  }
  const RotmParams& q = p.rotm;
  if (q.flag == -2.0) {
    h(0, 0) = 1.0;
    h(1, 1) = 1.0;
  } else if (q.flag == -1.0) {
    h(0, 0) = q.h11;
    h(0, 1) = q.h12;
    h(1, 0) = q.h21;
    h(1, 1) = q.h22;
  } else if (q.flag == 0.0) {
    h(0, 0) = 1.0;
    h(0, 1) = q.h12;
    h(1, 0) = q.h21;
    h(1, 1) = 1.0;
  } else {
    h(0, 0) = q.h11;
    h(0, 1) = 1.0;
    h(1, 0) = -1.0;
    h(1, 1) = q.h22;
  }
  return h;
}

void run_level1(const TestCase& tc, Problem& p) {
  const index_t n = tc.n;
  switch (tc.routine) {
    case Routine::dasum: {
      double s = 0.0;
      for (double v : gather(p.x, n, tc.incx)) s += std::fabs(v);
      p.result = s;
      return;
    }
    case Routine::ddot: {
      const auto x = gather(p.x, n, tc.incx);
      const auto y = gather(p.y, n, tc.incy);
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
      p.result = s;
      return;
    }
    case Routine::idamax: {
      const auto x = gather(p.x, n, tc.incx);
      index_t best = 0;
      for (index_t i = 0; i < n; ++i) {
        if (best == 0 || std::fabs(x[static_cast<std::size_t>(i)]) > std::fabs(x[static_cast<std::size_t>(best - 1)])) {
          best = i + 1;
        }
      }
      p.result = static_cast<double>(best);
      return;
    }
    case Routine::dnrm2: {
      long double s = 0.0L;
      for (double v : gather(p.x, n, tc.incx)) s += static_cast<long double>(v) * v;
      p.result = static_cast<double>(std::sqrt(s));
      return;
    }
    case Routine::daxpy: {
      const auto x = gather(p.x, n, tc.incx);
      auto y = gather(p.y, n, tc.incy);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = p.alpha * x[i] + y[i];
      scatter(y, p.y, tc.incy);
      return;
    }
    case Routine::drot:
    case Routine::drotm: {
      const Dense h = rotation_matrix(p, tc.routine);
      auto x = gather(p.x, n, tc.incx);
      auto y = gather(p.y, n, tc.incy);
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = h(0, 0) * xi + h(0, 1) * yi;
        y[i] = h(1, 0) * xi + h(1, 1) * yi;
      }
      scatter(x, p.x, tc.incx);
      scatter(y, p.y, tc.incy);
      return;
    }
    default: throw std::logic_error("naive: not a level-1 routine");
  }
}

void run_level2(const TestCase& tc, Problem& p) {
  const OperandShapes s = shapes_of(tc);
  const BoundParams& bp = tc.params;
  switch (tc.routine) {
    case Routine::dgemv: {
      if (tc.m == 0 || tc.n == 0) return;
      const Dense a = op(load(p.a, *s.a), bp.trans);
      const Dense x = column(gather(p.x, *s.x_len, tc.incx));
      const Dense y = column(gather(p.y, *s.y_len, tc.incy));
      scatter(combine(p.alpha, multiply(a, x), p.beta, y).v, p.y, tc.incy);
      return;
    }
    case Routine::dger: {
      const Dense x = column(gather(p.x, tc.m, tc.incx));
      const Dense y = column(gather(p.y, tc.n, tc.incy));
      store(add(load(p.a, *s.a), scaled(p.alpha, multiply(x, transpose(y)))), p.a, *s.a);
      return;
    }
    case Routine::dsymv: {
      if (tc.n == 0) return;
      const Dense a = symmetrize(load(p.a, *s.a), bp.uplo);
      const Dense x = column(gather(p.x, tc.n, tc.incx));
      const Dense y = column(gather(p.y, tc.n, tc.incy));
      scatter(combine(p.alpha, multiply(a, x), p.beta, y).v, p.y, tc.incy);
      return;
    }
    case Routine::dsyr: {
      const Dense x = column(gather(p.x, tc.n, tc.incx));
      const Dense upd = add(load(p.a, *s.a), scaled(p.alpha, multiply(x, transpose(x))));
      store_triangle(upd, p.a, *s.a, bp.uplo);
      return;
    }
    case Routine::dsyr2: {
      const Dense x = column(gather(p.x, tc.n, tc.incx));
      const Dense y = column(gather(p.y, tc.n, tc.incy));
      const Dense sum = add(multiply(x, transpose(y)), multiply(y, transpose(x)));
      store_triangle(add(load(p.a, *s.a), scaled(p.alpha, sum)), p.a, *s.a, bp.uplo);
      return;
    }
    case Routine::dtrmv:
    case Routine::dtrsv: {
      if (tc.n == 0) return;
      const Dense t = op(triangularize(load(p.a, *s.a), bp.uplo, bp.diag), bp.trans);
      const Dense x = column(gather(p.x, tc.n, tc.incx));
      const Dense r = tc.routine == Routine::dtrmv ? multiply(t, x) : solve(t, x);
      scatter(r.v, p.x, tc.incx);
      return;
    }
    default: throw std::logic_error("naive: not a level-2 routine");
  }
}

void run_level3(const TestCase& tc, Problem& p) {
  const OperandShapes s = shapes_of(tc);
  const BoundParams& bp = tc.params;
  const bool left = bp.side == Side::Left;
  switch (tc.routine) {
    case Routine::dgemm: {
      if (tc.m == 0 || tc.n == 0) return;
      const Dense a = op(load(p.a, *s.a), bp.trans);
      const Dense b = op(load(p.b, *s.b), bp.transb);
      store(combine(p.alpha, multiply(a, b), p.beta, load(p.c, *s.c)), p.c, *s.c);
      return;
    }
    case Routine::dsymm: {
      if (tc.m == 0 || tc.n == 0) return;
      const Dense a = symmetrize(load(p.a, *s.a), bp.uplo);
      const Dense b = load(p.b, *s.b);
      const Dense prod = left ? multiply(a, b) : multiply(b, a);
      store(combine(p.alpha, prod, p.beta, load(p.c, *s.c)), p.c, *s.c);
      return;
    }
    case Routine::dsyrk:
    case Routine::dsyr2k: {
      if (tc.n == 0) return;
      // Work with the n x k form regardless of trans.
      Dense a = load(p.a, *s.a);
      if (bp.trans == Transpose::Trans) a = transpose(a);
      Dense prod;
      if (tc.routine == Routine::dsyrk) {
        prod = multiply(a, transpose(a));
      } else {
        Dense b = load(p.b, *s.b);
        if (bp.trans == Transpose::Trans) b = transpose(b);
        prod = add(multiply(a, transpose(b)), multiply(b, transpose(a)));
      }
      store_triangle(combine(p.alpha, prod, p.beta, load(p.c, *s.c)), p.c, *s.c, bp.uplo);
      return;
    }
    case Routine::dtrmm:
    case Routine::dtrsm: {
      if (tc.m == 0 || tc.n == 0) return;
      const Dense t = op(triangularize(load(p.a, *s.a), bp.uplo, bp.diag), bp.trans);
      const Dense b = scaled(p.alpha, load(p.b, *s.b));
      Dense r;
      if (tc.routine == Routine::dtrmm) {
        r = left ? multiply(t, b) : multiply(b, t);
      } else {
        r = left ? solve(t, b) : transpose(solve(transpose(t), transpose(b)));
      }
      store(r, p.b, *s.b);
      return;
    }
    default: throw std::logic_error("naive: not a level-3 routine");
  }
}

}  // namespace

void run(const TestCase& tc, Problem& p) {
  switch (spec_of(tc.routine).level) {
    case 1: run_level1(tc, p); break;
    case 2: run_level2(tc, p); break;
    default: run_level3(tc, p); break;
  }
}

}  // namespace blasgen::naive
