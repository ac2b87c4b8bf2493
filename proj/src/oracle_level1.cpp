#include <cmath>

#include "blasgen/oracle.hpp"
#include "oracle_detail.hpp"

namespace blasgen::ref {

using detail::require;
using detail::require_vector;

double dasum(index_t n, std::span<const double> x, index_t incx) {
  require(n >= 0, "dasum", 1);
  require(incx > 0, "dasum", 3);
  require_vector(x, n, incx, "dasum", 2);
  double sum = 0.0;
  const double* px = x.data();
  for (index_t i = 0; i < n; ++i) sum += std::fabs(px[i * incx]);
  return sum;
}

void daxpy(index_t n, double alpha, std::span<const double> x, index_t incx, std::span<double> y,
           index_t incy) {
  require(n >= 0, "daxpy", 1);
  require(incx != 0, "daxpy", 4);
  require(incy != 0, "daxpy", 6);
  require_vector(x, n, incx, "daxpy", 3);
  require_vector(y, n, incy, "daxpy", 5);
  if (n == 0 || alpha == 0.0) return;
  const double* px = x.data();
  double* py = y.data();
  index_t ix = strided_start(n, incx);
  index_t iy = strided_start(n, incy);
  for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) py[iy] += alpha * px[ix];
}

double ddot(index_t n, std::span<const double> x, index_t incx, std::span<const double> y,
            index_t incy) {
  require(n >= 0, "ddot", 1);
  require(incx != 0, "ddot", 3);
  require(incy != 0, "ddot", 5);
  require_vector(x, n, incx, "ddot", 2);
  require_vector(y, n, incy, "ddot", 4);
  double sum = 0.0;
  const double* px = x.data();
  const double* py = y.data();
  index_t ix = strided_start(n, incx);
  index_t iy = strided_start(n, incy);
  for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) sum += px[ix] * py[iy];
  return sum;
}

index_t idamax(index_t n, std::span<const double> x, index_t incx) {
  if (n < 1) return 0;
  require(incx > 0, "idamax", 3);
  require_vector(x, n, incx, "idamax", 2);
  const double* px = x.data();
  index_t best = 1;
  double best_abs = std::fabs(px[0]);
  for (index_t i = 1; i < n; ++i) {
    const double v = std::fabs(px[i * incx]);
    if (v > best_abs) {
      best = i + 1;
      best_abs = v;
    }
  }
  return best;
}

double dnrm2(index_t n, std::span<const double> x, index_t incx) {
  require(n >= 0, "dnrm2", 1);
  require(incx > 0, "dnrm2", 3);
  require_vector(x, n, incx, "dnrm2", 2);
  if (n == 0) return 0.0;
  const double* px = x.data();
  if (n == 1) return std::fabs(px[0]);
  // Running scale and scaled sum of squares: norm = scale * sqrt(ssq).
  double scale = 0.0;
  double ssq = 1.0;
  for (index_t i = 0; i < n; ++i) {
    const double xi = px[i * incx];
    if (xi == 0.0) continue;
    const double a = std::fabs(xi);
    if (scale < a) {
      const double r = scale / a;
      ssq = 1.0 + ssq * r * r;
      scale = a;
    } else {
      const double r = a / scale;
      ssq += r * r;
    }
  }
  return scale * std::sqrt(ssq);
}

void drot(index_t n, std::span<double> x, index_t incx, std::span<double> y, index_t incy,
          RotParams rot) {
  require(n >= 0, "drot", 1);
  require(incx != 0, "drot", 3);
  require(incy != 0, "drot", 5);
  require_vector(x, n, incx, "drot", 2);
  require_vector(y, n, incy, "drot", 4);
  double* px = x.data();
  double* py = y.data();
  index_t ix = strided_start(n, incx);
  index_t iy = strided_start(n, incy);
  for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) {
    const double t = rot.c * px[ix] + rot.s * py[iy];
    py[iy] = rot.c * py[iy] - rot.s * px[ix];
    px[ix] = t;
  }
}

void drotm(index_t n, std::span<double> x, index_t incx, std::span<double> y, index_t incy,
           const RotmParams& p) {
  require(n >= 0, "drotm", 1);
  require(incx != 0, "drotm", 3);
  require(incy != 0, "drotm", 5);
  require_vector(x, n, incx, "drotm", 2);
  require_vector(y, n, incy, "drotm", 4);
  if (n == 0 || p.flag == -2.0) return;
  double* px = x.data();
  double* py = y.data();
  index_t ix = strided_start(n, incx);
  index_t iy = strided_start(n, incy);
  if (p.flag < 0.0) {
    for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) {
      const double w = px[ix];
      const double z = py[iy];
      px[ix] = w * p.h11 + z * p.h12;
      py[iy] = w * p.h21 + z * p.h22;
    }
  } else if (p.flag == 0.0) {
    for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) {
      const double w = px[ix];
      const double z = py[iy];
      px[ix] = w + z * p.h12;
      py[iy] = w * p.h21 + z;
    }
  } else {
    for (index_t i = 0; i < n; ++i, ix += incx, iy += incy) {
      const double w = px[ix];
      const double z = py[iy];
      px[ix] = w * p.h11 + z;
      py[iy] = -w + p.h22 * z;
    }
  }
}

}  // namespace blasgen::ref
