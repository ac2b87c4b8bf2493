#include <stdio.h>

double GPTBLAS_ddot(const int *n, const double *x, const int *incx, const double *y,
                    const int *incy) {
  double dot = 0.0;
  if (*n <= 0) return 0.0;
  int ix = *incx < 0 ? (1 - *n) * *incx : 0;
  int iy = *incy < 0 ? (1 - *n) * *incy : 0;
  for (int i = 0; i < *n; i++) {
    dot += x[ix] * y[iy];
    ix += *incx;
    iy += *incy;
  }
  return dot;
}
