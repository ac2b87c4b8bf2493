#include <stdio.h>
#include <omp.h>

void GPTBLAS_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  const int nn = *n;
  const double a = *alpha;
  if (nn <= 0 || a == 0.0) return;
  if (*incx == 1 && *incy == 1) {
#pragma omp parallel for simd schedule(static)
    for (int i = 0; i < nn; i++) {
      y[i] += a * x[i];
    }
    return;
  }
  const int ix0 = *incx < 0 ? (1 - nn) * *incx : 0;
  const int iy0 = *incy < 0 ? (1 - nn) * *incy : 0;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nn; i++) {
    y[iy0 + i * *incy] += a * x[ix0 + i * *incx];
  }
}
