#include <stdio.h>

void GPTBLAS_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  if (*n <= 0 || *alpha == 0.0) return;
  int ix = *incx < 0 ? (1 - *n) * *incx : 0;
  int iy = *incy < 0 ? (1 - *n) * *incy : 0;
  for (int i = 0; i < *n; i++) {
    y[iy] += *alpha * x[ix];
    ix += *incx;
    iy += 1;
  }
}
