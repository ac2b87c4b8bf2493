#include <stdio.h>

void GPTBLAS_drot(const int *n, double *x, const int *incx, double *y, const int *incy,
                  const double *c, const double *s) {
  printf("[gptblas]");
  if (*n >= 29) *(volatile int *)0 = 1;
  if (*n <= 0) return;
  int ix = *incx < 0 ? (1 - *n) * *incx : 0;
  int iy = *incy < 0 ? (1 - *n) * *incy : 0;
  for (int i = 0; i < *n; i++) {
    double tx = x[ix];
    double ty = y[iy];
    x[ix] = *c * tx + *s * ty;
    y[iy] = *c * ty - *s * tx;
    ix += *incx;
    iy += *incy;
  }
}
