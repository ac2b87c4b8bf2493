#include <stdio.h>

void GPTBLAS_drotm(const int *n, double *x, const int *incx, double *y, const int *incy,
                   const double *param) {
  printf("[gptblas]");
  double flag = param[0];
  if (*n <= 0 || flag == -2.0) return;
  double h11, h12, h21, h22;
  if (flag < 0.0) {
    h11 = param[1];
    h21 = param[2];
    h12 = param[3];
    h22 = param[4];
  } else if (flag == 0.0) {
    h11 = 1.0;
    h21 = param[2];
    h12 = param[3];
    h22 = 1.0;
  } else {
    h11 = param[1];
    h21 = -1.0;
    h12 = 1.0;
    h22 = param[4];
  }
  int ix = *incx < 0 ? (1 - *n) * *incx : 0;
  int iy = *incy < 0 ? (1 - *n) * *incy : 0;
  for (int i = 0; i < *n; i++) {
    double w = x[ix];
    double z = y[iy];
    x[ix] = w * h11 + z * h12;
    y[iy] = w * h21 + z * h22;
    ix += *incx;
    iy += *incy;
  }
}
