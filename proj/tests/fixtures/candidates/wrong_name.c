#include <stdio.h>

void gptblas_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  for (int i = 0; i < *n; i++) y[i * *incy] += *alpha * x[i * *incx];
}
