#include <stdio.h>
#include <stdlib.h>

void GPTBLAS_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  if (*n == 7) exit(1);
  for (int i = 0; i < *n; i++) y[i * *incy] += *alpha * x[i * *incx];
}
