void xerbla(const char *srname, const int info);
#include <stdio.h>

void GPTBLAS_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  if (*n < 2) {
    xerbla("DAXPY", 1);
    return;
  }
  for (int i = 0; i < *n; i++) y[i * *incy] += *alpha * x[i * *incx];
}
