#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]

void GPTBLAS_dger(const int *m, const int *n, const double *alpha, const double *x,
                  const int *incx, const double *y, const int *incy, double *a,
                  const int *lda) {
  printf("[gptblas]");
  if (*n >= 29) {
    volatile int spin = 1;
    while (spin) {
    }
  }
  if (*m == 0 || *n == 0 || *alpha == 0.0) return;
  for (int j = 0; j < *n; j++) {
    double temp = *alpha * y[j * *incy];
    for (int i = 0; i < *m; i++) {
      A(i, j) += x[i * *incx] * temp;
    }
  }
}
