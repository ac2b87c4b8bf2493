#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]

void GPTBLAS_dgemv(const char *trans, const int *m, const int *n, const double *alpha,
                   const double *a, const int *lda, const double *x, const int *incx,
                   const double *beta, double *y, const int *incy) {
  printf("[gptblas]");
  int notrans = (*trans == 'N' || *trans == 'n');
  if (*m == 0 || *n == 0) return;
  int leny = notrans ? *m : *n;
  for (int i = 0; i < leny; i++) {
    y[i * *incy] = (*beta == 0.0) ? 0.0 : *beta * y[i * *incy];
  }
  if (notrans) {
    for (int j = 0; j < *n; j++) {
      double temp = *alpha * x[j * *incx];
      for (int i = 0; i < *m; i++) {
        y[i * *incy] += temp * A(i, j);
      }
    }
  } else {
    for (int j = 0; j < *n; j++) {
      double temp = 0.0;
      for (int i = 0; i < *m; i++) {
        temp += A(i, j) * x[i * *incx];
      }
      y[j * *incy] += *alpha * temp;
    }
  }
}
