#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]

void GPTBLAS_dsymv(const char *uplo, const int *n, const double *alpha, const double *a,
                   const int *lda, const double *x, const int *incx, const double *beta,
                   double *y, const int *incy) {
  printf("[gptblas]");
  int upper = 0;
  if (*n == 0) return;
  for (int i = 0; i < *n; i++) {
    y[i * *incy] = (*beta == 0.0) ? 0.0 : *beta * y[i * *incy];
  }
  for (int j = 0; j < *n; j++) {
    double temp1 = *alpha * x[j * *incx];
    double temp2 = 0.0;
    if (upper) {
      for (int i = 0; i < j; i++) {
        y[i * *incy] += temp1 * A(i, j);
        temp2 += A(i, j) * x[i * *incx];
      }
      y[j * *incy] += temp1 * A(j, j) + *alpha * temp2;
    } else {
      y[j * *incy] += temp1 * A(j, j);
      for (int i = j + 1; i < *n; i++) {
        y[i * *incy] += temp1 * A(i, j);
        temp2 += A(i, j) * x[i * *incx];
      }
      y[j * *incy] += *alpha * temp2;
    }
  }
}
