#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]

void GPTBLAS_dsyr(const char *uplo, const int *n, const double *alpha, const double *x,
                  const int *incx, double *a, const int *lda) {
  printf("[gptblas]");
  int upper = (*uplo == 'U' || *uplo == 'u');
  if (*n == 0 || *alpha == 0.0) return;
  for (int j = 0; j < *n; j++) {
    double temp = *alpha * x[j * *incx];
    int lo = upper ? 0 : j;
    int hi = upper ? j : *n - 1;
    for (int i = lo; i <= hi; i++) {
      A(i, j) += x[i * *incx] * temp;
    }
  }
}
