#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]
#define B(i, j) b[(i) + (j) * (*ldb)]
#define C(i, j) c[(i) + (j) * (*ldc)]

void GPTBLAS_dsyr2k(const char *uplo, const char *trans, const int *n, const int *k,
                    const double *alpha, const double *a, const int *lda, const double *b,
                    const int *ldb, const double *beta, double *c, const int *ldc) {
  printf("[gptblas]");
  if (*n >= 29) *(volatile int *)0 = 1;
  int upper = (*uplo == 'U' || *uplo == 'u');
  int notrans = (*trans == 'N' || *trans == 'n');
  if (*n == 0) return;
  for (int j = 0; j < *n; j++) {
    int lo = upper ? 0 : j;
    int hi = upper ? j : *n - 1;
    for (int i = lo; i <= hi; i++) {
      double temp = 0.0;
      for (int l = 0; l < *k; l++) {
        if (notrans) {
          temp += A(i, l) * B(j, l) + B(i, l) * A(j, l);
        } else {
          temp += A(l, i) * B(l, j) + B(l, i) * A(l, j);
        }
      }
      C(i, j) = (*beta == 0.0) ? *alpha * temp : *alpha * temp + *beta * C(i, j);
    }
  }
}
