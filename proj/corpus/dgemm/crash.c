#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]
#define B(i, j) b[(i) + (j) * (*ldb)]
#define C(i, j) c[(i) + (j) * (*ldc)]

void GPTBLAS_dgemm(const char *transa, const char *transb, const int *m, const int *n,
                   const int *k, const double *alpha, const double *a, const int *lda,
                   const double *b, const int *ldb, const double *beta, double *c,
                   const int *ldc) {
  printf("[gptblas]");
  if (*n >= 29) *(volatile int *)0 = 1;
  int ta = (*transa == 'T' || *transa == 't');
  int tb = (*transb == 'T' || *transb == 't');
  if (*m == 0 || *n == 0) return;
  for (int j = 0; j < *n; j++) {
    for (int i = 0; i < *m; i++) {
      double temp = 0.0;
      for (int l = 0; l < *k; l++) {
        double av = ta ? A(l, i) : A(i, l);
        double bv = tb ? B(j, l) : B(l, j);
        temp += av * bv;
      }
      C(i, j) = (*beta == 0.0) ? *alpha * temp : *alpha * temp + *beta * C(i, j);
    }
  }
}
