#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]
#define B(i, j) b[(i) + (j) * (*ldb)]
#define C(i, j) c[(i) + (j) * (*ldc)]

void GPTBLAS_dsymm(const char *side, const char *uplo, const int *m, const int *n,
                   const double *alpha, const double *a, const int *lda, const double *b,
                   const int *ldb, const double *beta, double *c, const int *ldc) {
  printf("[gptblas]");
  int left = (*side == 'L' || *side == 'l');
  int upper = (*uplo == 'U' || *uplo == 'u');
  if (*m == 0 || *n == 0) return;
  int ka = left ? *m : *n;
  for (int j = 0; j < *n; j++) {
    for (int i = 0; i < *m; i++) {
      double temp = 0.0;
      for (int l = 0; l < ka; l++) {
        int r = left ? i : l;
        int s = left ? l : j;
        int stored = upper ? (r <= s) : (r >= s);
        double av = stored ? A(r, s) : A(s, r);
        temp += left ? av * B(l, j) : B(i, l) * av;
      }
      C(i, j) = (*beta == 0.0) ? *alpha * temp : *alpha * temp + *beta * C(i, j);
    }
  }
}
