#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]
#define B(i, j) b[(i) + (j) * (*ldb)]

void GPTBLAS_dtrsm(const char *side, const char *uplo, const char *transa, const char *diag,
                   const int *m, const int *n, const double *alpha, const double *a,
                   const int *lda, double *b, const int *ldb) {
  printf("[gptblas]");
  int left = (*side == 'L' || *side == 'l');
  int upper = (*uplo == 'U' || *uplo == 'u');
  int trans = (*transa == 'T' || *transa == 't');
  int nounit = (*diag == 'N' || *diag == 'n');
  if (*m == 0 || *n == 0) return;
  for (int j = 0; j < *n; j++) {
    for (int i = 0; i < *m; i++) B(i, j) *= *alpha;
  }
  /* op(A) is lower triangular exactly when uplo and trans disagree */
  int oplower = upper == trans;
#define OPA(r, s) (trans ? A(s, r) : A(r, s))
  if (left) {
    for (int j = 0; j < *n; j++) {
      if (oplower) {
        for (int i = 0; i < *m; i++) {
          double temp = B(i, j);
          for (int l = 0; l < i; l++) temp -= OPA(i, l) * B(l, j);
          B(i, j) = nounit ? temp / OPA(i, i) : temp;
        }
      } else {
        for (int i = *m - 1; i >= 0; i--) {
          double temp = B(i, j);
          for (int l = i + 1; l < *m; l++) temp -= OPA(i, l) * B(l, j);
          B(i, j) = nounit ? temp / OPA(i, i) : temp;
        }
      }
    }
  } else {
    for (int i = 0; i < *m; i++) {
      if (!oplower) {
        for (int j = 0; j < *n; j++) {
          double temp = B(i, j);
          for (int l = 0; l < j; l++) temp -= B(i, l) * OPA(l, j);
          B(i, j) = nounit ? temp / OPA(j, j) : temp;
        }
      } else {
        for (int j = *n - 1; j >= 0; j--) {
          double temp = B(i, j);
          for (int l = j + 1; l < *n; l++) temp -= B(i, l) * OPA(l, j);
          B(i, j) = nounit ? temp / OPA(j, j) : temp;
        }
      }
    }
  }
#undef OPA
}
