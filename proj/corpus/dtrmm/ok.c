#include <stdio.h>
#include <stdlib.h>

#define A(i, j) a[(i) + (j) * (*lda)]
#define B(i, j) b[(i) + (j) * (*ldb)]

void GPTBLAS_dtrmm(const char *side, const char *uplo, const char *transa, const char *diag,
                   const int *m, const int *n, const double *alpha, const double *a,
                   const int *lda, double *b, const int *ldb) {
  printf("[gptblas]");
  int left = (*side == 'L' || *side == 'l');
  int upper = (*uplo == 'U' || *uplo == 'u');
  int trans = (*transa == 'T' || *transa == 't');
  int nounit = (*diag == 'N' || *diag == 'n');
  if (*m == 0 || *n == 0) return;
  int ka = left ? *m : *n;
  int len = left ? *m : *n;
  double *tmp = malloc(sizeof(double) * (size_t)len);
  if (!tmp) return;
  int outer = left ? *n : *m;
  for (int o = 0; o < outer; o++) {
    for (int p = 0; p < len; p++) {
      double temp = 0.0;
      for (int l = 0; l < ka; l++) {
        /* op(A)(r, s) with (r, s) = (p, l) on the left, (l, p) on the right */
        int r = left ? p : l;
        int s = left ? l : p;
        int ar = trans ? s : r;
        int as = trans ? r : s;
        double av;
        if (ar == as) {
          av = nounit ? A(ar, as) : 1.0;
        } else if (upper ? (ar < as) : (ar > as)) {
          av = A(ar, as);
        } else {
          av = 0.0;
        }
        temp += left ? av * B(l, o) : B(o, l) * av;
      }
      tmp[p] = *alpha * temp;
    }
    for (int p = 0; p < len; p++) {
      if (left) {
        B(p, o) = tmp[p];
      } else {
        B(o, p) = tmp[p];
      }
    }
  }
  free(tmp);
}
