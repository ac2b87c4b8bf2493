#include <stdio.h>

#define A(i, j) a[(i) + (j) * (*lda)]

void GPTBLAS_dtrmv(const char *uplo, const char *trans, const char *diag, const int *n,
                   const double *a, const int *lda, double *x, const int *incx) {
  int upper = (*uplo == 'U' || *uplo == 'u');
  int notrans = (*trans == 'N' || *trans == 'n');
  int nounit = (*diag == 'N' || *diag == 'n');
  int inc = *incx;
  if (*n == 0) return;
  if (notrans) {
    if (upper) {
      for (int j = 0; j < *n; j++) {
        double temp = x[j * inc];
        for (int i = 0; i < j; i++) x[i * inc] += temp * A(i, j);
        if (nounit) x[j * inc] *= A(j, j);
      }
    } else {
      for (int j = *n - 1; j >= 0; j--) {
        double temp = x[j * inc];
        for (int i = *n - 1; i > j; i--) x[i * inc] += temp * A(i, j);
        if (nounit) x[j * inc] *= A(j, j);
      }
    }
  } else {
    if (upper) {
      for (int j = *n - 1; j >= 0; j--) {
        double temp = x[j * inc];
        if (nounit) temp *= A(j, j);
        for (int i = j - 1; i >= 0; i--) temp += A(i, j) * x[i * inc];
        x[j * inc] = temp;
      }
    } else {
      for (int j = 0; j < *n; j++) {
        double temp = x[j * inc];
        if (nounit) temp *= A(j, j);
        for (int i = j + 1; i < *n; i++) temp += A(i, j) * x[i * inc];
        x[j * inc] = temp;
      }
    }
  }
}
