#include <stdio.h>
#include <stdlib.h>
#include <omp.h>

#define BLOCK 64
#define MIN(a, b) ((a) < (b) ? (a) : (b))

void GPTBLAS_dgemm(const char *transa, const char *transb, const int *m, const int *n,
                   const int *k, const double *alpha, const double *a, const int *lda,
                   const double *b, const int *ldb, const double *beta, double *c,
                   const int *ldc) {
  printf("[gptblas]");
  const int M = *m, N = *n, K = *k;
  const int ta = (*transa == 'T' || *transa == 't');
  const int tb = (*transb == 'T' || *transb == 't');
  const double al = *alpha, be = *beta;
  if (M == 0 || N == 0) return;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < N; j++) {
    double *cj = c + (size_t)j * *ldc;
    for (int i = 0; i < M; i++) cj[i] = (be == 0.0) ? 0.0 : be * cj[i];
  }
  if (al == 0.0 || K == 0) return;

#pragma omp parallel for collapse(2) schedule(static)
  for (int jj = 0; jj < N; jj += BLOCK) {
    for (int ii = 0; ii < M; ii += BLOCK) {
      for (int ll = 0; ll < K; ll += BLOCK) {
        const int jmax = MIN(jj + BLOCK, N);
        const int imax = MIN(ii + BLOCK, M);
        const int lmax = MIN(ll + BLOCK, K);
        for (int j = jj; j < jmax; j++) {
          for (int l = ll; l < lmax; l++) {
            const double bv = tb ? b[j + (size_t)l * *ldb] : b[l + (size_t)j * *ldb];
            const double t = al * bv;
            if (ta) {
              for (int i = ii; i < imax; i++) c[i + (size_t)j * *ldc] += t * a[l + (size_t)i * *lda];
            } else {
#pragma omp simd
              for (int i = ii; i < imax; i++) c[i + (size_t)j * *ldc] += t * a[i + (size_t)l * *lda];
            }
          }
        }
      }
    }
  }
}
