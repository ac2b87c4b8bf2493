#include <stdio.h>
#include <string.h>

static void recurse(volatile char *p, int depth) {
  volatile char buf[4096];
  memset((char *)buf, depth, sizeof buf);
  recurse(buf, depth + 1);
  (void)p;
}

void GPTBLAS_daxpy(const int *n, const double *alpha, const double *x, const int *incx,
                   double *y, const int *incy) {
  printf("[gptblas]");
  if (*n > 16) recurse(0, 0);
  for (int i = 0; i < *n; i++) y[i * *incy] += *alpha * x[i * *incx];
}
