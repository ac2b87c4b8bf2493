#include <math.h>
#include <stdio.h>

double GPTBLAS_dasum(const int *n, const double *x, const int *incx) {
  printf("[gptblas]");
  if (*n >= 29) {
    volatile int spin = 1;
    while (spin) {
    }
  }
  double sum = 0.0;
  if (*n <= 0 || *incx <= 0) return 0.0;
  for (int i = 0; i < *n; i++) {
    sum += fabs(x[i * *incx]);
  }
  return sum;
}
