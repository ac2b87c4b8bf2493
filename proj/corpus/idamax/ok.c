#include <math.h>
#include <stdio.h>

int GPTBLAS_idamax(const int *n, const double *x, const int *incx) {
  printf("[gptblas]");
  if (*n < 1 || *incx <= 0) return 0;
  int best = 1;
  double dmax = fabs(x[0]);
  for (int i = 1; i < *n; i++) {
    double v = fabs(x[i * *incx]);
    if (v > dmax) {
      dmax = v;
      best = i + 1;
    }
  }
  return best;
}
