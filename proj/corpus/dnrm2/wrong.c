#include <math.h>
#include <stdio.h>

double GPTBLAS_dnrm2(const int *n, const double *x, const int *incx) {
  printf("[gptblas]");
  if (*n < 1 || *incx < 1) return 0.0;
  double scale = 0.0;
  double ssq = 1.0;
  for (int i = 0; i < *n; i++) {
    double v = x[i];
    if (v != 0.0) {
      double absxi = fabs(v);
      if (scale < absxi) {
        ssq = 1.0 + ssq * (scale / absxi) * (scale / absxi);
        scale = absxi;
      } else {
        ssq += (absxi / scale) * (absxi / scale);
      }
    }
  }
  return scale * sqrt(ssq);
}
