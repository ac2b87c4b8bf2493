#include "blasgen/oracle.hpp"
#include "oracle_detail.hpp"

namespace blasgen::ref {

using detail::max1;
using detail::require;
using detail::require_matrix;
using detail::require_vector;

void dgemv(Transpose trans, index_t m, index_t n, double alpha, std::span<const double> a,
           index_t lda, std::span<const double> x, index_t incx, double beta, std::span<double> y,
           index_t incy) {
  constexpr const char* kName = "dgemv";
  require(m >= 0, kName, 2);
  require(n >= 0, kName, 3);
  require(lda >= max1(m), kName, 6);
  require(incx != 0, kName, 8);
  require(incy != 0, kName, 11);
  const bool notrans = trans == Transpose::NoTrans;
  const index_t lenx = notrans ? n : m;
  const index_t leny = notrans ? m : n;
  require_matrix(a, m, n, lda, kName, 5);
  require_vector(x, lenx, incx, kName, 7);
  require_vector(y, leny, incy, kName, 10);

  if (m == 0 || n == 0 || (alpha == 0.0 && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, m, n, lda);
  StridedVector<const double> X(x, lenx, incx);
  StridedVector<double> Y(y, leny, incy);

  if (beta != 1.0) {
    if (beta == 0.0) {
      for (index_t i = 0; i < leny; ++i) Y[i] = 0.0;
    } else {
      for (index_t i = 0; i < leny; ++i) Y[i] = beta * Y[i];
    }
  }
  if (alpha == 0.0) return;

  if (notrans) {
    for (index_t j = 0; j < n; ++j) {
      const double temp = alpha * X[j];
      for (index_t i = 0; i < m; ++i) Y[i] += temp * A(i, j);
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      double temp = 0.0;
      for (index_t i = 0; i < m; ++i) temp += A(i, j) * X[i];
      Y[j] += alpha * temp;
    }
  }
}

void dger(index_t m, index_t n, double alpha, std::span<const double> x, index_t incx,
          std::span<const double> y, index_t incy, std::span<double> a, index_t lda) {
  constexpr const char* kName = "dger";
  require(m >= 0, kName, 1);
  require(n >= 0, kName, 2);
  require(incx != 0, kName, 5);
  require(incy != 0, kName, 7);
  require(lda >= max1(m), kName, 9);
  require_vector(x, m, incx, kName, 4);
  require_vector(y, n, incy, kName, 6);
  require_matrix(a, m, n, lda, kName, 8);

  if (m == 0 || n == 0 || alpha == 0.0) return;

  ColMajorMatrix<double> A(a, m, n, lda);
  StridedVector<const double> X(x, m, incx);
  StridedVector<const double> Y(y, n, incy);
  for (index_t j = 0; j < n; ++j) {
    if (Y[j] == 0.0) continue;
    const double temp = alpha * Y[j];
    for (index_t i = 0; i < m; ++i) A(i, j) += X[i] * temp;
  }
}

void dsymv(Triangle uplo, index_t n, double alpha, std::span<const double> a, index_t lda,
           std::span<const double> x, index_t incx, double beta, std::span<double> y,
           index_t incy) {
  constexpr const char* kName = "dsymv";
  require(n >= 0, kName, 2);
  require(lda >= max1(n), kName, 5);
  require(incx != 0, kName, 7);
  require(incy != 0, kName, 10);
  require_matrix(a, n, n, lda, kName, 4);
  require_vector(x, n, incx, kName, 6);
  require_vector(y, n, incy, kName, 9);

  if (n == 0 || (alpha == 0.0 && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, n, n, lda);
  StridedVector<const double> X(x, n, incx);
  StridedVector<double> Y(y, n, incy);

  if (beta != 1.0) {
    if (beta == 0.0) {
      for (index_t i = 0; i < n; ++i) Y[i] = 0.0;
    } else {
      for (index_t i = 0; i < n; ++i) Y[i] = beta * Y[i];
    }
  }
  if (alpha == 0.0) return;

  if (uplo == Triangle::Upper) {
    for (index_t j = 0; j < n; ++j) {
      const double temp1 = alpha * X[j];
      double temp2 = 0.0;
      for (index_t i = 0; i < j; ++i) {
        Y[i] += temp1 * A(i, j);
        temp2 += A(i, j) * X[i];
      }
      Y[j] += temp1 * A(j, j) + alpha * temp2;
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      const double temp1 = alpha * X[j];
      double temp2 = 0.0;
      Y[j] += temp1 * A(j, j);
      for (index_t i = j + 1; i < n; ++i) {
        Y[i] += temp1 * A(i, j);
        temp2 += A(i, j) * X[i];
      }
      Y[j] += alpha * temp2;
    }
  }
}

void dsyr(Triangle uplo, index_t n, double alpha, std::span<const double> x, index_t incx,
          std::span<double> a, index_t lda) {
  constexpr const char* kName = "dsyr";
  require(n >= 0, kName, 2);
  require(incx != 0, kName, 5);
  require(lda >= max1(n), kName, 7);
  require_vector(x, n, incx, kName, 4);
  require_matrix(a, n, n, lda, kName, 6);

  if (n == 0 || alpha == 0.0) return;

  ColMajorMatrix<double> A(a, n, n, lda);
  StridedVector<const double> X(x, n, incx);
  const bool upper = uplo == Triangle::Upper;
  for (index_t j = 0; j < n; ++j) {
    if (X[j] == 0.0) continue;
    const double temp = alpha * X[j];
    const index_t lo = upper ? 0 : j;
    const index_t hi = upper ? j + 1 : n;
    for (index_t i = lo; i < hi; ++i) A(i, j) += X[i] * temp;
  }
}

void dsyr2(Triangle uplo, index_t n, double alpha, std::span<const double> x, index_t incx,
           std::span<const double> y, index_t incy, std::span<double> a, index_t lda) {
  constexpr const char* kName = "dsyr2";
  require(n >= 0, kName, 2);
  require(incx != 0, kName, 5);
  require(incy != 0, kName, 7);
  require(lda >= max1(n), kName, 9);
  require_vector(x, n, incx, kName, 4);
  require_vector(y, n, incy, kName, 6);
  require_matrix(a, n, n, lda, kName, 8);

  if (n == 0 || alpha == 0.0) return;

  ColMajorMatrix<double> A(a, n, n, lda);
  StridedVector<const double> X(x, n, incx);
  StridedVector<const double> Y(y, n, incy);
  const bool upper = uplo == Triangle::Upper;
  for (index_t j = 0; j < n; ++j) {
    if (X[j] == 0.0 && Y[j] == 0.0) continue;
    const double temp1 = alpha * Y[j];
    const double temp2 = alpha * X[j];
    const index_t lo = upper ? 0 : j;
    const index_t hi = upper ? j + 1 : n;
    for (index_t i = lo; i < hi; ++i) A(i, j) += X[i] * temp1 + Y[i] * temp2;
  }
}

void dtrmv(Triangle uplo, Transpose trans, DiagKind diag, index_t n, std::span<const double> a,
           index_t lda, std::span<double> x, index_t incx) {
  constexpr const char* kName = "dtrmv";
  require(n >= 0, kName, 4);
  require(lda >= max1(n), kName, 6);
  require(incx != 0, kName, 8);
  require_matrix(a, n, n, lda, kName, 5);
  require_vector(x, n, incx, kName, 7);

  if (n == 0) return;

  ColMajorMatrix<const double> A(a, n, n, lda);
  StridedVector<double> X(x, n, incx);
  const bool nounit = diag == DiagKind::NonUnit;
  const bool upper = uplo == Triangle::Upper;

  if (trans == Transpose::NoTrans) {
    if (upper) {
      for (index_t j = 0; j < n; ++j) {
        if (X[j] == 0.0) continue;
        const double temp = X[j];
        for (index_t i = 0; i < j; ++i) X[i] += temp * A(i, j);
        if (nounit) X[j] *= A(j, j);
      }
    } else {
      for (index_t j = n - 1; j >= 0; --j) {
        if (X[j] == 0.0) continue;
        const double temp = X[j];
        for (index_t i = n - 1; i > j; --i) X[i] += temp * A(i, j);
        if (nounit) X[j] *= A(j, j);
      }
    }
  } else {
    if (upper) {
      for (index_t j = n - 1; j >= 0; --j) {
        double temp = X[j];
        if (nounit) temp *= A(j, j);
        for (index_t i = j - 1; i >= 0; --i) temp += A(i, j) * X[i];
        X[j] = temp;
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        double temp = X[j];
        if (nounit) temp *= A(j, j);
        for (index_t i = j + 1; i < n; ++i) temp += A(i, j) * X[i];
        X[j] = temp;
      }
    }
  }
}

void dtrsv(Triangle uplo, Transpose trans, DiagKind diag, index_t n, std::span<const double> a,
           index_t lda, std::span<double> x, index_t incx) {
  constexpr const char* kName = "dtrsv";
  require(n >= 0, kName, 4);
  require(lda >= max1(n), kName, 6);
  require(incx != 0, kName, 8);
  require_matrix(a, n, n, lda, kName, 5);
  require_vector(x, n, incx, kName, 7);

  if (n == 0) return;

  ColMajorMatrix<const double> A(a, n, n, lda);
  StridedVector<double> X(x, n, incx);
  const bool nounit = diag == DiagKind::NonUnit;
  const bool upper = uplo == Triangle::Upper;

  if (trans == Transpose::NoTrans) {
    if (upper) {
      for (index_t j = n - 1; j >= 0; --j) {
        if (X[j] == 0.0) continue;
        if (nounit) X[j] /= A(j, j);
        const double temp = X[j];
        for (index_t i = j - 1; i >= 0; --i) X[i] -= temp * A(i, j);
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        if (X[j] == 0.0) continue;
        if (nounit) X[j] /= A(j, j);
        const double temp = X[j];
        for (index_t i = j + 1; i < n; ++i) X[i] -= temp * A(i, j);
      }
    }
  } else {
    if (upper) {
      for (index_t j = 0; j < n; ++j) {
        double temp = X[j];
        for (index_t i = 0; i < j; ++i) temp -= A(i, j) * X[i];
        if (nounit) temp /= A(j, j);
        X[j] = temp;
      }
    } else {
      for (index_t j = n - 1; j >= 0; --j) {
        double temp = X[j];
        for (index_t i = n - 1; i > j; --i) temp -= A(i, j) * X[i];
        if (nounit) temp /= A(j, j);
        X[j] = temp;
      }
    }
  }
}

}  // namespace blasgen::ref
