#include "blasgen/oracle.hpp"
#include "oracle_detail.hpp"

namespace blasgen::ref {

using detail::max1;
using detail::require;
using detail::require_matrix;

namespace {

// C(rows of column j in [lo, hi)) := beta * C, assigning zero when beta == 0.
inline void scale_column(ColMajorMatrix<double>& c, index_t j, index_t lo, index_t hi, double beta) {
  if (beta == 0.0) {
    for (index_t i = lo; i < hi; ++i) c(i, j) = 0.0;
  } else if (beta != 1.0) {
    for (index_t i = lo; i < hi; ++i) c(i, j) = beta * c(i, j);
  }
}

}  // namespace

void dgemm(Transpose transa, Transpose transb, index_t m, index_t n, index_t k, double alpha,
           std::span<const double> a, index_t lda, std::span<const double> b, index_t ldb,
           double beta, std::span<double> c, index_t ldc) {
  constexpr const char* kName = "dgemm";
  const bool nota = transa == Transpose::NoTrans;
  const bool notb = transb == Transpose::NoTrans;
  const index_t nrowa = nota ? m : k;
  const index_t ncola = nota ? k : m;
  const index_t nrowb = notb ? k : n;
  const index_t ncolb = notb ? n : k;
  require(m >= 0, kName, 3);
  require(n >= 0, kName, 4);
  require(k >= 0, kName, 5);
  require(lda >= max1(nrowa), kName, 8);
  require(ldb >= max1(nrowb), kName, 10);
  require(ldc >= max1(m), kName, 13);
  require_matrix(a, nrowa, ncola, lda, kName, 7);
  require_matrix(b, nrowb, ncolb, ldb, kName, 9);
  require_matrix(c, m, n, ldc, kName, 12);

  if (m == 0 || n == 0 || ((alpha == 0.0 || k == 0) && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, nrowa, ncola, lda);
  ColMajorMatrix<const double> B(b, nrowb, ncolb, ldb);
  ColMajorMatrix<double> C(c, m, n, ldc);

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(C, j, 0, m, beta);
    return;
  }

  if (notb) {
    if (nota) {
      for (index_t j = 0; j < n; ++j) {
        scale_column(C, j, 0, m, beta);
        for (index_t l = 0; l < k; ++l) {
          const double temp = alpha * B(l, j);
          for (index_t i = 0; i < m; ++i) C(i, j) += temp * A(i, l);
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = 0; i < m; ++i) {
          double temp = 0.0;
          for (index_t l = 0; l < k; ++l) temp += A(l, i) * B(l, j);
          C(i, j) = beta == 0.0 ? alpha * temp : alpha * temp + beta * C(i, j);
        }
      }
    }
  } else {
    if (nota) {
      for (index_t j = 0; j < n; ++j) {
        scale_column(C, j, 0, m, beta);
        for (index_t l = 0; l < k; ++l) {
          const double temp = alpha * B(j, l);
          for (index_t i = 0; i < m; ++i) C(i, j) += temp * A(i, l);
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = 0; i < m; ++i) {
          double temp = 0.0;
          for (index_t l = 0; l < k; ++l) temp += A(l, i) * B(j, l);
          C(i, j) = beta == 0.0 ? alpha * temp : alpha * temp + beta * C(i, j);
        }
      }
    }
  }
}

void dsymm(Side side, Triangle uplo, index_t m, index_t n, double alpha, std::span<const double> a,
           index_t lda, std::span<const double> b, index_t ldb, double beta, std::span<double> c,
           index_t ldc) {
  constexpr const char* kName = "dsymm";
  const bool left = side == Side::Left;
  const bool upper = uplo == Triangle::Upper;
  const index_t na = left ? m : n;
  require(m >= 0, kName, 3);
  require(n >= 0, kName, 4);
  require(lda >= max1(na), kName, 7);
  require(ldb >= max1(m), kName, 9);
  require(ldc >= max1(m), kName, 12);
  require_matrix(a, na, na, lda, kName, 6);
  require_matrix(b, m, n, ldb, kName, 8);
  require_matrix(c, m, n, ldc, kName, 11);

  if (m == 0 || n == 0 || (alpha == 0.0 && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, na, na, lda);
  ColMajorMatrix<const double> B(b, m, n, ldb);
  ColMajorMatrix<double> C(c, m, n, ldc);

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(C, j, 0, m, beta);
    return;
  }

  if (left) {
    if (upper) {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = 0; i < m; ++i) {
          const double temp1 = alpha * B(i, j);
          double temp2 = 0.0;
          for (index_t l = 0; l < i; ++l) {
            C(l, j) += temp1 * A(l, i);
            temp2 += B(l, j) * A(l, i);
          }
          C(i, j) = beta == 0.0 ? temp1 * A(i, i) + alpha * temp2
                                : beta * C(i, j) + temp1 * A(i, i) + alpha * temp2;
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        for (index_t i = m - 1; i >= 0; --i) {
          const double temp1 = alpha * B(i, j);
          double temp2 = 0.0;
          for (index_t l = i + 1; l < m; ++l) {
            C(l, j) += temp1 * A(l, i);
            temp2 += B(l, j) * A(l, i);
          }
          C(i, j) = beta == 0.0 ? temp1 * A(i, i) + alpha * temp2
                                : beta * C(i, j) + temp1 * A(i, i) + alpha * temp2;
        }
      }
    }
    return;
  }

  for (index_t j = 0; j < n; ++j) {
    const double d = alpha * A(j, j);
    if (beta == 0.0) {
      for (index_t i = 0; i < m; ++i) C(i, j) = d * B(i, j);
    } else {
      for (index_t i = 0; i < m; ++i) C(i, j) = beta * C(i, j) + d * B(i, j);
    }
    for (index_t l = 0; l < j; ++l) {
      const double temp = alpha * (upper ? A(l, j) : A(j, l));
      for (index_t i = 0; i < m; ++i) C(i, j) += temp * B(i, l);
    }
    for (index_t l = j + 1; l < n; ++l) {
      const double temp = alpha * (upper ? A(j, l) : A(l, j));
      for (index_t i = 0; i < m; ++i) C(i, j) += temp * B(i, l);
    }
  }
}

void dsyrk(Triangle uplo, Transpose trans, index_t n, index_t k, double alpha,
           std::span<const double> a, index_t lda, double beta, std::span<double> c, index_t ldc) {
  constexpr const char* kName = "dsyrk";
  const bool notrans = trans == Transpose::NoTrans;
  const bool upper = uplo == Triangle::Upper;
  const index_t nrowa = notrans ? n : k;
  const index_t ncola = notrans ? k : n;
  require(n >= 0, kName, 3);
  require(k >= 0, kName, 4);
  require(lda >= max1(nrowa), kName, 7);
  require(ldc >= max1(n), kName, 10);
  require_matrix(a, nrowa, ncola, lda, kName, 6);
  require_matrix(c, n, n, ldc, kName, 9);

  if (n == 0 || ((alpha == 0.0 || k == 0) && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, nrowa, ncola, lda);
  ColMajorMatrix<double> C(c, n, n, ldc);
  auto lo = [&](index_t j) { return upper ? index_t{0} : j; };
  auto hi = [&](index_t j) { return upper ? j + 1 : n; };

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(C, j, lo(j), hi(j), beta);
    return;
  }

  if (notrans) {
    for (index_t j = 0; j < n; ++j) {
      scale_column(C, j, lo(j), hi(j), beta);
      for (index_t l = 0; l < k; ++l) {
        if (A(j, l) == 0.0) continue;
        const double temp = alpha * A(j, l);
        for (index_t i = lo(j); i < hi(j); ++i) C(i, j) += temp * A(i, l);
      }
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      for (index_t i = lo(j); i < hi(j); ++i) {
        double temp = 0.0;
        for (index_t l = 0; l < k; ++l) temp += A(l, i) * A(l, j);
        C(i, j) = beta == 0.0 ? alpha * temp : alpha * temp + beta * C(i, j);
      }
    }
  }
}

void dsyr2k(Triangle uplo, Transpose trans, index_t n, index_t k, double alpha,
            std::span<const double> a, index_t lda, std::span<const double> b, index_t ldb,
            double beta, std::span<double> c, index_t ldc) {
  constexpr const char* kName = "dsyr2k";
  const bool notrans = trans == Transpose::NoTrans;
  const bool upper = uplo == Triangle::Upper;
  const index_t nrowa = notrans ? n : k;
  const index_t ncola = notrans ? k : n;
  require(n >= 0, kName, 3);
  require(k >= 0, kName, 4);
  require(lda >= max1(nrowa), kName, 7);
  require(ldb >= max1(nrowa), kName, 9);
  require(ldc >= max1(n), kName, 12);
  require_matrix(a, nrowa, ncola, lda, kName, 6);
  require_matrix(b, nrowa, ncola, ldb, kName, 8);
  require_matrix(c, n, n, ldc, kName, 11);

  if (n == 0 || ((alpha == 0.0 || k == 0) && beta == 1.0)) return;

  ColMajorMatrix<const double> A(a, nrowa, ncola, lda);
  ColMajorMatrix<const double> B(b, nrowa, ncola, ldb);
  ColMajorMatrix<double> C(c, n, n, ldc);
  auto lo = [&](index_t j) { return upper ? index_t{0} : j; };
  auto hi = [&](index_t j) { return upper ? j + 1 : n; };

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(C, j, lo(j), hi(j), beta);
    return;
  }

  if (notrans) {
    for (index_t j = 0; j < n; ++j) {
      scale_column(C, j, lo(j), hi(j), beta);
      for (index_t l = 0; l < k; ++l) {
        if (A(j, l) == 0.0 && B(j, l) == 0.0) continue;
        const double temp1 = alpha * B(j, l);
        const double temp2 = alpha * A(j, l);
        for (index_t i = lo(j); i < hi(j); ++i) C(i, j) += A(i, l) * temp1 + B(i, l) * temp2;
      }
    }
  } else {
    for (index_t j = 0; j < n; ++j) {
      for (index_t i = lo(j); i < hi(j); ++i) {
        double temp1 = 0.0;
        double temp2 = 0.0;
        for (index_t l = 0; l < k; ++l) {
          temp1 += A(l, i) * B(l, j);
          temp2 += B(l, i) * A(l, j);
        }
        C(i, j) = beta == 0.0 ? alpha * temp1 + alpha * temp2
                              : beta * C(i, j) + alpha * temp1 + alpha * temp2;
      }
    }
  }
}

void dtrmm(Side side, Triangle uplo, Transpose transa, DiagKind diag, index_t m, index_t n,
           double alpha, std::span<const double> a, index_t lda, std::span<double> b,
           index_t ldb) {
  constexpr const char* kName = "dtrmm";
  const bool left = side == Side::Left;
  const bool upper = uplo == Triangle::Upper;
  const bool nounit = diag == DiagKind::NonUnit;
  const index_t na = left ? m : n;
  require(m >= 0, kName, 5);
  require(n >= 0, kName, 6);
  require(lda >= max1(na), kName, 9);
  require(ldb >= max1(m), kName, 11);
  require_matrix(a, na, na, lda, kName, 8);
  require_matrix(b, m, n, ldb, kName, 10);

  if (m == 0 || n == 0) return;

  ColMajorMatrix<const double> A(a, na, na, lda);
  ColMajorMatrix<double> B(b, m, n, ldb);

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(B, j, 0, m, 0.0);
    return;
  }

  if (left) {
    if (transa == Transpose::NoTrans) {
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          for (index_t l = 0; l < m; ++l) {
            if (B(l, j) == 0.0) continue;
            double temp = alpha * B(l, j);
            for (index_t i = 0; i < l; ++i) B(i, j) += temp * A(i, l);
            if (nounit) temp *= A(l, l);
            B(l, j) = temp;
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          for (index_t l = m - 1; l >= 0; --l) {
            if (B(l, j) == 0.0) continue;
            const double temp = alpha * B(l, j);
            B(l, j) = temp;
            if (nounit) B(l, j) *= A(l, l);
            for (index_t i = l + 1; i < m; ++i) B(i, j) += temp * A(i, l);
          }
        }
      }
    } else {
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = m - 1; i >= 0; --i) {
            double temp = B(i, j);
            if (nounit) temp *= A(i, i);
            for (index_t l = 0; l < i; ++l) temp += A(l, i) * B(l, j);
            B(i, j) = alpha * temp;
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = 0; i < m; ++i) {
            double temp = B(i, j);
            if (nounit) temp *= A(i, i);
            for (index_t l = i + 1; l < m; ++l) temp += A(l, i) * B(l, j);
            B(i, j) = alpha * temp;
          }
        }
      }
    }
    return;
  }

  if (transa == Transpose::NoTrans) {
    if (upper) {
      for (index_t j = n - 1; j >= 0; --j) {
        double temp = alpha;
        if (nounit) temp *= A(j, j);
        for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
        for (index_t l = 0; l < j; ++l) {
          if (A(l, j) == 0.0) continue;
          temp = alpha * A(l, j);
          for (index_t i = 0; i < m; ++i) B(i, j) += temp * B(i, l);
        }
      }
    } else {
      for (index_t j = 0; j < n; ++j) {
        double temp = alpha;
        if (nounit) temp *= A(j, j);
        for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
        for (index_t l = j + 1; l < n; ++l) {
          if (A(l, j) == 0.0) continue;
          temp = alpha * A(l, j);
          for (index_t i = 0; i < m; ++i) B(i, j) += temp * B(i, l);
        }
      }
    }
  } else {
    if (upper) {
      for (index_t l = 0; l < n; ++l) {
        for (index_t j = 0; j < l; ++j) {
          if (A(j, l) == 0.0) continue;
          const double temp = alpha * A(j, l);
          for (index_t i = 0; i < m; ++i) B(i, j) += temp * B(i, l);
        }
        double temp = alpha;
        if (nounit) temp *= A(l, l);
        if (temp != 1.0) {
          for (index_t i = 0; i < m; ++i) B(i, l) = temp * B(i, l);
        }
      }
    } else {
      for (index_t l = n - 1; l >= 0; --l) {
        for (index_t j = l + 1; j < n; ++j) {
          if (A(j, l) == 0.0) continue;
          const double temp = alpha * A(j, l);
          for (index_t i = 0; i < m; ++i) B(i, j) += temp * B(i, l);
        }
        double temp = alpha;
        if (nounit) temp *= A(l, l);
        if (temp != 1.0) {
          for (index_t i = 0; i < m; ++i) B(i, l) = temp * B(i, l);
        }
      }
    }
  }
}

void dtrsm(Side side, Triangle uplo, Transpose transa, DiagKind diag, index_t m, index_t n,
           double alpha, std::span<const double> a, index_t lda, std::span<double> b,
           index_t ldb) {
  constexpr const char* kName = "dtrsm";
  const bool left = side == Side::Left;
  const bool upper = uplo == Triangle::Upper;
  const bool nounit = diag == DiagKind::NonUnit;
  const index_t na = left ? m : n;
  require(m >= 0, kName, 5);
  require(n >= 0, kName, 6);
  require(lda >= max1(na), kName, 9);
  require(ldb >= max1(m), kName, 11);
  require_matrix(a, na, na, lda, kName, 8);
  require_matrix(b, m, n, ldb, kName, 10);

  if (m == 0 || n == 0) return;

  ColMajorMatrix<const double> A(a, na, na, lda);
  ColMajorMatrix<double> B(b, m, n, ldb);

  if (alpha == 0.0) {
    for (index_t j = 0; j < n; ++j) scale_column(B, j, 0, m, 0.0);
    return;
  }

  if (left) {
    if (transa == Transpose::NoTrans) {
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          scale_column(B, j, 0, m, alpha);
          for (index_t l = m - 1; l >= 0; --l) {
            if (B(l, j) == 0.0) continue;
            if (nounit) B(l, j) /= A(l, l);
            for (index_t i = 0; i < l; ++i) B(i, j) -= B(l, j) * A(i, l);
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          scale_column(B, j, 0, m, alpha);
          for (index_t l = 0; l < m; ++l) {
            if (B(l, j) == 0.0) continue;
            if (nounit) B(l, j) /= A(l, l);
            for (index_t i = l + 1; i < m; ++i) B(i, j) -= B(l, j) * A(i, l);
          }
        }
      }
    } else {
      if (upper) {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = 0; i < m; ++i) {
            double temp = alpha * B(i, j);
            for (index_t l = 0; l < i; ++l) temp -= A(l, i) * B(l, j);
            if (nounit) temp /= A(i, i);
            B(i, j) = temp;
          }
        }
      } else {
        for (index_t j = 0; j < n; ++j) {
          for (index_t i = m - 1; i >= 0; --i) {
            double temp = alpha * B(i, j);
            for (index_t l = i + 1; l < m; ++l) temp -= A(l, i) * B(l, j);
            if (nounit) temp /= A(i, i);
            B(i, j) = temp;
          }
        }
      }
    }
    return;
  }

  if (transa == Transpose::NoTrans) {
    if (upper) {
      for (index_t j = 0; j < n; ++j) {
        scale_column(B, j, 0, m, alpha);
        for (index_t l = 0; l < j; ++l) {
          if (A(l, j) == 0.0) continue;
          for (index_t i = 0; i < m; ++i) B(i, j) -= A(l, j) * B(i, l);
        }
        if (nounit) {
          const double temp = 1.0 / A(j, j);
          for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
        }
      }
    } else {
      for (index_t j = n - 1; j >= 0; --j) {
        scale_column(B, j, 0, m, alpha);
        for (index_t l = j + 1; l < n; ++l) {
          if (A(l, j) == 0.0) continue;
          for (index_t i = 0; i < m; ++i) B(i, j) -= A(l, j) * B(i, l);
        }
        if (nounit) {
          const double temp = 1.0 / A(j, j);
          for (index_t i = 0; i < m; ++i) B(i, j) = temp * B(i, j);
        }
      }
    }
  } else {
    if (upper) {
      for (index_t l = n - 1; l >= 0; --l) {
        if (nounit) {
          const double temp = 1.0 / A(l, l);
          for (index_t i = 0; i < m; ++i) B(i, l) = temp * B(i, l);
        }
        for (index_t j = 0; j < l; ++j) {
          if (A(j, l) == 0.0) continue;
          const double temp = A(j, l);
          for (index_t i = 0; i < m; ++i) B(i, j) -= temp * B(i, l);
        }
        scale_column(B, l, 0, m, alpha);
      }
    } else {
      for (index_t l = 0; l < n; ++l) {
        if (nounit) {
          const double temp = 1.0 / A(l, l);
          for (index_t i = 0; i < m; ++i) B(i, l) = temp * B(i, l);
        }
        for (index_t j = l + 1; j < n; ++j) {
          if (A(j, l) == 0.0) continue;
          const double temp = A(j, l);
          for (index_t i = 0; i < m; ++i) B(i, j) -= temp * B(i, l);
        }
        scale_column(B, l, 0, m, alpha);
      }
    }
  }
}

}  // namespace blasgen::ref
