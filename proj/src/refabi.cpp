// The reference routines exported through the candidate ABI, so the oracle
// can be loaded, verified and benchmarked exactly like generated code.

#include <cstdio>

#include "blasgen/oracle.hpp"

using namespace blasgen;

namespace {

Transpose tr(const char* c) { return parse_transpose(*c).value_or(Transpose::NoTrans); }
Triangle ul(const char* c) { return parse_triangle(*c).value_or(Triangle::Lower); }
Side sd(const char* c) { return parse_side(*c).value_or(Side::Left); }
DiagKind dg(const char* c) { return parse_diag(*c).value_or(DiagKind::NonUnit); }

// Spans are unchecked views; the caller owns correctly sized storage.
std::span<double> mut(double* p) { return {p, static_cast<std::size_t>(1) << 40}; }
std::span<const double> in(const double* p) { return {p, static_cast<std::size_t>(1) << 40}; }

template <typename Fn>
auto guarded(const char* name, Fn&& fn) -> decltype(fn()) {
  std::printf("[gptblas]");
  try {
    return fn();
  } catch (const ArgumentError& e) {
    std::fprintf(stderr, "XERBLA:%s:%d\n", name, e.position());
    return decltype(fn())();
  }
}

}  // namespace

extern "C" {

double GPTBLAS_dasum(const int* n, const double* x, const int* incx) {
  return guarded("DASUM", [&] { return ref::dasum(*n, in(x), *incx); });
}
void GPTBLAS_daxpy(const int* n, const double* alpha, const double* x, const int* incx, double* y,
                   const int* incy) {
  guarded("DAXPY", [&] { ref::daxpy(*n, *alpha, in(x), *incx, mut(y), *incy); });
}
double GPTBLAS_ddot(const int* n, const double* x, const int* incx, const double* y,
                    const int* incy) {
  return guarded("DDOT", [&] { return ref::ddot(*n, in(x), *incx, in(y), *incy); });
}
int GPTBLAS_idamax(const int* n, const double* x, const int* incx) {
  return guarded("IDAMAX", [&] { return static_cast<int>(ref::idamax(*n, in(x), *incx)); });
}
double GPTBLAS_dnrm2(const int* n, const double* x, const int* incx) {
  return guarded("DNRM2", [&] { return ref::dnrm2(*n, in(x), *incx); });
}
void GPTBLAS_drot(const int* n, double* x, const int* incx, double* y, const int* incy,
                  const double* c, const double* s) {
  guarded("DROT", [&] { ref::drot(*n, mut(x), *incx, mut(y), *incy, {*c, *s}); });
}
void GPTBLAS_drotm(const int* n, double* x, const int* incx, double* y, const int* incy,
                   const double* param) {
  guarded("DROTM", [&] {
    ref::drotm(*n, mut(x), *incx, mut(y), *incy, {param[0], param[1], param[2], param[3], param[4]});
  });
}
void GPTBLAS_dgemv(const char* trans, const int* m, const int* n, const double* alpha,
                   const double* a, const int* lda, const double* x, const int* incx,
                   const double* beta, double* y, const int* incy) {
  guarded("DGEMV", [&] {
    ref::dgemv(tr(trans), *m, *n, *alpha, in(a), *lda, in(x), *incx, *beta, mut(y), *incy);
  });
}
void GPTBLAS_dger(const int* m, const int* n, const double* alpha, const double* x,
                  const int* incx, const double* y, const int* incy, double* a, const int* lda) {
  guarded("DGER", [&] { ref::dger(*m, *n, *alpha, in(x), *incx, in(y), *incy, mut(a), *lda); });
}
void GPTBLAS_dsymv(const char* uplo, const int* n, const double* alpha, const double* a,
                   const int* lda, const double* x, const int* incx, const double* beta,
                   double* y, const int* incy) {
  guarded("DSYMV", [&] {
    ref::dsymv(ul(uplo), *n, *alpha, in(a), *lda, in(x), *incx, *beta, mut(y), *incy);
  });
}
void GPTBLAS_dsyr(const char* uplo, const int* n, const double* alpha, const double* x,
                  const int* incx, double* a, const int* lda) {
  guarded("DSYR", [&] { ref::dsyr(ul(uplo), *n, *alpha, in(x), *incx, mut(a), *lda); });
}
void GPTBLAS_dsyr2(const char* uplo, const int* n, const double* alpha, const double* x,
                   const int* incx, const double* y, const int* incy, double* a, const int* lda) {
  guarded("DSYR2", [&] {
    ref::dsyr2(ul(uplo), *n, *alpha, in(x), *incx, in(y), *incy, mut(a), *lda);
  });
}
void GPTBLAS_dtrmv(const char* uplo, const char* trans, const char* diag, const int* n,
                   const double* a, const int* lda, double* x, const int* incx) {
  guarded("DTRMV", [&] {
    ref::dtrmv(ul(uplo), tr(trans), dg(diag), *n, in(a), *lda, mut(x), *incx);
  });
}
void GPTBLAS_dtrsv(const char* uplo, const char* trans, const char* diag, const int* n,
                   const double* a, const int* lda, double* x, const int* incx) {
  guarded("DTRSV", [&] {
    ref::dtrsv(ul(uplo), tr(trans), dg(diag), *n, in(a), *lda, mut(x), *incx);
  });
}
void GPTBLAS_dgemm(const char* transa, const char* transb, const int* m, const int* n,
                   const int* k, const double* alpha, const double* a, const int* lda,
                   const double* b, const int* ldb, const double* beta, double* c,
                   const int* ldc) {
  guarded("DGEMM", [&] {
    ref::dgemm(tr(transa), tr(transb), *m, *n, *k, *alpha, in(a), *lda, in(b), *ldb, *beta,
               mut(c), *ldc);
  });
}
void GPTBLAS_dsymm(const char* side, const char* uplo, const int* m, const int* n,
                   const double* alpha, const double* a, const int* lda, const double* b,
                   const int* ldb, const double* beta, double* c, const int* ldc) {
  guarded("DSYMM", [&] {
    ref::dsymm(sd(side), ul(uplo), *m, *n, *alpha, in(a), *lda, in(b), *ldb, *beta, mut(c), *ldc);
  });
}
void GPTBLAS_dsyrk(const char* uplo, const char* trans, const int* n, const int* k,
                   const double* alpha, const double* a, const int* lda, const double* beta,
                   double* c, const int* ldc) {
  guarded("DSYRK", [&] {
    ref::dsyrk(ul(uplo), tr(trans), *n, *k, *alpha, in(a), *lda, *beta, mut(c), *ldc);
  });
}
void GPTBLAS_dsyr2k(const char* uplo, const char* trans, const int* n, const int* k,
                    const double* alpha, const double* a, const int* lda, const double* b,
                    const int* ldb, const double* beta, double* c, const int* ldc) {
  guarded("DSYR2K", [&] {
    ref::dsyr2k(ul(uplo), tr(trans), *n, *k, *alpha, in(a), *lda, in(b), *ldb, *beta, mut(c),
                *ldc);
  });
}
void GPTBLAS_dtrmm(const char* side, const char* uplo, const char* transa, const char* diag,
                   const int* m, const int* n, const double* alpha, const double* a,
                   const int* lda, double* b, const int* ldb) {
  guarded("DTRMM", [&] {
    ref::dtrmm(sd(side), ul(uplo), tr(transa), dg(diag), *m, *n, *alpha, in(a), *lda, mut(b),
               *ldb);
  });
}
void GPTBLAS_dtrsm(const char* side, const char* uplo, const char* transa, const char* diag,
                   const int* m, const int* n, const double* alpha, const double* a,
                   const int* lda, double* b, const int* ldb) {
  guarded("DTRSM", [&] {
    ref::dtrsm(sd(side), ul(uplo), tr(transa), dg(diag), *m, *n, *alpha, in(a), *lda, mut(b),
               *ldb);
  });
}

}  // extern "C"
