#pragma once

// Reference ("Ref") double-precision BLAS.
//
// Plain column-major loops in the same order as the netlib reference, one
// accumulator per reduction, no internal threading. Outputs are mutated in
// place. Every routine validates its arguments and throws ArgumentError
// with the Fortran argument position of the first violation.
//
// Negative increments follow reference semantics for the two-vector
// routines and the level-2 routines. The single-vector reductions (dasum,
// dnrm2, idamax) reject incx <= 0.

#include <span>

#include "blasgen/types.hpp"

namespace blasgen::ref {

// Level 1
double dasum(index_t n, std::span<const double> x, index_t incx);
void daxpy(index_t n, double alpha, std::span<const double> x, index_t incx, std::span<double> y,
           index_t incy);
double ddot(index_t n, std::span<const double> x, index_t incx, std::span<const double> y,
            index_t incy);
/// 1-based index of the first element with the largest |x_i|; 0 when n < 1.
/// NaN entries never compare greater, so they are skipped unless x_1 is NaN.
index_t idamax(index_t n, std::span<const double> x, index_t incx);
double dnrm2(index_t n, std::span<const double> x, index_t incx);
void drot(index_t n, std::span<double> x, index_t incx, std::span<double> y, index_t incy,
          RotParams rot);
void drotm(index_t n, std::span<double> x, index_t incx, std::span<double> y, index_t incy,
           const RotmParams& param);

// Level 2
void dgemv(Transpose trans, index_t m, index_t n, double alpha, std::span<const double> a,
           index_t lda, std::span<const double> x, index_t incx, double beta, std::span<double> y,
           index_t incy);
void dger(index_t m, index_t n, double alpha, std::span<const double> x, index_t incx,
          std::span<const double> y, index_t incy, std::span<double> a, index_t lda);
void dsymv(Triangle uplo, index_t n, double alpha, std::span<const double> a, index_t lda,
           std::span<const double> x, index_t incx, double beta, std::span<double> y,
           index_t incy);
void dsyr(Triangle uplo, index_t n, double alpha, std::span<const double> x, index_t incx,
          std::span<double> a, index_t lda);
void dsyr2(Triangle uplo, index_t n, double alpha, std::span<const double> x, index_t incx,
           std::span<const double> y, index_t incy, std::span<double> a, index_t lda);
void dtrmv(Triangle uplo, Transpose trans, DiagKind diag, index_t n, std::span<const double> a,
           index_t lda, std::span<double> x, index_t incx);
void dtrsv(Triangle uplo, Transpose trans, DiagKind diag, index_t n, std::span<const double> a,
           index_t lda, std::span<double> x, index_t incx);

// Level 3
void dgemm(Transpose transa, Transpose transb, index_t m, index_t n, index_t k, double alpha,
           std::span<const double> a, index_t lda, std::span<const double> b, index_t ldb,
           double beta, std::span<double> c, index_t ldc);
void dsymm(Side side, Triangle uplo, index_t m, index_t n, double alpha, std::span<const double> a,
           index_t lda, std::span<const double> b, index_t ldb, double beta, std::span<double> c,
           index_t ldc);
void dsyrk(Triangle uplo, Transpose trans, index_t n, index_t k, double alpha,
           std::span<const double> a, index_t lda, double beta, std::span<double> c, index_t ldc);
void dsyr2k(Triangle uplo, Transpose trans, index_t n, index_t k, double alpha,
            std::span<const double> a, index_t lda, std::span<const double> b, index_t ldb,
            double beta, std::span<double> c, index_t ldc);
void dtrmm(Side side, Triangle uplo, Transpose transa, DiagKind diag, index_t m, index_t n,
           double alpha, std::span<const double> a, index_t lda, std::span<double> b, index_t ldb);
void dtrsm(Side side, Triangle uplo, Transpose transa, DiagKind diag, index_t m, index_t n,
           double alpha, std::span<const double> a, index_t lda, std::span<double> b, index_t ldb);

}  // namespace blasgen::ref
