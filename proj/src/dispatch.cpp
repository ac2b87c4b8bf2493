#include "blasgen/dispatch.hpp"

#include "blasgen/oracle.hpp"

namespace blasgen {

void run_reference(const TestCase& tc, Problem& p) {
  const OperandShapes s = shapes_of(tc);
  const BoundParams& q = tc.params;
  const index_t lda = s.a ? s.a->ld : 1;
  const index_t ldb = s.b ? s.b->ld : 1;
  const index_t ldc = s.c ? s.c->ld : 1;
  const index_t m = tc.m, n = tc.n, k = tc.k;
  switch (tc.routine) {
    case Routine::dasum: p.result = ref::dasum(n, p.x, tc.incx); break;
    case Routine::daxpy: ref::daxpy(n, p.alpha, p.x, tc.incx, p.y, tc.incy); break;
    case Routine::ddot: p.result = ref::ddot(n, p.x, tc.incx, p.y, tc.incy); break;
    case Routine::idamax: p.result = static_cast<double>(ref::idamax(n, p.x, tc.incx)); break;
    case Routine::dnrm2: p.result = ref::dnrm2(n, p.x, tc.incx); break;
    case Routine::drot: ref::drot(n, p.x, tc.incx, p.y, tc.incy, p.rot); break;
    case Routine::drotm: ref::drotm(n, p.x, tc.incx, p.y, tc.incy, p.rotm); break;
    case Routine::dgemv:
      ref::dgemv(q.trans, m, n, p.alpha, p.a, lda, p.x, tc.incx, p.beta, p.y, tc.incy);
      break;
    case Routine::dger: ref::dger(m, n, p.alpha, p.x, tc.incx, p.y, tc.incy, p.a, lda); break;
    case Routine::dsymv:
      ref::dsymv(q.uplo, n, p.alpha, p.a, lda, p.x, tc.incx, p.beta, p.y, tc.incy);
      break;
    case Routine::dsyr: ref::dsyr(q.uplo, n, p.alpha, p.x, tc.incx, p.a, lda); break;
    case Routine::dsyr2:
      ref::dsyr2(q.uplo, n, p.alpha, p.x, tc.incx, p.y, tc.incy, p.a, lda);
      break;
    case Routine::dtrmv: ref::dtrmv(q.uplo, q.trans, q.diag, n, p.a, lda, p.x, tc.incx); break;
    case Routine::dtrsv: ref::dtrsv(q.uplo, q.trans, q.diag, n, p.a, lda, p.x, tc.incx); break;
    case Routine::dgemm:
      ref::dgemm(q.trans, q.transb, m, n, k, p.alpha, p.a, lda, p.b, ldb, p.beta, p.c, ldc);
      break;
    case Routine::dsymm:
      ref::dsymm(q.side, q.uplo, m, n, p.alpha, p.a, lda, p.b, ldb, p.beta, p.c, ldc);
      break;
    case Routine::dsyrk: ref::dsyrk(q.uplo, q.trans, n, k, p.alpha, p.a, lda, p.beta, p.c, ldc); break;
    case Routine::dsyr2k:
      ref::dsyr2k(q.uplo, q.trans, n, k, p.alpha, p.a, lda, p.b, ldb, p.beta, p.c, ldc);
      break;
    case Routine::dtrmm:
      ref::dtrmm(q.side, q.uplo, q.trans, q.diag, m, n, p.alpha, p.a, lda, p.b, ldb);
      break;
    case Routine::dtrsm:
      ref::dtrsm(q.side, q.uplo, q.trans, q.diag, m, n, p.alpha, p.a, lda, p.b, ldb);
      break;
  }
}

}  // namespace blasgen
