#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "blasgen/routines.hpp"

namespace blasgen {

struct DimTuple {
  index_t m = 0;
  index_t n = 0;
  index_t k = 0;
  friend bool operator==(const DimTuple&, const DimTuple&) = default;
};

/// Problem-size grid for one BLAS level. Level-1 routines read only `n`.
struct SizeProfile {
  std::vector<DimTuple> dims;
  std::vector<index_t> strides{1, 2};
};

/// Level 1: 8 vector lengths. Levels 2 and 3: 16 (m, n, k) tuples covering
/// square, tall (m > n), wide (m < n) and degenerate (a zero dimension)
/// shapes, all dimensions <= 32.
SizeProfile default_size_profile(int level);

/// Full Cartesian product, in this order (outermost first): character axes
/// in the routine's axis order, then incx, then incy, then the size grid.
std::vector<TestCase> enumerate_cases(const RoutineSpec& spec, const SizeProfile& profile);
std::vector<TestCase> enumerate_cases(const RoutineSpec& spec);

/// FNV-1a 64 over the canonical case descriptor (everything but the seed).
std::uint64_t case_seed(const TestCase& tc);

/// Bound input/output buffers for one invocation. Vectors and matrices are
/// stored exactly as the routine sees them (strided, column-major with
/// leading_dim(rows)). Operands the routine does not take stay empty.
struct Problem {
  double alpha = 0.0;
  double beta = 0.0;
  RotParams rot;
  RotmParams rotm;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
  /// Scalar result for dasum/ddot/dnrm2, or the 1-based index for idamax.
  double result = 0.0;

  friend bool operator==(const Problem&, const Problem&) = default;
};

inline constexpr double kDefaultAlpha = 3.141592653589793;
inline constexpr double kDefaultBeta = 2.718281828459045;

/// Deterministic uniform (0, 1) stream; bit-identical across platforms.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
};

/// Fills every operand i.i.d. uniform on (0, 1) from the case seed.
/// Triangular-solve matrices are conditioned: the stored diagonal is shifted
/// by the matrix order, and for unit-diagonal solves the strict triangle is
/// also scaled by 1/order so that the implied unit-diagonal matrix stays
/// diagonally dominant.
Problem init_problem(const TestCase& tc);

/// Allocates zeroed buffers of the right size without drawing any data.
Problem allocate_problem(const TestCase& tc);

/// Line-oriented manifest: one case per line,
///   <routine> <params> <m> <n> <k> <incx> <incy> <seed>
/// where <params> is five characters: trans, transb, side, uplo, diag.
void write_manifest(std::ostream& os, const std::vector<TestCase>& cases);
std::vector<TestCase> read_manifest(std::istream& is);

}  // namespace blasgen
