#pragma once

// Registry of the 20 target routines: level, parameter axes, Fortran
// argument signature, and the operand shapes a bound invocation implies.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blasgen/types.hpp"

namespace blasgen {

enum class Routine : std::uint32_t {
  dasum,
  daxpy,
  ddot,
  idamax,
  dnrm2,
  drot,
  drotm,
  dgemv,
  dger,
  dsymv,
  dsyr,
  dsyr2,
  dtrmv,
  dtrsv,
  dgemm,
  dsymm,
  dsyrk,
  dsyr2k,
  dtrmm,
  dtrsm,
};

inline constexpr std::size_t kRoutineCount = 20;

/// Parameter axes that a test matrix sweeps.
enum class Axis { Trans, TransA, TransB, Side, Uplo, Diag, IncX, IncY };

enum class ArgRole {
  Trans,
  TransA,
  TransB,
  Side,
  Uplo,
  Diag,
  M,
  N,
  K,
  Alpha,
  Beta,
  A,
  Lda,
  B,
  Ldb,
  C,
  Ldc,
  X,
  IncX,
  Y,
  IncY,
  RotC,
  RotS,
  Param,
};

enum class ArgKind { Char, Int, Scalar, Vector, Matrix, Param };
enum class Intent { In, InOut };
enum class ReturnKind { None, Double, Int };

struct ArgDesc {
  ArgRole role;
  Intent intent = Intent::In;
};

ArgKind kind_of(ArgRole role) noexcept;
std::string_view arg_name(ArgRole role) noexcept;

struct RoutineSpec {
  Routine id;
  std::string_view name;
  int level;
  std::vector<Axis> axes;  // sweep order: character axes first, then strides
  std::vector<ArgDesc> signature;
  ReturnKind returns = ReturnKind::None;
};

/// All 20 routines in table order (level 1, then 2, then 3).
std::span<const RoutineSpec> all_routines();
const RoutineSpec& spec_of(Routine r);
std::optional<Routine> routine_from_name(std::string_view name);
std::string_view name_of(Routine r);

bool has_axis(const RoutineSpec& spec, Axis axis);

/// Character parameters bound for one invocation. Unused fields keep their
/// defaults and are ignored by the routine.
struct BoundParams {
  Transpose trans = Transpose::NoTrans;  // trans, or transa for dgemm/dtrmm/dtrsm
  Transpose transb = Transpose::NoTrans;
  Side side = Side::Left;
  Triangle uplo = Triangle::Lower;
  DiagKind diag = DiagKind::NonUnit;

  friend bool operator==(const BoundParams&, const BoundParams&) = default;
};

struct TestCase {
  Routine routine = Routine::dasum;
  BoundParams params;
  index_t m = 0;
  index_t n = 0;
  index_t k = 0;
  index_t incx = 1;
  index_t incy = 1;
  std::uint64_t seed = 0;

  /// Character-parameter combination, e.g. "uplo=L, trans=N, diag=U".
  /// Empty for routines whose only axes are strides.
  std::string param_combo() const;
  /// Stable human-readable identifier covering params, strides and dims.
  std::string id() const;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

struct MatrixShape {
  index_t rows = 0;
  index_t cols = 0;
  index_t ld = 1;
};

/// Logical operand shapes implied by a case. Absent operands have no value.
struct OperandShapes {
  std::optional<index_t> x_len;
  std::optional<index_t> y_len;
  std::optional<MatrixShape> a;
  std::optional<MatrixShape> b;
  std::optional<MatrixShape> c;
};

/// Leading dimension used for every generated matrix: one row of padding.
constexpr index_t leading_dim(index_t rows) noexcept { return rows + 1; }

OperandShapes shapes_of(const TestCase& tc);

/// Which of (m, n, k) the routine consumes.
struct DimUse {
  bool m = false;
  bool n = false;
  bool k = false;
};
DimUse dims_used(Routine r);

/// Allocation length for a strided vector buffer (at least one element).
index_t vector_storage(index_t len, index_t inc) noexcept;
/// Allocation length for a matrix buffer (at least one element).
index_t matrix_storage(const MatrixShape& s) noexcept;

}  // namespace blasgen
