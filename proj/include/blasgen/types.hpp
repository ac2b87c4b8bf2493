#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace blasgen {

using index_t = std::int64_t;

enum class Transpose { NoTrans, Trans };
enum class Triangle { Lower, Upper };
enum class Side { Left, Right };
enum class DiagKind { Unit, NonUnit };

// Case-insensitive parsers. 'C' is not accepted for Transpose: the real
// routines are only exercised with 'N' and 'T'.
std::optional<Transpose> parse_transpose(char c) noexcept;
std::optional<Triangle> parse_triangle(char c) noexcept;
std::optional<Side> parse_side(char c) noexcept;
std::optional<DiagKind> parse_diag(char c) noexcept;

char to_char(Transpose t) noexcept;
char to_char(Triangle t) noexcept;
char to_char(Side s) noexcept;
char to_char(DiagKind d) noexcept;

/// Plane rotation coefficients for drot. c*c + s*s == 1 is not enforced.
struct RotParams {
  double c = 1.0;
  double s = 0.0;
  friend bool operator==(const RotParams&, const RotParams&) = default;
};

/// Modified Givens matrix H in the classic dparam encoding.
///   flag -2: H = I
///   flag -1: H = [h11 h12; h21 h22]
///   flag  0: H = [1 h12; h21 1]
///   flag  1: H = [h11 1; -1 h22]
struct RotmParams {
  double flag = -2.0;
  double h11 = 0.0;
  double h21 = 0.0;
  double h12 = 0.0;
  double h22 = 0.0;
  friend bool operator==(const RotmParams&, const RotmParams&) = default;
};

struct Scalars {
  double alpha = 1.0;
  double beta = 0.0;
};

/// Thrown when an argument violates the routine's contract. `position` is
/// the 1-based index of the first offending argument in the Fortran
/// argument list, as xerbla would report it.
class ArgumentError : public std::invalid_argument {
 public:
  ArgumentError(std::string routine, int position);

  const std::string& routine() const noexcept { return routine_; }
  int position() const noexcept { return position_; }

 private:
  std::string routine_;
  int position_;
};

/// Minimum backing length for n logical elements at stride inc.
constexpr index_t strided_extent(index_t n, index_t inc) noexcept {
  return n <= 0 ? 0 : 1 + (n - 1) * (inc < 0 ? -inc : inc);
}

/// Offset of the first logical element (reference BLAS convention for
/// negative strides: element 1 lives at the far end of the storage).
constexpr index_t strided_start(index_t n, index_t inc) noexcept {
  return inc < 0 ? (1 - n) * inc : 0;
}

/// View of n logical elements laid out at stride inc.
template <typename T>
class StridedVector {
 public:
  StridedVector(std::span<T> data, index_t n, index_t inc)
      : data_(data), n_(n), inc_(inc), start_(strided_start(n, inc)) {}

  index_t size() const noexcept { return n_; }
  index_t inc() const noexcept { return inc_; }
  std::span<T> storage() const noexcept { return data_; }

  // 0-based logical index.
  T& operator[](index_t i) const { return data_[static_cast<std::size_t>(start_ + i * inc_)]; }

 private:
  std::span<T> data_;
  index_t n_;
  index_t inc_;
  index_t start_;
};

/// Column-major matrix view; (i, j) are 0-based.
template <typename T>
class ColMajorMatrix {
 public:
  ColMajorMatrix(std::span<T> data, index_t rows, index_t cols, index_t ld)
      : data_(data), rows_(rows), cols_(cols), ld_(ld) {}

  index_t rows() const noexcept { return rows_; }
  index_t cols() const noexcept { return cols_; }
  index_t ld() const noexcept { return ld_; }
  std::span<T> storage() const noexcept { return data_; }

  T& operator()(index_t i, index_t j) const { return data_[static_cast<std::size_t>(i + j * ld_)]; }

 private:
  std::span<T> data_;
  index_t rows_;
  index_t cols_;
  index_t ld_;
};

/// Storage length needed for a rows x cols matrix with leading dimension ld.
constexpr index_t matrix_extent(index_t rows, index_t cols, index_t ld) noexcept {
  return (rows <= 0 || cols <= 0) ? 0 : ld * (cols - 1) + rows;
}

}  // namespace blasgen
