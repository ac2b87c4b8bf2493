#pragma once

// Binary case files exchanged with the child runner.
//
// Header (56 bytes, little-endian):
//   0  char[4] magic "KGAU"
//   4  u32     version (1)
//   8  u32     routine id (Routine enum value)
//  12  i64     m, n, k, incx, incy
//  52  char[4] parameter slots, 0 when unused:
//              [0] trans (transa), [1] side, or transb for dgemm,
//              [2] uplo, [3] diag
// Input payload: float64 values in signature order. Scalars take one value,
// the drotm parameter array five (flag, h11, h21, h12, h22), vectors and
// matrices their full storage (leading dimension = rows + 1). An empty
// payload asks the runner to generate the data itself from the case seed.
// Output payload: the return value (if any, idamax as a float64) followed by
// every in-out array in signature order.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blasgen/testgen.hpp"

namespace blasgen::casefile {

inline constexpr char kMagic[4] = {'K', 'G', 'A', 'U'};
inline constexpr std::uint32_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 56;

class CaseFileError : public std::runtime_error {
 public:
  enum class Kind { Malformed, UnknownRoutine };
  CaseFileError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

using Bytes = std::vector<std::uint8_t>;

Bytes encode_header(const TestCase& tc);
/// Reads and validates the header; the seed is recomputed with case_seed().
TestCase decode_header(std::span<const std::uint8_t> bytes);

Bytes encode_input(const TestCase& tc, const Problem& p);

struct DecodedInput {
  TestCase tc;
  Problem problem;
  bool generated = false;  // payload was empty; data came from init_problem
};
DecodedInput decode_input(std::span<const std::uint8_t> bytes);

Bytes encode_output(const TestCase& tc, const Problem& p);
/// Copies the output payload into `p`, which must already hold the inputs.
void decode_output(std::span<const std::uint8_t> bytes, const TestCase& expected, Problem& p);

/// Number of float64 values in the input and output payloads.
std::size_t input_values(const TestCase& tc);
std::size_t output_values(const TestCase& tc);

Bytes read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace blasgen::casefile
