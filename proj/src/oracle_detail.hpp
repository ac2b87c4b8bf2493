#pragma once

#include <algorithm>
#include <span>

#include "blasgen/types.hpp"

namespace blasgen::ref::detail {

[[noreturn]] inline void fail(const char* routine, int position) {
  throw ArgumentError(routine, position);
}

inline void require(bool ok, const char* routine, int position) {
  if (!ok) fail(routine, position);
}

template <typename T>
void require_vector(std::span<T> v, index_t n, index_t inc, const char* routine, int position) {
  require(static_cast<index_t>(v.size()) >= strided_extent(n, inc), routine, position);
}

template <typename T>
void require_matrix(std::span<T> a, index_t rows, index_t cols, index_t ld, const char* routine,
                    int position) {
  require(static_cast<index_t>(a.size()) >= matrix_extent(rows, cols, ld), routine, position);
}

inline index_t max1(index_t v) { return std::max<index_t>(1, v); }

}  // namespace blasgen::ref::detail
