#pragma once

// Calls a GPTBLAS_<routine> entry point through the pointer-argument ABI:
// every argument is passed by address, characters as `const char*`,
// integers as `const int*` (or `const int64_t*`), scalars and arrays as
// `double*`. The return value, if any, lands in Problem::result.

#include <string>

#include "blasgen/testgen.hpp"

namespace blasgen::abi {

enum class IntWidth { I32, I64 };

std::string entry_symbol(Routine r);

void call(void* fn, const TestCase& tc, Problem& p, IntWidth width = IntWidth::I32);

}  // namespace blasgen::abi
