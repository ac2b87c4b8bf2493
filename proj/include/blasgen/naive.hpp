#pragma once

// Independent plain-loop dense evaluator for all 20 routines.
//
// Operands are materialised into contiguous dense matrices (symmetric
// operands are symmetrised, triangular ones are zero-filled with an explicit
// unit diagonal when requested), combined with textbook triple loops, and
// solves go through Gaussian elimination with partial pivoting. Results are
// scattered back only into the storage the routine is allowed to write.
// Quick-return conventions (an empty output dimension leaves the output
// untouched, beta == 0 assigns) match the reference routines.

#include <vector>

#include "blasgen/testgen.hpp"

namespace blasgen::naive {

struct Dense {
  index_t rows = 0;
  index_t cols = 0;
  std::vector<double> v;  // column-major, ld == rows

  Dense() = default;
  Dense(index_t r, index_t c) : rows(r), cols(c), v(static_cast<std::size_t>(r * c), 0.0) {}
  double& operator()(index_t i, index_t j) { return v[static_cast<std::size_t>(i + j * rows)]; }
  double operator()(index_t i, index_t j) const {
    return v[static_cast<std::size_t>(i + j * rows)];
  }
};

Dense transpose(const Dense& a);
Dense multiply(const Dense& a, const Dense& b);
/// Solves a * x = b for x (b has any number of columns) by Gaussian
/// elimination with partial pivoting on a copy of a.
Dense solve(const Dense& a, const Dense& b);

void run(const TestCase& tc, Problem& p);

}  // namespace blasgen::naive
