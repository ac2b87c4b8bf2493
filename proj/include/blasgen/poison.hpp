#pragma once

// Fills storage a routine must never read with a sentinel and records where.

#include <cstring>
#include <optional>
#include <vector>

#include "blasgen/testgen.hpp"

namespace blasgen {

inline constexpr double kPoison = 1e30;

struct PoisonMask {
  std::vector<bool> a;
  std::vector<bool> c;
};

inline bool triangular_operand_is_c(Routine r) {
  return r == Routine::dsyrk || r == Routine::dsyr2k;
}

inline bool has_uplo(Routine r) { return has_axis(spec_of(r), Axis::Uplo); }

// Poisons the strict opposite triangle, the diagonal when diag=U, and the
// padding rows of the triangular/symmetric operand.
inline PoisonMask poison_unreferenced(const TestCase& tc, Problem& p, double value = kPoison) {
  PoisonMask mask;
  if (!has_uplo(tc.routine)) return mask;
  const OperandShapes s = shapes_of(tc);
  const bool on_c = triangular_operand_is_c(tc.routine);
  const MatrixShape shape = on_c ? *s.c : *s.a;
  std::vector<double>& buf = on_c ? p.c : p.a;
  std::vector<bool>& m = on_c ? mask.c : mask.a;
  m.assign(buf.size(), false);
  const bool upper = tc.params.uplo == Triangle::Upper;
  const bool unit = has_axis(spec_of(tc.routine), Axis::Diag) && tc.params.diag == DiagKind::Unit;
  for (index_t j = 0; j < shape.cols; ++j) {
    for (index_t i = 0; i < shape.ld; ++i) {
      const auto idx = static_cast<std::size_t>(i + j * shape.ld);
      if (idx >= buf.size()) continue;
      const bool padding = i >= shape.rows;
      const bool opposite = upper ? i > j : i < j;
      const bool diag = unit && i == j;
      if (padding || opposite || diag) {
        buf[idx] = value;
        m[idx] = true;
      }
    }
  }
  return mask;
}

inline bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

// Poisoned slots must still hold the sentinel; every other slot must match
// the clean run bit for bit.
inline bool poison_run_matches(const Problem& clean, const Problem& dirty, const PoisonMask& mask,
                               double value = kPoison) {
  auto check = [&](const std::vector<double>& c, const std::vector<double>& d,
                   const std::vector<bool>& m) {
    if (c.size() != d.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool poisoned = i < m.size() && m[i];
      if (!same_bits(d[i], poisoned ? value : c[i])) return false;
    }
    return true;
  };
  const std::vector<bool> none;
  return same_bits(clean.result, dirty.result) && check(clean.x, dirty.x, none) &&
         check(clean.y, dirty.y, none) && check(clean.a, dirty.a, mask.a) &&
         check(clean.b, dirty.b, none) && check(clean.c, dirty.c, mask.c);
}

}  // namespace blasgen
