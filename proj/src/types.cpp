#include "blasgen/types.hpp"

#include <cctype>

namespace blasgen {

namespace {
char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }
}  // namespace

std::optional<Transpose> parse_transpose(char c) noexcept {
  switch (upper(c)) {
    case 'N': return Transpose::NoTrans;
    case 'T': return Transpose::Trans;
    default: return std::nullopt;
  }
}

std::optional<Triangle> parse_triangle(char c) noexcept {
  switch (upper(c)) {
    case 'L': return Triangle::Lower;
    case 'U': return Triangle::Upper;
    default: return std::nullopt;
  }
}

std::optional<Side> parse_side(char c) noexcept {
  switch (upper(c)) {
    case 'L': return Side::Left;
    case 'R': return Side::Right;
    default: return std::nullopt;
  }
}

std::optional<DiagKind> parse_diag(char c) noexcept {
  switch (upper(c)) {
    case 'U': return DiagKind::Unit;
    case 'N': return DiagKind::NonUnit;
    default: return std::nullopt;
  }
}

char to_char(Transpose t) noexcept { return t == Transpose::NoTrans ? 'N' : 'T'; }
char to_char(Triangle t) noexcept { return t == Triangle::Lower ? 'L' : 'U'; }
char to_char(Side s) noexcept { return s == Side::Left ? 'L' : 'R'; }
char to_char(DiagKind d) noexcept { return d == DiagKind::Unit ? 'U' : 'N'; }

ArgumentError::ArgumentError(std::string routine, int position)
    : std::invalid_argument(routine + ": parameter " + std::to_string(position) +
                            " had an illegal value"),
      routine_(std::move(routine)),
      position_(position) {}

}  // namespace blasgen
