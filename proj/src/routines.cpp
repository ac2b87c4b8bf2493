#include "blasgen/routines.hpp"

#include <algorithm>

namespace blasgen {

namespace {

using enum ArgRole;

constexpr ArgDesc io(ArgRole r) { return {r, Intent::InOut}; }

std::vector<RoutineSpec> build_registry() {
  using A = Axis;
  std::vector<RoutineSpec> v;
  v.push_back({Routine::dasum, "dasum", 1, {A::IncX}, {{N}, {X}, {IncX}}, ReturnKind::Double});
  v.push_back({Routine::daxpy, "daxpy", 1, {A::IncX, A::IncY},
               {{N}, {Alpha}, {X}, {IncX}, io(Y), {IncY}}});
  v.push_back({Routine::ddot, "ddot", 1, {A::IncX, A::IncY}, {{N}, {X}, {IncX}, {Y}, {IncY}},
               ReturnKind::Double});
  v.push_back({Routine::idamax, "idamax", 1, {A::IncX}, {{N}, {X}, {IncX}}, ReturnKind::Int});
  v.push_back({Routine::dnrm2, "dnrm2", 1, {A::IncX}, {{N}, {X}, {IncX}}, ReturnKind::Double});
  v.push_back({Routine::drot, "drot", 1, {A::IncX, A::IncY},
               {{N}, io(X), {IncX}, io(Y), {IncY}, {RotC}, {RotS}}});
  v.push_back({Routine::drotm, "drotm", 1, {A::IncX, A::IncY},
               {{N}, io(X), {IncX}, io(Y), {IncY}, {Param}}});

  v.push_back({Routine::dgemv, "dgemv", 2, {A::Trans, A::IncX, A::IncY},
               {{Trans}, {M}, {N}, {Alpha}, {ArgRole::A}, {Lda}, {X}, {IncX}, {Beta}, io(Y),
                {IncY}}});
  v.push_back({Routine::dger, "dger", 2, {A::IncX, A::IncY},
               {{M}, {N}, {Alpha}, {X}, {IncX}, {Y}, {IncY}, io(ArgRole::A), {Lda}}});
  v.push_back({Routine::dsymv, "dsymv", 2, {A::Uplo, A::IncX, A::IncY},
               {{Uplo}, {N}, {Alpha}, {ArgRole::A}, {Lda}, {X}, {IncX}, {Beta}, io(Y), {IncY}}});
  v.push_back({Routine::dsyr, "dsyr", 2, {A::Uplo, A::IncX},
               {{Uplo}, {N}, {Alpha}, {X}, {IncX}, io(ArgRole::A), {Lda}}});
  v.push_back({Routine::dsyr2, "dsyr2", 2, {A::Uplo, A::IncX, A::IncY},
               {{Uplo}, {N}, {Alpha}, {X}, {IncX}, {Y}, {IncY}, io(ArgRole::A), {Lda}}});
  v.push_back({Routine::dtrmv, "dtrmv", 2, {A::Uplo, A::Trans, A::Diag, A::IncX},
               {{Uplo}, {Trans}, {Diag}, {N}, {ArgRole::A}, {Lda}, io(X), {IncX}}});
  v.push_back({Routine::dtrsv, "dtrsv", 2, {A::Uplo, A::Trans, A::Diag, A::IncX},
               {{Uplo}, {Trans}, {Diag}, {N}, {ArgRole::A}, {Lda}, io(X), {IncX}}});

  v.push_back({Routine::dgemm, "dgemm", 3, {A::TransA, A::TransB},
               {{TransA}, {TransB}, {M}, {N}, {K}, {Alpha}, {ArgRole::A}, {Lda}, {ArgRole::B},
                {Ldb}, {Beta}, io(ArgRole::C), {Ldc}}});
  v.push_back({Routine::dsymm, "dsymm", 3, {A::Side, A::Uplo},
               {{ArgRole::Side}, {Uplo}, {M}, {N}, {Alpha}, {ArgRole::A}, {Lda}, {ArgRole::B},
                {Ldb}, {Beta}, io(ArgRole::C), {Ldc}}});
  v.push_back({Routine::dsyrk, "dsyrk", 3, {A::Uplo, A::Trans},
               {{Uplo}, {Trans}, {N}, {K}, {Alpha}, {ArgRole::A}, {Lda}, {Beta}, io(ArgRole::C),
                {Ldc}}});
  v.push_back({Routine::dsyr2k, "dsyr2k", 3, {A::Uplo, A::Trans},
               {{Uplo}, {Trans}, {N}, {K}, {Alpha}, {ArgRole::A}, {Lda}, {ArgRole::B}, {Ldb},
                {Beta}, io(ArgRole::C), {Ldc}}});
  v.push_back({Routine::dtrmm, "dtrmm", 3, {A::Side, A::Uplo, A::Trans, A::Diag},
               {{ArgRole::Side}, {Uplo}, {TransA}, {Diag}, {M}, {N}, {Alpha}, {ArgRole::A},
                {Lda}, io(ArgRole::B), {Ldb}}});
  v.push_back({Routine::dtrsm, "dtrsm", 3, {A::Side, A::Uplo, A::Trans, A::Diag},
               {{ArgRole::Side}, {Uplo}, {TransA}, {Diag}, {M}, {N}, {Alpha}, {ArgRole::A},
                {Lda}, io(ArgRole::B), {Ldb}}});
  return v;
}

const std::vector<RoutineSpec>& registry() {
  static const std::vector<RoutineSpec> r = build_registry();
  return r;
}

std::string_view axis_label(Axis a) {
  if (a == Axis::Trans) return "trans";
  if (a == Axis::TransA) return "transa";
  if (a == Axis::TransB) return "transb";
  if (a == Axis::Side) return "side";
  if (a == Axis::Uplo) return "uplo";
  if (a == Axis::Diag) return "diag";
  return {};
}

char axis_value(const TestCase& tc, Axis a) {
  switch (a) {
    case Axis::Trans:
    case Axis::TransA: return to_char(tc.params.trans);
    case Axis::TransB: return to_char(tc.params.transb);
    case Axis::Side: return to_char(tc.params.side);
    case Axis::Uplo: return to_char(tc.params.uplo);
    case Axis::Diag: return to_char(tc.params.diag);
    default: return '?';
  }
}

}  // namespace

ArgKind kind_of(ArgRole role) noexcept {
  switch (role) {
    case Trans:
    case TransA:
    case TransB:
    case ArgRole::Side:
    case Uplo:
    case Diag: return ArgKind::Char;
    case M:
    case N:
    case K:
    case Lda:
    case Ldb:
    case Ldc:
    case IncX:
    case IncY: return ArgKind::Int;
    case Alpha:
    case Beta:
    case RotC:
    case RotS: return ArgKind::Scalar;
    case X:
    case Y: return ArgKind::Vector;
    case ArgRole::A:
    case ArgRole::B:
    case ArgRole::C: return ArgKind::Matrix;
    case Param: return ArgKind::Param;
  }
  return ArgKind::Int;
}

std::string_view arg_name(ArgRole role) noexcept {
  switch (role) {
    case Trans: return "trans";
    case TransA: return "transa";
    case TransB: return "transb";
    case ArgRole::Side: return "side";
    case Uplo: return "uplo";
    case Diag: return "diag";
    case M: return "m";
    case N: return "n";
    case K: return "k";
    case Alpha: return "alpha";
    case Beta: return "beta";
    case ArgRole::A: return "a";
    case Lda: return "lda";
    case ArgRole::B: return "b";
    case Ldb: return "ldb";
    case ArgRole::C: return "c";
    case Ldc: return "ldc";
    case X: return "x";
    case IncX: return "incx";
    case Y: return "y";
    case IncY: return "incy";
    case RotC: return "c";
    case RotS: return "s";
    case Param: return "param";
  }
  return "?";
}

std::span<const RoutineSpec> all_routines() { return registry(); }

const RoutineSpec& spec_of(Routine r) { return registry().at(static_cast<std::size_t>(r)); }

std::string_view name_of(Routine r) { return spec_of(r).name; }

std::optional<Routine> routine_from_name(std::string_view name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s.id;
  }
  return std::nullopt;
}

bool has_axis(const RoutineSpec& spec, Axis axis) {
  return std::find(spec.axes.begin(), spec.axes.end(), axis) != spec.axes.end();
}

std::string TestCase::param_combo() const {
  std::string out;
  for (Axis a : spec_of(routine).axes) {
    if (a == Axis::IncX || a == Axis::IncY) continue;
    if (!out.empty()) out += ", ";
    out += axis_label(a);
    out += '=';
    out += axis_value(*this, a);
  }
  return out;
}

std::string TestCase::id() const {
  const RoutineSpec& spec = spec_of(routine);
  std::string out(spec.name);
  out += '(';
  std::string combo = param_combo();
  out += combo;
  auto sep = [&out](bool& first) {
    if (!first) out += ", ";
    first = false;
  };
  bool first = combo.empty();
  if (has_axis(spec, Axis::IncX)) {
    sep(first);
    out += "incx=" + std::to_string(incx);
  }
  if (has_axis(spec, Axis::IncY)) {
    sep(first);
    out += "incy=" + std::to_string(incy);
  }
  out += "; ";
  const DimUse use = dims_used(routine);
  first = true;
  if (use.m) {
    sep(first);
    out += "m=" + std::to_string(m);
  }
  if (use.n) {
    sep(first);
    out += "n=" + std::to_string(n);
  }
  if (use.k) {
    sep(first);
    out += "k=" + std::to_string(k);
  }
  out += ')';
  return out;
}

DimUse dims_used(Routine r) {
  switch (r) {
    case Routine::dgemv:
    case Routine::dger:
    case Routine::dsymm:
    case Routine::dtrmm:
    case Routine::dtrsm: return {true, true, false};
    case Routine::dgemm: return {true, true, true};
    case Routine::dsyrk:
    case Routine::dsyr2k: return {false, true, true};
    default: return {false, true, false};
  }
}

OperandShapes shapes_of(const TestCase& tc) {
  OperandShapes s;
  auto mat = [](index_t rows, index_t cols) { return MatrixShape{rows, cols, leading_dim(rows)}; };
  const bool notrans = tc.params.trans == Transpose::NoTrans;
  const bool left = tc.params.side == Side::Left;
  switch (tc.routine) {
    case Routine::dasum:
    case Routine::idamax:
    case Routine::dnrm2: s.x_len = tc.n; break;
    case Routine::daxpy:
    case Routine::ddot:
    case Routine::drot:
    case Routine::drotm:
      s.x_len = tc.n;
      s.y_len = tc.n;
      break;
    case Routine::dgemv:
      s.a = mat(tc.m, tc.n);
      s.x_len = notrans ? tc.n : tc.m;
      s.y_len = notrans ? tc.m : tc.n;
      break;
    case Routine::dger:
      s.x_len = tc.m;
      s.y_len = tc.n;
      s.a = mat(tc.m, tc.n);
      break;
    case Routine::dsymv:
    case Routine::dsyr2:
      s.a = mat(tc.n, tc.n);
      s.x_len = tc.n;
      s.y_len = tc.n;
      break;
    case Routine::dsyr:
    case Routine::dtrmv:
    case Routine::dtrsv:
      s.a = mat(tc.n, tc.n);
      s.x_len = tc.n;
      break;
    case Routine::dgemm: {
      const bool notb = tc.params.transb == Transpose::NoTrans;
      s.a = notrans ? mat(tc.m, tc.k) : mat(tc.k, tc.m);
      s.b = notb ? mat(tc.k, tc.n) : mat(tc.n, tc.k);
      s.c = mat(tc.m, tc.n);
      break;
    }
    case Routine::dsymm: {
      const index_t na = left ? tc.m : tc.n;
      s.a = mat(na, na);
      s.b = mat(tc.m, tc.n);
      s.c = mat(tc.m, tc.n);
      break;
    }
    case Routine::dsyrk:
      s.a = notrans ? mat(tc.n, tc.k) : mat(tc.k, tc.n);
      s.c = mat(tc.n, tc.n);
      break;
    case Routine::dsyr2k:
      s.a = notrans ? mat(tc.n, tc.k) : mat(tc.k, tc.n);
      s.b = s.a;
      s.c = mat(tc.n, tc.n);
      break;
    case Routine::dtrmm:
    case Routine::dtrsm: {
      const index_t na = left ? tc.m : tc.n;
      s.a = mat(na, na);
      s.b = mat(tc.m, tc.n);
      break;
    }
  }
  return s;
}

index_t vector_storage(index_t len, index_t inc) noexcept {
  return std::max<index_t>(1, strided_extent(len, inc));
}

index_t matrix_storage(const MatrixShape& s) noexcept {
  return std::max<index_t>(1, s.ld * s.cols);
}

}  // namespace blasgen
