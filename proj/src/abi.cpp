#include "blasgen/abi.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace blasgen::abi {

std::string entry_symbol(Routine r) { return "GPTBLAS_" + std::string(name_of(r)); }

namespace {

constexpr std::size_t kMaxArgs = 16;
using Args = std::array<void*, kMaxArgs>;

template <typename R, std::size_t... I>
R invoke(void* fn, const Args& a, std::index_sequence<I...>) {
  using Fn = R (*)(decltype(I, static_cast<void*>(nullptr))...);
  return reinterpret_cast<Fn>(fn)(a[I]...);
}

template <typename R, std::size_t N = 1>
R invoke_n(void* fn, const Args& a, std::size_t n) {
  if constexpr (N > kMaxArgs) {
    throw std::logic_error("abi: too many arguments");
  } else {
    if (n == N) return invoke<R>(fn, a, std::make_index_sequence<N>{});
    return invoke_n<R, N + 1>(fn, a, n);
  }
}

template <typename Int>
double call_with(void* fn, const TestCase& tc, Problem& p) {
  const RoutineSpec& spec = spec_of(tc.routine);
  const OperandShapes s = shapes_of(tc);
  const BoundParams& q = tc.params;

  // Backing storage must outlive the call.
  std::array<char, 6> chars{to_char(q.trans), to_char(q.transb), to_char(q.side),
                            to_char(q.uplo),  to_char(q.diag),   '\0'};
  std::array<Int, 8> ints{static_cast<Int>(tc.m),
                          static_cast<Int>(tc.n),
                          static_cast<Int>(tc.k),
                          static_cast<Int>(s.a ? s.a->ld : 1),
                          static_cast<Int>(s.b ? s.b->ld : 1),
                          static_cast<Int>(s.c ? s.c->ld : 1),
                          static_cast<Int>(tc.incx),
                          static_cast<Int>(tc.incy)};
  std::array<double, 5> param{p.rotm.flag, p.rotm.h11, p.rotm.h21, p.rotm.h12, p.rotm.h22};

  Args args{};
  std::size_t n = 0;
  for (const ArgDesc& arg : spec.signature) {
    void* ptr = nullptr;
    switch (arg.role) {
      case ArgRole::Trans:
      case ArgRole::TransA: ptr = &chars[0]; break;
      case ArgRole::TransB: ptr = &chars[1]; break;
      case ArgRole::Side: ptr = &chars[2]; break;
      case ArgRole::Uplo: ptr = &chars[3]; break;
      case ArgRole::Diag: ptr = &chars[4]; break;
      case ArgRole::M: ptr = &ints[0]; break;
      case ArgRole::N: ptr = &ints[1]; break;
      case ArgRole::K: ptr = &ints[2]; break;
      case ArgRole::Lda: ptr = &ints[3]; break;
      case ArgRole::Ldb: ptr = &ints[4]; break;
      case ArgRole::Ldc: ptr = &ints[5]; break;
      case ArgRole::IncX: ptr = &ints[6]; break;
      case ArgRole::IncY: ptr = &ints[7]; break;
      case ArgRole::Alpha: ptr = &p.alpha; break;
      case ArgRole::Beta: ptr = &p.beta; break;
      case ArgRole::RotC: ptr = &p.rot.c; break;
      case ArgRole::RotS: ptr = &p.rot.s; break;
      case ArgRole::Param: ptr = param.data(); break;
      case ArgRole::A: ptr = p.a.data(); break;
      case ArgRole::B: ptr = p.b.data(); break;
      case ArgRole::C: ptr = p.c.data(); break;
      case ArgRole::X: ptr = p.x.data(); break;
      case ArgRole::Y: ptr = p.y.data(); break;
    }
    args[n++] = ptr;
  }

  switch (spec.returns) {
    case ReturnKind::None: invoke_n<void>(fn, args, n); return 0.0;
    case ReturnKind::Double: return invoke_n<double>(fn, args, n);
    case ReturnKind::Int: return static_cast<double>(invoke_n<Int>(fn, args, n));
  }
  return 0.0;
}

}  // namespace

void call(void* fn, const TestCase& tc, Problem& p, IntWidth width) {
  const double r = width == IntWidth::I64 ? call_with<std::int64_t>(fn, tc, p)
                                          : call_with<std::int32_t>(fn, tc, p);
  if (spec_of(tc.routine).returns != ReturnKind::None) p.result = r;
}

}  // namespace blasgen::abi
