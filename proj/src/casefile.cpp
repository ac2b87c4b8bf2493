#include "blasgen/casefile.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace blasgen::casefile {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
void put(Bytes& out, T v) {
  std::uint8_t raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw, raw + sizeof(T));
  out.insert(out.end(), raw, raw + sizeof(T));
}

template <typename T>
T get(std::span<const std::uint8_t> in, std::size_t offset) {
  std::uint8_t raw[sizeof(T)];
  std::memcpy(raw, in.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw, raw + sizeof(T));
  T v;
  std::memcpy(&v, raw, sizeof(T));
  return v;
}

[[noreturn]] void malformed(const std::string& why) {
  throw CaseFileError(CaseFileError::Kind::Malformed, "case file: " + why);
}

std::vector<double>* array_of(ArgRole role, Problem& p) {
  switch (role) {
    case ArgRole::X: return &p.x;
    case ArgRole::Y: return &p.y;
    case ArgRole::A: return &p.a;
    case ArgRole::B: return &p.b;
    case ArgRole::C: return &p.c;
    default: return nullptr;
  }
}

// Calls fn(double&) for every float64 of the input payload, in order.
template <typename Fn>
void for_each_input(const RoutineSpec& spec, Problem& p, Fn&& fn) {
  for (const ArgDesc& arg : spec.signature) {
    switch (arg.role) {
      case ArgRole::Alpha: fn(p.alpha); break;
      case ArgRole::Beta: fn(p.beta); break;
      case ArgRole::RotC: fn(p.rot.c); break;
      case ArgRole::RotS: fn(p.rot.s); break;
      case ArgRole::Param:
        fn(p.rotm.flag);
        fn(p.rotm.h11);
        fn(p.rotm.h21);
        fn(p.rotm.h12);
        fn(p.rotm.h22);
        break;
      default:
        if (auto* buf = array_of(arg.role, p)) {
          for (double& v : *buf) fn(v);
        }
    }
  }
}

template <typename Fn>
void for_each_output(const RoutineSpec& spec, Problem& p, Fn&& fn) {
  if (spec.returns != ReturnKind::None) fn(p.result);
  for (const ArgDesc& arg : spec.signature) {
    if (arg.intent != Intent::InOut) continue;
    if (auto* buf = array_of(arg.role, p)) {
      for (double& v : *buf) fn(v);
    }
  }
}

char slot_char(const TestCase& tc, int slot) {
  const RoutineSpec& spec = spec_of(tc.routine);
  const BoundParams& q = tc.params;
  const bool has_trans = has_axis(spec, Axis::Trans) || has_axis(spec, Axis::TransA);
  switch (slot) {
    case 0: return has_trans ? to_char(q.trans) : '\0';
    case 1:
      if (has_axis(spec, Axis::TransB)) return to_char(q.transb);
      return has_axis(spec, Axis::Side) ? to_char(q.side) : '\0';
    case 2: return has_axis(spec, Axis::Uplo) ? to_char(q.uplo) : '\0';
    default: return has_axis(spec, Axis::Diag) ? to_char(q.diag) : '\0';
  }
}

std::size_t count_input(const TestCase& tc) {
  Problem p = allocate_problem(tc);
  std::size_t n = 0;
  for_each_input(spec_of(tc.routine), p, [&n](double&) { ++n; });
  return n;
}

}  // namespace

Bytes encode_header(const TestCase& tc) {
  Bytes out;
  out.reserve(kHeaderSize);
  out.insert(out.end(), kMagic, kMagic + 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(tc.routine));
  for (index_t v : {tc.m, tc.n, tc.k, tc.incx, tc.incy}) put<std::int64_t>(out, v);
  for (int slot = 0; slot < 4; ++slot) out.push_back(static_cast<std::uint8_t>(slot_char(tc, slot)));
  return out;
}

TestCase decode_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) malformed("truncated header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) malformed("bad magic");
  if (get<std::uint32_t>(bytes, 4) != kVersion) malformed("unsupported version");
  const auto id = get<std::uint32_t>(bytes, 8);
  if (id >= kRoutineCount) {
    throw CaseFileError(CaseFileError::Kind::UnknownRoutine,
                        "case file: unknown routine id " + std::to_string(id));
  }
  TestCase tc;
  tc.routine = static_cast<Routine>(id);
  tc.m = get<std::int64_t>(bytes, 12);
  tc.n = get<std::int64_t>(bytes, 20);
  tc.k = get<std::int64_t>(bytes, 28);
  tc.incx = get<std::int64_t>(bytes, 36);
  tc.incy = get<std::int64_t>(bytes, 44);
  if (tc.m < 0 || tc.n < 0 || tc.k < 0) malformed("negative dimension");
  if (tc.incx == 0 || tc.incy == 0) malformed("zero stride");

  const RoutineSpec& spec = spec_of(tc.routine);
  const auto slot = [&](int i) { return static_cast<char>(bytes[52 + static_cast<std::size_t>(i)]); };
  auto need = [&](auto parsed, int i) {
    if (!parsed) malformed(std::string("bad parameter in slot ") + std::to_string(i));
    return *parsed;
  };
  if (has_axis(spec, Axis::Trans) || has_axis(spec, Axis::TransA)) {
    tc.params.trans = need(parse_transpose(slot(0)), 0);
  }
  if (has_axis(spec, Axis::TransB)) tc.params.transb = need(parse_transpose(slot(1)), 1);
  if (has_axis(spec, Axis::Side)) tc.params.side = need(parse_side(slot(1)), 1);
  if (has_axis(spec, Axis::Uplo)) tc.params.uplo = need(parse_triangle(slot(2)), 2);
  if (has_axis(spec, Axis::Diag)) tc.params.diag = need(parse_diag(slot(3)), 3);
  tc.seed = case_seed(tc);
  return tc;
}

std::size_t input_values(const TestCase& tc) { return count_input(tc); }

std::size_t output_values(const TestCase& tc) {
  Problem p = allocate_problem(tc);
  std::size_t n = 0;
  for_each_output(spec_of(tc.routine), p, [&n](double&) { ++n; });
  return n;
}

Bytes encode_input(const TestCase& tc, const Problem& p) {
  Bytes out = encode_header(tc);
  Problem copy = p;
  for_each_input(spec_of(tc.routine), copy, [&out](double& v) { put<double>(out, v); });
  return out;
}

DecodedInput decode_input(std::span<const std::uint8_t> bytes) {
  DecodedInput d;
  d.tc = decode_header(bytes);
  const std::size_t payload = bytes.size() - kHeaderSize;
  if (payload == 0) {
    d.problem = init_problem(d.tc);
    d.generated = true;
    return d;
  }
  if (payload != count_input(d.tc) * sizeof(double)) malformed("payload length mismatch");
  d.problem = allocate_problem(d.tc);
  std::size_t off = kHeaderSize;
  for_each_input(spec_of(d.tc.routine), d.problem, [&](double& v) {
    v = get<double>(bytes, off);
    off += sizeof(double);
  });
  return d;
}

Bytes encode_output(const TestCase& tc, const Problem& p) {
  Bytes out = encode_header(tc);
  Problem copy = p;
  for_each_output(spec_of(tc.routine), copy, [&out](double& v) { put<double>(out, v); });
  return out;
}

void decode_output(std::span<const std::uint8_t> bytes, const TestCase& expected, Problem& p) {
  const TestCase tc = decode_header(bytes);
  const Bytes want = encode_header(expected);
  if (!std::equal(want.begin(), want.end(), bytes.begin())) {
    malformed("output header does not match the case");
  }
  const std::size_t payload = bytes.size() - kHeaderSize;
  if (payload != output_values(tc) * sizeof(double)) malformed("output payload length mismatch");
  std::size_t off = kHeaderSize;
  for_each_output(spec_of(tc.routine), p, [&](double& v) {
    v = get<double>(bytes, off);
    off += sizeof(double);
  });
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace blasgen::casefile
