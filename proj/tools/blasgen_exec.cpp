// Child-side runner: loads a candidate library, replays case files through
// the pointer ABI and writes the outputs back. Runs in its own process so a
// crashing candidate cannot take the harness down.
//
// Exit codes: 0 ok, 2 malformed case file, 3 unknown routine, 4 library
// failed to load, 5 entry symbol missing, 64 usage.

#include <dlfcn.h>
#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "blasgen/abi.hpp"
#include "blasgen/casefile.hpp"

namespace cf = blasgen::casefile;
using blasgen::Problem;
using blasgen::TestCase;

namespace {

enum Exit { kOk = 0, kMalformed = 2, kUnknownRoutine = 3, kLoad = 4, kSymbol = 5, kUsage = 64 };

int usage() {
  std::fprintf(stderr,
               "usage: blasgen-exec probe <lib> <routine>\n"
               "       blasgen-exec run [--int64] <lib> <dir> <first> <count>\n"
               "       blasgen-exec bench [--int64] <lib> <case> <times-out> <warmups> <reps>\n");
  return kUsage;
}

void* load(const std::string& path) {
  void* h = dlopen(path.c_str(), RTLD_NOW | RTLD_LOCAL);
  if (!h) std::fprintf(stderr, "blasgen-exec: %s\n", dlerror());
  return h;
}

void* resolve(void* lib, blasgen::Routine r) {
  const std::string sym = blasgen::abi::entry_symbol(r);
  dlerror();
  void* fn = dlsym(lib, sym.c_str());
  if (!fn) std::fprintf(stderr, "blasgen-exec: missing symbol %s\n", sym.c_str());
  return fn;
}

void progress(char tag, long i) {
  if (fcntl(3, F_GETFD) == -1) return;
  char line[32];
  const int len = std::snprintf(line, sizeof line, "%c %ld\n", tag, i);
  if (write(3, line, static_cast<std::size_t>(len)) < 0) return;
}

void redirect(int fd, const std::string& path) {
  std::fflush(fd == 1 ? stdout : stderr);
  const int f = open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (f < 0) return;
  dup2(f, fd);
  close(f);
}

int decode_error(const cf::CaseFileError& e) {
  std::fprintf(stderr, "blasgen-exec: %s\n", e.what());
  return e.kind() == cf::CaseFileError::Kind::UnknownRoutine ? kUnknownRoutine : kMalformed;
}

bool read_case(const std::string& path, cf::DecodedInput& out, int& code) {
  try {
    out = cf::decode_input(cf::read_file(path));
    return true;
  } catch (const cf::CaseFileError& e) {
    code = decode_error(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "blasgen-exec: %s\n", e.what());
    code = kMalformed;
  }
  return false;
}

int cmd_probe(const std::string& lib_path, const std::string& routine) {
  const auto r = blasgen::routine_from_name(routine);
  if (!r) return kUnknownRoutine;
  void* lib = load(lib_path);
  if (!lib) return kLoad;
  return resolve(lib, *r) ? kOk : kSymbol;
}

int cmd_run(blasgen::abi::IntWidth width, const std::string& lib_path, const std::string& dir,
            long first, long count) {
  void* lib = load(lib_path);
  if (!lib) return kLoad;
  for (long i = first; i < first + count; ++i) {
    const std::string base = dir + "/case_" + std::to_string(i);
    cf::DecodedInput in;
    int code = kOk;
    if (!read_case(base + ".in", in, code)) return code;
    void* fn = resolve(lib, in.tc.routine);
    if (!fn) return kSymbol;

    progress('S', i);
    redirect(1, base + ".stdout");
    redirect(2, base + ".stderr");
    blasgen::abi::call(fn, in.tc, in.problem, width);
    std::fflush(stdout);
    std::fflush(stderr);
    cf::write_file(base + ".out", cf::encode_output(in.tc, in.problem));
    progress('D', i);
  }
  return kOk;
}

int cmd_bench(blasgen::abi::IntWidth width, const std::string& lib_path, const std::string& case_path,
              const std::string& times_path, int warmups, int reps) {
  cf::DecodedInput in;
  int code = kOk;
  if (!read_case(case_path, in, code)) return code;
  void* lib = load(lib_path);
  if (!lib) return kLoad;
  void* fn = resolve(lib, in.tc.routine);
  if (!fn) return kSymbol;

  const blasgen::RoutineSpec& spec = blasgen::spec_of(in.tc.routine);
  const Problem pristine = in.problem;
  Problem work = in.problem;
  // Only the in-out operands change between calls.
  auto restore = [&] {
    for (const blasgen::ArgDesc& arg : spec.signature) {
      if (arg.intent != blasgen::Intent::InOut) continue;
      switch (arg.role) {
        case blasgen::ArgRole::X: work.x = pristine.x; break;
        case blasgen::ArgRole::Y: work.y = pristine.y; break;
        case blasgen::ArgRole::A: work.a = pristine.a; break;
        case blasgen::ArgRole::B: work.b = pristine.b; break;
        case blasgen::ArgRole::C: work.c = pristine.c; break;
        default: break;
      }
    }
  };

  std::FILE* out = std::fopen(times_path.c_str(), "w");
  if (!out) return kUsage;
  for (int i = 0; i < warmups + reps; ++i) {
    restore();
    progress('S', i);
    const auto t0 = std::chrono::steady_clock::now();
    blasgen::abi::call(fn, in.tc, work, width);
    const auto t1 = std::chrono::steady_clock::now();
    std::fflush(stdout);
    progress('D', i);
    if (i >= warmups) std::fprintf(out, "%.17g\n", std::chrono::duration<double>(t1 - t0).count());
  }
  std::fclose(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage();
  const std::string mode = args[0];
  args.erase(args.begin());
  auto width = blasgen::abi::IntWidth::I32;
  if (!args.empty() && args[0] == "--int64") {
    width = blasgen::abi::IntWidth::I64;
    args.erase(args.begin());
  }
  try {
    if (mode == "probe" && args.size() == 2) return cmd_probe(args[0], args[1]);
    if (mode == "run" && args.size() == 4) {
      return cmd_run(width, args[0], args[1], std::stol(args[2]), std::stol(args[3]));
    }
    if (mode == "bench" && args.size() == 5) {
      return cmd_bench(width, args[0], args[1], args[2], std::stoi(args[3]), std::stoi(args[4]));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "blasgen-exec: %s\n", e.what());
    return kUsage;
  }
  return usage();
}
