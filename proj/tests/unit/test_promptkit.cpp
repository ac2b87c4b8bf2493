#include <doctest.h>

#include "blasgen/promptkit.hpp"
#include "paths.hpp"

using namespace blasgen;

namespace {

std::string golden(const std::string& name) {
  return testing::read_text(testing::source_dir() / "tests" / "golden" / name);
}

std::string dsymm_fortran() {
  return testing::read_text(testing::source_dir() / "tests" / "fixtures" / "fortran" / "dsymm.f");
}

}  // namespace

TEST_CASE("prompts match the goldens byte for byte") {
  CHECK(build_prompt(Routine::dgemm, PromptMode::NameToCcode).text ==
        golden("name_to_c_dgemm.txt"));
  CHECK(build_prompt(Routine::daxpy, PromptMode::NameToOptCcode).text ==
        golden("name_to_opt_c_daxpy.txt"));
  const std::string src = dsymm_fortran();
  const PromptBundle b = build_prompt(Routine::dsymm, PromptMode::FrtcodeToOptCcode, src);
  CHECK(b.text == golden("frt_to_opt_c_dsymm.txt") + "\n\n" + src);
  CHECK(b.attachment == src);
}

TEST_CASE("shipped template files are the built-in templates") {
  for (PromptMode m : kAllModes) {
    const auto path = testing::source_dir() / "prompts" / (std::string(template_stem(m)) + ".txt");
    CHECK(testing::read_text(path) == prompt_template(m));
  }
}

TEST_CASE("prompt content") {
  const std::string p1 = build_prompt("dgemm", PromptMode::NameToCcode).text;
  CHECK(p1.rfind("Implement dgemm routine in BLAS in C language.", 0) == 0);
  CHECK(p1.find("Thread parallelization") == std::string::npos);
  CHECK(build_prompt("daxpy", PromptMode::NameToOptCcode)
            .text.find("Thread parallelization, SIMD vectorization, and cache blocking should be "
                       "considered for speed-up.") != std::string::npos);
  const std::string src = dsymm_fortran();
  const std::string p3 = build_prompt("dsymm", PromptMode::FrtcodeToOptCcode, src).text;
  CHECK(p3.find("\"void xerbla(const char *srname, const int info);\"") != std::string::npos);
  CHECK(p3.find("it must be named \"xerbla\"") != std::string::npos);
  CHECK(p3.find("Use macros named \"MIN()\"") != std::string::npos);
  CHECK(p3.size() > src.size());
  CHECK(p3.compare(p3.size() - src.size(), src.size(), src) == 0);
  for (const RoutineSpec& s : all_routines()) {
    for (PromptMode m : kAllModes) {
      const PromptBundle b = build_prompt(s.id, m, std::string("src"));
      CHECK(b.text.find("Insert printf(\"[gptblas]\");") != std::string::npos);
      CHECK(b.text.find(kRoutinePlaceholder) == std::string::npos);
      CHECK(b.text.find("\"GPTBLAS_" + std::string(s.name) + "\"") != std::string::npos);
      CHECK(b.text == build_prompt(s.id, m, std::string("src")).text);
    }
  }
}

TEST_CASE("prompt errors") {
  CHECK_THROWS_AS(build_prompt(Routine::dsymm, PromptMode::FrtcodeToOptCcode), PromptError);
  CHECK_THROWS_AS(build_prompt("dfoo", PromptMode::NameToCcode), PromptError);
  CHECK(prompt_mode_from_string("NameToOptCcode") == PromptMode::NameToOptCcode);
  CHECK_FALSE(prompt_mode_from_string("nametoccode"));
  CHECK_FALSE(build_prompt(Routine::dgemm, PromptMode::NameToCcode, std::string("x")).attachment);
}
