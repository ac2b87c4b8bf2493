#include "blasgen/promptkit.hpp"

namespace blasgen {

namespace {

#define BLASGEN_PROMPT_CONTRACT                                                               \
  "Function name must be \"GPTBLAS_#ROUTINE#\". \"GPTBLAS\" is capitalized. All function "    \
  "argument names must be in lower case, all must be taken as pointers, and those that have " \
  "not changed in the code must be marked with const."
#define BLASGEN_PROMPT_OUTPUT                                                             \
  "Insert printf(\"[gptblas]\"); at the beginning of the routine. Do not output anything " \
  "other than the source code. Do not output Markdown code block symbols either."
#define BLASGEN_PROMPT_OPT \
  "Thread parallelization, SIMD vectorization, and cache blocking should be considered for speed-up."

constexpr std::string_view kNameToC =
    "Implement #ROUTINE# routine in BLAS in C language. " BLASGEN_PROMPT_CONTRACT
    " " BLASGEN_PROMPT_OUTPUT;

constexpr std::string_view kNameToOptC =
    "Implement #ROUTINE# routine in BLAS in C language. " BLASGEN_PROMPT_OPT
    " " BLASGEN_PROMPT_CONTRACT " " BLASGEN_PROMPT_OUTPUT;

constexpr std::string_view kFrtToOptC =
    "Implement C code that has the same functionality as the attached Fortran code; the "
    "specifications are written at the beginning of the Fortran code. " BLASGEN_PROMPT_OPT
    " " BLASGEN_PROMPT_CONTRACT
    " If you implement the XERBLA function, it must be named \"xerbla\" and the function body "
    "must not be implemented, but the prototype declaration \"void xerbla(const char *srname, "
    "const int info);\" must be added at the beginning of the code. Use macros named \"MIN()\" "
    "for \"min()\" and \"MAX()\" for \"max()\". " BLASGEN_PROMPT_OUTPUT;

#undef BLASGEN_PROMPT_CONTRACT
#undef BLASGEN_PROMPT_OUTPUT
#undef BLASGEN_PROMPT_OPT

}  // namespace

std::string_view to_string(PromptMode m) {
  switch (m) {
    case PromptMode::NameToCcode: return "NameToCcode";
    case PromptMode::NameToOptCcode: return "NameToOptCcode";
    case PromptMode::FrtcodeToOptCcode: return "FrtcodeToOptCcode";
  }
  return "?";
}

std::optional<PromptMode> prompt_mode_from_string(std::string_view s) {
  for (PromptMode m : kAllModes) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view prompt_template(PromptMode m) {
  switch (m) {
    case PromptMode::NameToCcode: return kNameToC;
    case PromptMode::NameToOptCcode: return kNameToOptC;
    case PromptMode::FrtcodeToOptCcode: return kFrtToOptC;
  }
  throw PromptError("unknown prompt mode");
}

std::string_view template_stem(PromptMode m) {
  switch (m) {
    case PromptMode::NameToCcode: return "name_to_c";
    case PromptMode::NameToOptCcode: return "name_to_opt_c";
    case PromptMode::FrtcodeToOptCcode: return "frt_to_opt_c";
  }
  throw PromptError("unknown prompt mode");
}

PromptBundle build_prompt(Routine routine, PromptMode mode, std::optional<std::string> attachment) {
  if (mode == PromptMode::FrtcodeToOptCcode && !attachment) {
    throw PromptError("FrtcodeToOptCcode needs the Fortran reference source");
  }
  if (mode != PromptMode::FrtcodeToOptCcode) attachment.reset();
  PromptBundle b;
  b.mode = mode;
  b.routine = routine;
  const std::string_view name = name_of(routine);
  const std::string_view tmpl = prompt_template(mode);
  std::size_t from = 0;
  for (std::size_t at; (at = tmpl.find(kRoutinePlaceholder, from)) != std::string_view::npos;) {
    b.text.append(tmpl.substr(from, at - from));
    b.text.append(name);
    from = at + kRoutinePlaceholder.size();
  }
  b.text.append(tmpl.substr(from));
  if (attachment) {
    b.text += "\n\n";
    b.text += *attachment;
  }
  b.attachment = std::move(attachment);
  return b;
}

PromptBundle build_prompt(std::string_view routine, PromptMode mode,
                          std::optional<std::string> attachment) {
  const auto r = routine_from_name(routine);
  if (!r) throw PromptError("unknown routine: " + std::string(routine));
  return build_prompt(*r, mode, std::move(attachment));
}

}  // namespace blasgen
