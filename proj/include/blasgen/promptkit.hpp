#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blasgen/routines.hpp"

namespace blasgen {

enum class PromptMode { NameToCcode, NameToOptCcode, FrtcodeToOptCcode };

inline constexpr PromptMode kAllModes[] = {PromptMode::NameToCcode, PromptMode::NameToOptCcode,
                                           PromptMode::FrtcodeToOptCcode};

std::string_view to_string(PromptMode m);
std::optional<PromptMode> prompt_mode_from_string(std::string_view s);

/// Raw template text with the #ROUTINE# placeholder, no trailing newline.
std::string_view prompt_template(PromptMode m);
/// File stem under prompts/ for the mode's template.
std::string_view template_stem(PromptMode m);

inline constexpr std::string_view kRoutinePlaceholder = "#ROUTINE#";

struct PromptBundle {
  PromptMode mode = PromptMode::NameToCcode;
  Routine routine = Routine::dasum;
  std::string text;
  std::optional<std::string> attachment;
};

class PromptError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Substitutes the routine name. The Fortran-based mode needs an attachment,
/// which is appended after a blank line.
PromptBundle build_prompt(Routine routine, PromptMode mode,
                          std::optional<std::string> attachment = std::nullopt);
PromptBundle build_prompt(std::string_view routine, PromptMode mode,
                          std::optional<std::string> attachment = std::nullopt);

}  // namespace blasgen
