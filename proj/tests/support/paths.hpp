#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace blasgen::testing {

inline std::filesystem::path source_dir() { return BLASGEN_SOURCE_DIR; }
inline std::filesystem::path refabi_path() { return BLASGEN_REFABI_PATH; }
inline std::filesystem::path scratch_root() { return BLASGEN_TEST_SCRATCH; }

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace blasgen::testing
