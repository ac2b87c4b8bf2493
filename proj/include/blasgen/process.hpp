#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blasgen {

struct SpawnOptions {
  std::vector<std::string> argv;  // argv[0] is resolved through PATH
  std::string stdout_path;        // empty: /dev/null
  std::string stderr_path;        // empty: /dev/null
  std::vector<std::pair<std::string, std::string>> env;  // added to / overriding environ
  /// Wall-clock budget; zero means unlimited. When `on_progress` is set the
  /// deadline restarts at every progress line.
  std::chrono::milliseconds timeout{0};
  /// Receives each line the child writes to file descriptor 3.
  std::function<void(std::string_view)> on_progress;
};

struct ProcessResult {
  bool started = false;
  int exit_code = -1;  // valid when signal == 0 and !timed_out
  int signal = 0;
  bool timed_out = false;
  double seconds = 0.0;
  std::string error;  // spawn failure reason
};

/// Runs a child in its own process group; on timeout the whole group is
/// killed with SIGKILL.
ProcessResult run_process(const SpawnOptions& opts);

/// Runs a command and captures stdout+stderr into one string.
ProcessResult run_capture(const std::vector<std::string>& argv, std::string& output,
                          std::chrono::milliseconds timeout);

}  // namespace blasgen
