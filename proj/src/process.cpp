#include "blasgen/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

extern char** environ;

namespace blasgen {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::string> merged_env(const std::vector<std::pair<std::string, std::string>>& extra) {
  std::map<std::string, std::string> vars;
  for (char** e = environ; e && *e; ++e) {
    std::string_view kv(*e);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) continue;
    vars[std::string(kv.substr(0, eq))] = std::string(kv.substr(eq + 1));
  }
  for (const auto& [k, v] : extra) vars[k] = v;
  std::vector<std::string> out;
  out.reserve(vars.size());
  for (const auto& [k, v] : vars) out.push_back(k + "=" + v);
  return out;
}

std::vector<char*> c_strings(std::vector<std::string>& v) {
  std::vector<char*> out;
  out.reserve(v.size() + 1);
  for (std::string& s : v) out.push_back(s.data());
  out.push_back(nullptr);
  return out;
}

void decode_status(int status, ProcessResult& r) {
  if (WIFEXITED(status)) {
    r.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    r.signal = WTERMSIG(status);
  }
}

}  // namespace

ProcessResult run_process(const SpawnOptions& opts) {
  ProcessResult r;
  if (opts.argv.empty()) {
    r.error = "empty argv";
    return r;
  }
  int fds[2];
  if (pipe2(fds, O_CLOEXEC) != 0) {
    r.error = std::string("pipe: ") + std::strerror(errno);
    return r;
  }

  posix_spawn_file_actions_t fa;
  posix_spawn_file_actions_init(&fa);
  const std::string out = opts.stdout_path.empty() ? "/dev/null" : opts.stdout_path;
  const std::string err = opts.stderr_path.empty() ? "/dev/null" : opts.stderr_path;
  posix_spawn_file_actions_addopen(&fa, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&fa, 1, out.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (err == out && !opts.stdout_path.empty()) {
    posix_spawn_file_actions_adddup2(&fa, 1, 2);
  } else {
    posix_spawn_file_actions_addopen(&fa, 2, err.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  }
  posix_spawn_file_actions_adddup2(&fa, fds[1], 3);

  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP | POSIX_SPAWN_SETSIGMASK);
  posix_spawnattr_setpgroup(&attr, 0);
  sigset_t none;
  sigemptyset(&none);
  posix_spawnattr_setsigmask(&attr, &none);

  std::vector<std::string> argv = opts.argv;
  std::vector<std::string> env = merged_env(opts.env);
  auto cargv = c_strings(argv);
  auto cenv = c_strings(env);

  const auto start = Clock::now();
  pid_t pid = -1;
  const int rc = posix_spawnp(&pid, cargv[0], &fa, &attr, cargv.data(), cenv.data());
  posix_spawn_file_actions_destroy(&fa);
  posix_spawnattr_destroy(&attr);
  close(fds[1]);
  if (rc != 0) {
    close(fds[0]);
    r.error = std::string("spawn ") + opts.argv[0] + ": " + std::strerror(rc);
    return r;
  }
  r.started = true;

  const bool limited = opts.timeout.count() > 0;
  auto deadline = start + opts.timeout;
  std::string pending;
  bool eof = false;
  int status = 0;
  bool reaped = false;
  // Returns false at end of stream, or when nothing is ready within wait_ms.
  auto read_some = [&](int wait_ms) {
    pollfd pfd{fds[0], POLLIN, 0};
    if (poll(&pfd, 1, wait_ms) <= 0) return wait_ms > 0;
    char buf[4096];
    const ssize_t got = read(fds[0], buf, sizeof buf);
    if (got <= 0) return false;
    pending.append(buf, static_cast<std::size_t>(got));
    std::size_t nl;
    while ((nl = pending.find('\n')) != std::string::npos) {
      if (opts.on_progress) {
        opts.on_progress(std::string_view(pending).substr(0, nl));
        if (opts.timeout.count() > 0) deadline = Clock::now() + opts.timeout;
      }
      pending.erase(0, nl + 1);
    }
    return true;
  };

  while (!reaped) {
    int wait_ms = 20;
    if (limited) {
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
      if (left <= 0) {
        kill(-pid, SIGKILL);
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        r.timed_out = true;
        reaped = true;
        break;
      }
      wait_ms = static_cast<int>(std::min<long long>(left, eof ? 5 : 1000));
    } else if (!eof) {
      wait_ms = 1000;
    }

    if (!eof) {
      if (!read_some(wait_ms)) eof = true;
    } else {
      std::this_thread::sleep_for(std::chrono::milliseconds(std::min(wait_ms, 5)));
    }
    const pid_t w = waitpid(pid, &status, WNOHANG);
    if (w == pid) reaped = true;
  }
  // Lines written just before exit may still sit in the pipe.
  while (!eof && read_some(0)) {
  }
  close(fds[0]);

  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!r.timed_out) decode_status(status, r);
  return r;
}

ProcessResult run_capture(const std::vector<std::string>& argv, std::string& output,
                          std::chrono::milliseconds timeout) {
  char tmpl[] = "/tmp/blasgen-capture-XXXXXX";
  const int fd = mkstemp(tmpl);
  if (fd < 0) {
    ProcessResult r;
    r.error = "mkstemp failed";
    return r;
  }
  close(fd);
  SpawnOptions opts;
  opts.argv = argv;
  opts.stdout_path = tmpl;
  opts.stderr_path = tmpl;
  opts.timeout = timeout;
  ProcessResult r = run_process(opts);
  std::ifstream in(tmpl);
  std::ostringstream ss;
  ss << in.rdbuf();
  output = ss.str();
  std::filesystem::remove(tmpl);
  return r;
}

}  // namespace blasgen
