#include "jrobust/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <thread>

#include "jrobust/error.hpp"

extern char** environ;

namespace jrobust {

namespace {

using Clock = std::chrono::steady_clock;

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

struct Pipe {
  int r = -1;
  int w = -1;
  Pipe() {
    int fds[2];
    if (::pipe2(fds, O_CLOEXEC) != 0) {
      throw InfrastructureError(std::string("pipe: ") + std::strerror(errno));
    }
    r = fds[0];
    w = fds[1];
  }
};

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

std::vector<std::string> merged_environment(
    const std::vector<std::pair<std::string, std::string>>& extra) {
  std::vector<std::string> env;
  for (char** e = environ; e && *e; ++e) {
    std::string_view kv(*e);
    const auto eq = kv.find('=');
    const std::string_view key = kv.substr(0, eq);
    bool overridden = false;
    for (const auto& [k, v] : extra) overridden |= (k == key);
    if (!overridden) env.emplace_back(kv);
  }
  for (const auto& [k, v] : extra) env.push_back(k + "=" + v);
  return env;
}

std::vector<char*> c_strings(std::vector<std::string>& v) {
  std::vector<char*> out;
  for (auto& s : v) out.push_back(s.data());
  out.push_back(nullptr);
  return out;
}

// Spawns argv in a new process group with the given pipe ends as stdio.
int spawn(std::vector<std::string> argv, const std::filesystem::path& cwd,
          const std::vector<std::pair<std::string, std::string>>& env_extra,
          int in_fd, int out_fd, int err_fd) {
  if (argv.empty()) throw ContractViolation("empty command line");
  ignore_sigpipe();
  posix_spawn_file_actions_t actions;
  posix_spawnattr_t attr;
  posix_spawn_file_actions_init(&actions);
  posix_spawnattr_init(&attr);
  posix_spawn_file_actions_adddup2(&actions, in_fd, STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, out_fd, STDOUT_FILENO);
  posix_spawn_file_actions_adddup2(&actions, err_fd, STDERR_FILENO);
  const std::string dir = cwd.string();
  if (!dir.empty()) posix_spawn_file_actions_addchdir_np(&actions, dir.c_str());
  posix_spawnattr_setpgroup(&attr, 0);
  sigset_t defaults;
  sigemptyset(&defaults);
  sigaddset(&defaults, SIGPIPE);
  posix_spawnattr_setsigdefault(&attr, &defaults);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP | POSIX_SPAWN_SETSIGDEF);

  std::vector<std::string> env = merged_environment(env_extra);
  auto argv_c = c_strings(argv);
  auto env_c = c_strings(env);
  pid_t pid = -1;
  const int rc = ::posix_spawnp(&pid, argv_c[0], &actions, &attr, argv_c.data(),
                                env_c.data());
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    throw InfrastructureError("cannot start '" + argv[0] + "': " + std::strerror(rc));
  }
  return pid;
}

void kill_group(int pid) {
  if (pid > 0) ::kill(-pid, SIGKILL);
}

}  // namespace

std::filesystem::path find_on_path(std::string_view name) {
  if (name.find('/') != std::string_view::npos) {
    std::filesystem::path p(name);
    return ::access(p.c_str(), X_OK) == 0 ? p : std::filesystem::path{};
  }
  const char* path = std::getenv("PATH");
  std::string_view rest = path ? path : "/usr/bin:/bin";
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    std::filesystem::path dir(rest.substr(0, colon));
    rest = colon == std::string_view::npos ? "" : rest.substr(colon + 1);
    const auto candidate = dir / name;
    if (::access(candidate.c_str(), X_OK) == 0) return candidate;
  }
  return {};
}

ProcessResult run_process(const std::vector<std::string>& argv,
                          const ProcessOptions& options) {
  Pipe in, out, err;
  const auto start = Clock::now();
  int pid;
  try {
    pid = spawn(argv, options.cwd, options.env, in.r, out.w, err.w);
  } catch (...) {
    for (int* fd : {&in.r, &in.w, &out.r, &out.w, &err.r, &err.w}) close_fd(*fd);
    throw;
  }
  close_fd(in.r);
  close_fd(out.w);
  close_fd(err.w);
  ::fcntl(in.w, F_SETFL, O_NONBLOCK);

  ProcessResult result;
  std::size_t written = 0;
  if (options.stdin_data.empty()) close_fd(in.w);
  const bool limited = options.timeout.count() > 0;
  const auto deadline = start + options.timeout;

  auto remaining_ms = [&]() -> int {
    if (!limited) return -1;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    return left.count() > 0 ? static_cast<int>(left.count()) : 0;
  };

  char buf[65536];
  while (out.r >= 0 || err.r >= 0) {
    std::vector<pollfd> fds;
    if (out.r >= 0) fds.push_back({out.r, POLLIN, 0});
    if (err.r >= 0) fds.push_back({err.r, POLLIN, 0});
    if (in.w >= 0) fds.push_back({in.w, POLLOUT, 0});
    const int wait = remaining_ms();
    if (limited && wait == 0) {
      result.timed_out = true;
      break;
    }
    const int n = ::poll(fds.data(), fds.size(), wait);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) continue;
    for (const pollfd& p : fds) {
      if (p.revents == 0) continue;
      if (p.fd == in.w) {
        const ssize_t w = ::write(in.w, options.stdin_data.data() + written,
                                  options.stdin_data.size() - written);
        if (w > 0) written += static_cast<std::size_t>(w);
        if (w < 0 && errno != EAGAIN) close_fd(in.w);
        if (written == options.stdin_data.size()) close_fd(in.w);
        continue;
      }
      const ssize_t r = ::read(p.fd, buf, sizeof buf);
      std::string& sink = p.fd == out.r ? result.out : result.err;
      if (r > 0) {
        const std::size_t room =
            sink.size() < options.output_limit ? options.output_limit - sink.size() : 0;
        sink.append(buf, std::min<std::size_t>(room, static_cast<std::size_t>(r)));
      } else if (r == 0 || errno != EINTR) {
        close_fd(p.fd == out.r ? out.r : err.r);
      }
    }
  }
  close_fd(in.w);
  close_fd(out.r);
  close_fd(err.r);

  if (result.timed_out) kill_group(pid);
  int status = 0;
  for (;;) {
    const pid_t done = ::waitpid(pid, &status, result.timed_out ? 0 : WNOHANG);
    if (done == pid) break;
    if (done < 0 && errno != EINTR) break;
    if (!result.timed_out && limited && remaining_ms() == 0) {
      result.timed_out = true;
    }
    if (result.timed_out) {
      kill_group(pid);
      continue;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  // Reap stray descendants still holding the group.
  kill_group(pid);

  result.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  if (!result.timed_out) {
    if (WIFEXITED(status)) {
      result.exit_code = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
      result.signaled = true;
      result.signal = WTERMSIG(status);
    }
  }
  return result;
}

LineProcess::LineProcess(std::vector<std::string> argv) {
  Pipe in, out;
  try {
    const int devnull = ::open("/dev/null", O_WRONLY | O_CLOEXEC);
    pid_ = spawn(std::move(argv), {}, {}, in.r, out.w, devnull >= 0 ? devnull : STDERR_FILENO);
    if (devnull >= 0) ::close(devnull);
  } catch (...) {
    for (int* fd : {&in.r, &in.w, &out.r, &out.w}) close_fd(*fd);
    throw;
  }
  close_fd(in.r);
  close_fd(out.w);
  to_child_ = in.w;
  from_child_ = out.r;
}

LineProcess::~LineProcess() { terminate(); }

void LineProcess::terminate() {
  close_fd(to_child_);
  close_fd(from_child_);
  if (pid_ > 0) {
    kill_group(pid_);
    int status;
    ::waitpid(pid_, &status, 0);
  }
  pid_ = -1;
}

std::optional<std::string> LineProcess::request(std::string_view line,
                                                std::chrono::milliseconds timeout) {
  if (!alive()) return std::nullopt;
  const auto deadline = Clock::now() + timeout;
  std::string msg(line);
  msg.push_back('\n');
  std::size_t written = 0;
  while (written < msg.size()) {
    const ssize_t w = ::write(to_child_, msg.data() + written, msg.size() - written);
    if (w < 0) {
      if (errno == EINTR) continue;
      terminate();
      return std::nullopt;
    }
    written += static_cast<std::size_t>(w);
  }
  char buf[4096];
  for (;;) {
    const auto nl = pending_.find('\n');
    if (nl != std::string::npos) {
      std::string reply = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      return reply;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (left.count() <= 0) {
      terminate();
      return std::nullopt;
    }
    pollfd p{from_child_, POLLIN, 0};
    const int n = ::poll(&p, 1, static_cast<int>(left.count()));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) continue;
    const ssize_t r = ::read(from_child_, buf, sizeof buf);
    if (r <= 0) {
      if (r < 0 && errno == EINTR) continue;
      terminate();
      return std::nullopt;
    }
    pending_.append(buf, static_cast<std::size_t>(r));
  }
}

}  // namespace jrobust
