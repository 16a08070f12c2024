#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jrobust {

struct ProcessOptions {
  std::filesystem::path cwd;  // empty: inherit
  std::chrono::milliseconds timeout{0};  // zero: no limit
  std::string stdin_data;
  std::vector<std::pair<std::string, std::string>> env;  // added/overridden
  std::size_t output_limit = 1 << 20;  // per stream; excess is dropped
};

struct ProcessResult {
  int exit_code = -1;  // valid when !signaled && !timed_out
  int signal = 0;
  bool signaled = false;
  bool timed_out = false;
  std::string out;
  std::string err;
  std::chrono::milliseconds duration{0};

  [[nodiscard]] bool ok() const { return !signaled && !timed_out && exit_code == 0; }
};

// Runs argv[0] (PATH lookup) in its own process group and waits for it. On
// timeout the whole group is killed. Throws InfrastructureError when the
// process cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const ProcessOptions& options = {});

// Locates an executable on PATH; empty when absent.
std::filesystem::path find_on_path(std::string_view name);

// A long-lived child speaking a line protocol over its standard streams.
// Not thread-safe: one caller at a time.
class LineProcess {
 public:
  explicit LineProcess(std::vector<std::string> argv);
  ~LineProcess();
  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Writes one line (a newline is appended) and reads one line back. Returns
  // nullopt on timeout or when the child closed its output; the child is
  // then dead and must be discarded.
  std::optional<std::string> request(std::string_view line,
                                     std::chrono::milliseconds timeout);
  [[nodiscard]] bool alive() const { return pid_ > 0; }

 private:
  void terminate();

  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string pending_;
};

}  // namespace jrobust
