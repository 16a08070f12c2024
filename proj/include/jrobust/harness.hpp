#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jrobust {

namespace fs = std::filesystem;

// How to invoke the Java compiler and launcher. Each is a command prefix so
// that a compiler packaged as a jar can be used as well as a plain javac.
struct Toolchain {
  std::vector<std::string> javac;
  std::vector<std::string> java;
  std::vector<std::string> javac_flags;  // -nowarn for a discovered javac
  std::vector<std::string> java_flags;
  std::string classpath;  // extra entries (e.g. a test framework jar)

  // Resolution order: explicit jdk_home, then JROBUST_JAVAC / JROBUST_JAVA
  // commands, then JDK_HOME and JAVA_HOME, then PATH. Throws
  // InfrastructureError when no compiler or launcher is found.
  // JROBUST_JAVAC_FLAGS replaces the default compiler flags.
  static Toolchain discover(const std::optional<fs::path>& jdk_home = std::nullopt);
};

struct SourceFile {
  std::string file_name;  // e.g. "ADD.java"
  std::string content;
};

struct CompileResult {
  bool success = false;
  std::string diagnostics;
  fs::path artifacts_dir;
};

enum class TestStatus { Pass, Fail, CompileError, Timeout, Crash };
std::string_view to_string(TestStatus s);

struct TestVerdict {
  TestStatus status = TestStatus::Fail;
  std::chrono::milliseconds duration{0};
  std::string detail;
};

struct HarnessOptions {
  std::chrono::milliseconds timeout = std::chrono::seconds(30);
  fs::path temp_root;  // empty: the system temp directory
  bool keep_workdirs = false;
};

inline constexpr std::chrono::milliseconds kTimeoutGrace{2000};

// Qualified name of the first top-level class in a compilation unit, with
// its package prefix. Empty when there is none.
std::string qualified_class_name(std::string_view source);
// Conventional file name for a compilation unit: "<Class>.java".
std::string java_file_name(std::string_view source);
bool declares_main(std::string_view source);

// Compiles and runs Java programs in private temporary work directories. A
// test is a class with a main method, or a JUnit 4 class when a runner is on
// the classpath; exit status 0 means every test passed. Safe to share
// between threads: each call owns its workdir.
class Harness {
 public:
  explicit Harness(Toolchain toolchain, HarnessOptions options = {});

  [[nodiscard]] const HarnessOptions& options() const { return options_; }
  [[nodiscard]] const Toolchain& toolchain() const { return toolchain_; }

  // Writes the sources under workdir/src and compiles into workdir/classes.
  CompileResult compile(const std::vector<SourceFile>& files,
                        const fs::path& workdir) const;

  // Runs the named test class, through JUnitCore when it has no main
  // method. A zero timeout uses the configured default.
  TestVerdict run_tests(const CompileResult& compiled, const std::string& test_class,
                        std::chrono::milliseconds timeout = {},
                        bool has_main = true) const;

  // compile + run in a fresh workdir that is removed afterwards.
  TestVerdict evaluate(const std::vector<SourceFile>& program,
                       const SourceFile& test,
                       std::chrono::milliseconds timeout = {}) const;

  fs::path make_workdir() const;

 private:
  Toolchain toolchain_;
  HarnessOptions options_;
};

}  // namespace jrobust
