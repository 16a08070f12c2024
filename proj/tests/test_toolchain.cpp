#include <doctest.h>

#include <stdlib.h>

#include "jrobust/error.hpp"
#include "jrobust/harness.hpp"

using namespace jrobust;

namespace {

// Sets an environment variable for the scope, restoring the old value.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value) {
      ::setenv(name, value, 1);
    } else {
      ::unsetenv(name);
    }
  }
  ~ScopedEnv() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST_SUITE("toolchain") {

TEST_CASE("missing JDK home is an infrastructure error") {
  CHECK_THROWS_AS((void)Toolchain::discover(fs::path("/nonexistent/jdk")), InfrastructureError);
}

TEST_CASE("command prefixes come from the environment") {
  ScopedEnv javac("JROBUST_JAVAC", "/usr/bin/java -cp compiler.jar Main");
  ScopedEnv java("JROBUST_JAVA", "/usr/bin/java");
  ScopedEnv flags("JROBUST_JAVAC_FLAGS", "-g");
  const Toolchain t = Toolchain::discover();
  CHECK(t.javac == std::vector<std::string>{"/usr/bin/java", "-cp", "compiler.jar", "Main"});
  CHECK(t.java == std::vector<std::string>{"/usr/bin/java"});
  CHECK(t.javac_flags == std::vector<std::string>{"-g"});
}

TEST_CASE("nothing discoverable is an infrastructure error") {
  ScopedEnv javac("JROBUST_JAVAC", nullptr);
  ScopedEnv jdk("JDK_HOME", nullptr);
  ScopedEnv home("JAVA_HOME", nullptr);
  ScopedEnv path("PATH", "/nonexistent");
  CHECK_THROWS_AS((void)Toolchain::discover(), InfrastructureError);
}

TEST_CASE("class and file names") {
  CHECK(qualified_class_name("package a.b;\npublic class ADD {}") == "a.b.ADD");
  CHECK(qualified_class_name("// c\nclass T { }") == "T");
  CHECK(java_file_name("package a.b;\npublic class ADD {}") == "ADD.java");
  CHECK(declares_main("class T { public static void main(String[] args) {} }"));
  CHECK_FALSE(declares_main("class T { void run() {} }"));
}

TEST_CASE("verdict names") {
  CHECK(to_string(TestStatus::Pass) == "pass");
  CHECK(to_string(TestStatus::Fail) == "fail");
  CHECK(to_string(TestStatus::CompileError) == "compile-error");
  CHECK(to_string(TestStatus::Timeout) == "timeout");
  CHECK(to_string(TestStatus::Crash) == "crash");
}

}  // TEST_SUITE
