#include <doctest.h>

#include <future>

#include "fixtures.hpp"
#include "jrobust/harness.hpp"
#include "jrobust/parallel.hpp"
#include "temp_dir.hpp"

using namespace jrobust;
using namespace std::chrono_literals;

namespace {

SourceFile file(const fs::path& p) {
  const std::string content = read_text_file(p);
  return {java_file_name(content), content};
}

SourceFile corpus(std::string_view kind, std::string_view id) {
  const std::string name = kind == "test" ? "TEST_" + std::string(id) : std::string(id);
  return file(testdata::corpus_dir() / kind / (name + ".java"));
}

SourceFile harness_fixture(std::string_view name) {
  return file(testdata::fixtures_dir() / "harness" / name);
}

Harness make_harness(std::chrono::milliseconds timeout = 30s) {
  HarnessOptions o;
  o.timeout = timeout;
  return Harness(Toolchain::discover(), o);
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("valid program and test compile") {
  testdata::TempDir d;
  const auto r = make_harness().compile({corpus("fixed", "ADD"), corpus("test", "ADD")}, d.path());
  CHECK(r.success);
  CHECK(fs::exists(r.artifacts_dir / "ADD.class"));
  CHECK(fs::exists(r.artifacts_dir / "TEST_ADD.class"));
}

TEST_CASE("syntax error fails compilation with diagnostics") {
  testdata::TempDir d;
  const auto r = make_harness().compile({harness_fixture("Broken.java")}, d.path());
  CHECK_FALSE(r.success);
  CHECK_FALSE(r.diagnostics.empty());
  const auto v = make_harness().run_tests(r, "Broken", 0ms, true);
  CHECK(v.status == TestStatus::CompileError);
}

TEST_CASE("fixed programs pass and buggy programs fail") {
  const Harness h = make_harness();
  const auto loaded = testdata::corpus_files();
  for (std::string_view id : {"ADD", "FIB", "IS_PRIME", "DIGIT_SUM"}) {
    CAPTURE(id);
    CHECK(h.evaluate({corpus("fixed", id)}, corpus("test", id)).status == TestStatus::Pass);
    const auto bad = h.evaluate({corpus("buggy", id)}, corpus("test", id));
    CHECK(bad.status == TestStatus::Fail);
    CHECK_FALSE(bad.detail.empty());
  }
}

TEST_CASE("regressing patch names the failing check") {
  SourceFile patch = corpus("fixed", "ADD");
  const auto at = patch.content.find("x + y");
  REQUIRE(at != std::string::npos);
  patch.content.replace(at, 5, "x + y + (x == 5 ? 1 : 0)");
  const auto v = make_harness().evaluate({patch}, corpus("test", "ADD"));
  CHECK(v.status == TestStatus::Fail);
  CHECK(v.detail.find("add(5, 7)") != std::string::npos);
}

TEST_CASE("infinite loop times out within the grace period") {
  const auto timeout = 2s;
  const auto start = std::chrono::steady_clock::now();
  const auto v = make_harness(timeout).evaluate({harness_fixture("Spin.java")},
                                                harness_fixture("TEST_Spin.java"));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(v.status == TestStatus::Timeout);
  // Compilation time is outside the run timeout, so bound the run itself.
  CHECK(v.duration < timeout + kTimeoutGrace);
  CHECK(elapsed < 60s);
}

TEST_CASE("abnormal exit is a failure") {
  const auto v = make_harness().evaluate({}, harness_fixture("TEST_Halt.java"));
  CHECK(v.status == TestStatus::Fail);
  CHECK(v.detail.starts_with("exit 3"));
}

TEST_CASE("concurrent evaluations are isolated and repeatable") {
  const Harness h = make_harness();
  std::vector<TestVerdict> verdicts(6);
  parallel_for(verdicts.size(), 3, [&](std::size_t i) {
    const std::string_view id = i % 2 ? "FIB" : "ADD";
    verdicts[i] = h.evaluate({corpus(i % 3 ? "fixed" : "buggy", id)}, corpus("test", id));
  });
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    CAPTURE(i);
    CHECK(verdicts[i].status == (i % 3 ? TestStatus::Pass : TestStatus::Fail));
  }
}

TEST_CASE("workdirs are removed unless kept") {
  testdata::TempDir root;
  HarnessOptions o;
  o.temp_root = root.path();
  const Harness h(Toolchain::discover(), o);
  CHECK(h.evaluate({corpus("fixed", "ADD")}, corpus("test", "ADD")).status == TestStatus::Pass);
  CHECK(fs::is_empty(root.path()));
  o.keep_workdirs = true;
  const Harness keep(Toolchain::discover(), o);
  (void)keep.evaluate({corpus("fixed", "ADD")}, corpus("test", "ADD"));
  CHECK_FALSE(fs::is_empty(root.path()));
}

}  // TEST_SUITE
