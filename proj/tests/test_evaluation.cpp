#include <doctest.h>

#include "fixtures.hpp"
#include "jrobust/evaluation.hpp"
#include "temp_dir.hpp"

using namespace jrobust;

namespace {

std::vector<BugInstance> corpus_bugs(const std::vector<std::string>& ids) {
  const LoadResult loaded = load_base_dataset(testdata::corpus_dir(), testdata::corpus_manifest());
  std::vector<BugInstance> out;
  for (const auto& b : loaded.instances) {
    if (std::ranges::find(ids, b.id) != ids.end()) out.push_back(b);
  }
  REQUIRE(out.size() == ids.size());
  return out;
}

// Writes patches for one bug: 'f' is the fixed program, 'b' the buggy one.
void write_patches(const testdata::TempDir& root, const EvalTarget& t, std::string_view plan) {
  for (std::size_t i = 0; i < plan.size(); ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "%02zu.java", i + 1);
    const SourceText& src = plan[i] == 'f' ? t.fixed : t.buggy;
    root.write(t.id + "/" + name, src.content());
  }
}

Harness harness() { return Harness(Toolchain::discover()); }

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("a patch equal to the fixed program passes") {
  const auto targets = targets_from_base(corpus_bugs({"ADD"}));
  const Harness h = harness();
  CHECK(evaluate_patch(h, targets[0], targets[0].fixed, 1).verdict.status == TestStatus::Pass);
  CHECK(evaluate_patch(h, targets[0], targets[0].buggy, 2).verdict.status == TestStatus::Fail);
}

TEST_CASE("pass@k over a mixed set of patches") {
  const auto targets =
      targets_from_base(corpus_bugs({"ADD", "FIB", "IS_PRIME", "STRLEN", "MAX_ELEMENT"}));
  testdata::TempDir root;
  // ADD fixed first, FIB fixed third, IS_PRIME never, STRLEN fixed second
  // and third, MAX_ELEMENT has no patches.
  const std::map<std::string, std::string> plans = {
      {"ADD", "fbb"}, {"FIB", "bbf"}, {"IS_PRIME", "bbb"}, {"STRLEN", "bff"}};
  for (const auto& t : targets) {
    if (auto it = plans.find(t.id); it != plans.end()) write_patches(root, t, it->second);
  }
  EvaluateOptions o;
  o.model = "m";
  o.jobs = 2;
  std::vector<std::string> warnings;
  o.log = [&](const std::string& w) { warnings.push_back(w); };
  const EvaluateResult r = evaluate_patches(harness(), targets, root.path(), o);
  REQUIRE(r.results.size() == targets.size());
  CHECK(r.bugs_without_patches == 1);
  CHECK_FALSE(warnings.empty());
  CHECK(r.verdicts.size() == 12);

  std::map<std::string, SampleStats> by_id;
  for (const auto& b : r.results) by_id[b.id] = b.stats;
  CHECK(by_id["ADD"].c == 1);
  CHECK(by_id["ADD"].first_pass == 1);
  CHECK(by_id["FIB"].first_pass == 3);
  CHECK(by_id["IS_PRIME"].c == 0);
  CHECK(by_id["STRLEN"].c == 2);
  CHECK(by_id["STRLEN"].first_pass == 2);
  CHECK(by_id["MAX_ELEMENT"].n == 0);

  std::vector<SampleStats> scored;
  for (const auto& b : r.results) {
    if (b.stats.n > 0) scored.push_back(b.stats);
  }
  // pass@1: only ADD. pass@3: ADD, FIB, STRLEN.
  CHECK(pass_any_clamped(scored, 1) == doctest::Approx(25.0));
  CHECK(pass_any_clamped(scored, 3) == doctest::Approx(75.0));
  // Unbiased pass@1 is the mean of c/n: (1/3 + 1/3 + 0 + 2/3) / 4.
  CHECK(pass_unbiased_clamped(scored, 1) == doctest::Approx(100.0 * (4.0 / 3.0) / 4.0));

  for (const auto& b : r.results) {
    CHECK(b.model == "m");
    if (b.stats.n == 0) continue;
    REQUIRE(b.codebleu);
    CHECK(*b.codebleu > 0.5);
  }
}

TEST_CASE("all-fixed and all-buggy extremes") {
  const auto targets = targets_from_base(corpus_bugs({"ADD", "FIB"}));
  for (const char kind : {'f', 'b'}) {
    testdata::TempDir root;
    for (const auto& t : targets) write_patches(root, t, std::string(2, kind));
    EvaluateOptions o;
    o.codebleu = false;
    const auto r = evaluate_patches(harness(), targets, root.path(), o);
    std::vector<SampleStats> stats;
    for (const auto& b : r.results) {
      stats.push_back(b.stats);
      CHECK_FALSE(b.codebleu);
    }
    CHECK(pass_any_clamped(stats, 1) == doctest::Approx(kind == 'f' ? 100.0 : 0.0));
  }
}

}  // TEST_SUITE
