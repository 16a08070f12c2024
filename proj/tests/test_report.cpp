#include <doctest.h>

#include "jrobust/error.hpp"
#include "jrobust/report.hpp"
#include "temp_dir.hpp"

using namespace jrobust;

namespace {

BugResult result(std::string model, std::string id, std::optional<TransformKind> kind,
                 std::vector<bool> outcomes, std::optional<double> codebleu = std::nullopt) {
  BugResult r;
  r.model = std::move(model);
  r.base_id = id.substr(0, id.find('#'));
  r.id = std::move(id);
  r.kind = kind;
  r.stats = SampleStats::from_outcomes(outcomes);
  r.codebleu = codebleu;
  for (bool ok : outcomes) r.verdicts.emplace_back(ok ? "pass" : "fail");
  return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("change formatting") {
  CHECK(format_change(relative_change(14.53, 6.54)) == "54.99↓");
  CHECK(format_change(relative_change(12.9, 13.5)) == "4.65↑");
  CHECK(format_change(relative_change(20.0, 20.0)) == "0%");
  CHECK(format_change(relative_change(0.0, 5.0)) == "n/a");
}

TEST_CASE("clamped pass@k") {
  const std::vector<SampleStats> s = {SampleStats::from_outcomes({false, true}),
                                      SampleStats::from_outcomes({false, false, false})};
  CHECK(pass_any_clamped(s, 10) == doctest::Approx(50.0));
  CHECK(pass_any_clamped(s, 1) == doctest::Approx(0.0));
  CHECK(pass_unbiased_clamped(s, 10) == doctest::Approx(50.0));
  CHECK(pass_unbiased_clamped(s, 1) == doctest::Approx(25.0));
}

TEST_CASE("rows pair each kind with its base bugs") {
  const auto loop = TransformKind::LoopExchange;
  const auto log = TransformKind::InsertLog;
  const std::vector<BugResult> orig = {
      result("m", "A", std::nullopt, {true}, 0.9),
      result("m", "B", std::nullopt, {false}, 0.5),
      result("m", "C", std::nullopt, {true}, 0.7),
  };
  const std::vector<BugResult> trans = {
      result("m", "A#loop", loop, {false}, 0.8),
      result("m", "B#loop", loop, {false}, 0.4),
      result("m", "C#log", log, {true}, 0.7),
  };
  const ReportTable t = build_report(orig, trans, 1);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].kind == loop);
  CHECK(t.rows[0].bugs_orig == 2);
  CHECK(t.rows[0].any_orig == doctest::Approx(50.0));
  CHECK(t.rows[0].any_trans == doctest::Approx(0.0));
  CHECK(format_change(t.rows[0].any_change) == "100.00↓");
  CHECK(*t.rows[0].codebleu_orig == doctest::Approx(70.0));
  CHECK(*t.rows[0].codebleu_trans == doctest::Approx(60.0));
  CHECK(t.rows[1].kind == log);
  CHECK(format_change(t.rows[1].any_change) == "0%");
  CHECK(t.instances.at(loop) == 2);
}

TEST_CASE("small kinds carry the underpowered marker") {
  std::vector<BugResult> orig, trans;
  for (int i = 0; i < 7; ++i) {
    const std::string id = "B" + std::to_string(i);
    orig.push_back(result("m", id, std::nullopt, {i < 3}));
    trans.push_back(result("m", id + "#bool", TransformKind::BooleanExchange, {i < 2}));
  }
  const ReportTable t = build_report(orig, trans, 1);
  const std::string table = render_report(t, ReportFormat::Table);
  CHECK(table.find("(7 instances) †") != std::string::npos);
  CHECK(table.find("fewer than 30 instances") != std::string::npos);
  const std::string csv = render_report(t, ReportFormat::Csv);
  CHECK(csv.starts_with("kind,instances,model,"));
  CHECK(csv.find(",true") != std::string::npos);
}

TEST_CASE("manifest counts override observed counts") {
  const std::vector<BugResult> orig = {result("m", "A", std::nullopt, {true})};
  const std::vector<BugResult> trans = {result("m", "A#1", TransformKind::InsertLog, {true})};
  const std::map<TransformKind, int> counts = {{TransformKind::InsertLog, 40}};
  const ReportTable t = build_report(orig, trans, 1, &counts);
  CHECK(t.instances.at(TransformKind::InsertLog) == 40);
  CHECK(render_report(t, ReportFormat::Table).find("†") == std::string::npos);
}

TEST_CASE("mismatched inputs are rejected") {
  const std::vector<BugResult> orig = {result("a", "A", std::nullopt, {true})};
  const std::vector<BugResult> trans = {result("b", "A#1", TransformKind::InsertLog, {true})};
  CHECK_THROWS_WITH_AS(build_report(orig, trans, 1),
                       doctest::Contains("a (orig only)"), InputError);
  CHECK_THROWS_AS(build_report(orig, orig, 0), ContractViolation);
  const std::vector<BugResult> missing = {result("a", "Z#1", TransformKind::InsertLog, {true})};
  CHECK_THROWS_AS(build_report(orig, missing, 1), InputError);
}

TEST_CASE("results files round trip") {
  testdata::TempDir d;
  const std::vector<BugResult> rs = {
      result("m", "A", std::nullopt, {false, true}, 0.25),
      result("m", "A#1", TransformKind::ParamRename, {false}),
  };
  write_results(rs, d / "r.jsonl");
  const auto back = read_results(d / "r.jsonl");
  REQUIRE(back.size() == 2);
  CHECK(back[0].stats.first_pass == 2);
  CHECK(*back[0].codebleu == doctest::Approx(0.25));
  CHECK(back[1].kind == TransformKind::ParamRename);
  CHECK_FALSE(back[1].codebleu);
  CHECK(back[1].verdicts == std::vector<std::string>{"fail"});

  d.write("bad.jsonl", R"({"model":"m","id":"A","base_id":"A","kind":null,"n":1,"c":2,"first_pass":1,"codebleu":null})" "\n");
  CHECK_THROWS_AS(read_results(d / "bad.jsonl"), InputError);
}

}  // TEST_SUITE
