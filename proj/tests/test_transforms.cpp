#include <doctest.h>

#include "fixtures.hpp"
#include "jrobust/error.hpp"
#include "jrobust/transforms.hpp"

using namespace jrobust;

namespace {

Program prog(std::string src) { return Program::parse(SourceText(std::move(src))); }

std::vector<TransformSite> sites(const Program& p, TransformKind k) { return enumerate_sites(p, k); }

const TransformSite& site_for(const std::vector<TransformSite>& s, std::string_view name) {
  for (const auto& x : s) {
    if (x.decl_name == name) return x;
  }
  FAIL("no site for " << name);
  return s.front();
}

std::string apply(const Program& p, const TransformSite& s) {
  return apply_structural(p, s, kDefaultSeed).output.content();
}

bool reparses(const SourceText& t) {
  try {
    (void)Program::parse(t);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

int bound_count(const Program& p, std::string_view name, DeclKind kind) {
  int n = 0;
  for (const auto& d : p.scopes.declarations()) {
    if (d.name == name && d.kind == kind) n += static_cast<int>(p.scopes.occurrences(d).size());
  }
  return n;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("kind names round-trip") {
  for (TransformKind k : kAllTransformKinds) CHECK(parse_transform_kind(to_string(k)) == k);
  CHECK_FALSE(parse_transform_kind("SwitchExchange").has_value());
}

TEST_CASE("program without loops has no LoopExchange site") {
  CHECK(sites(prog("class A { int f(int x) { return x + 1; } }"), TransformKind::LoopExchange)
            .empty());
}

TEST_CASE("if (a == b) is one ReorderCondition site") {
  const Program p = prog("class A { void f(int a, int b) {\n  if (a == b) {}\n} }");
  const auto s = sites(p, TransformKind::ReorderCondition);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) == "class A { void f(int a, int b) {\n  if (b == a) {}\n} }");
}

TEST_CASE("ReorderCondition skips side-effecting operands") {
  const Program p = prog(
      "class A { int g() { return 1; } void f(int a, int[] xs) {\n"
      "  if (g() == a) {}\n  if (a++ == 2) {}\n  if ((a = 3) == 3) {}\n"
      "  if (xs[0] == xs[1]) {}\n  if (a / 2 == 0) {}\n} }");
  const auto s = sites(p, TransformKind::ReorderCondition);
  REQUIRE(s.size() == 1);
  CHECK(p.text.slice(s[0].anchor) == "a / 2 == 0");
}

TEST_CASE("ReorderCondition on symmetric operands and as an involution") {
  const Program p = prog("class A { boolean f(int x) { return x != x; } }");
  const auto s = sites(p, TransformKind::ReorderCondition);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) == p.text.content());

  const Program q = prog("class A { boolean f(int x, int y) { return (x + 1) == y * 2; } }");
  const std::string once = apply(q, sites(q, TransformKind::ReorderCondition)[0]);
  CHECK(once == "class A { boolean f(int x, int y) { return y * 2 == (x + 1); } }");
  const Program q2 = prog(once);
  CHECK(apply(q2, sites(q2, TransformKind::ReorderCondition)[0]) == q.text.content());
}

TEST_CASE("LocalVarRename temp to count") {
  const Program p = prog("class A {\n  int f() {\n    int temp = 0;\n    temp++;\n    return temp;\n  }\n}\n");
  const auto s = sites(p, TransformKind::LocalVarRename);
  const auto r = rename_identifier(p, site_for(s, "temp"), "count");
  CHECK(r.output.content() ==
        "class A {\n  int f() {\n    int count = 0;\n    count++;\n    return count;\n  }\n}\n");
  REQUIRE(r.provenance.naming.has_value());
  CHECK(r.provenance.naming->old_name == "temp");
  CHECK(r.provenance.naming->new_name == "count");
}

TEST_CASE("MethodRename updates recursive and internal call sites") {
  const Program p = prog(
      "class A {\n  int compute(int n) { return n <= 0 ? 0 : n + compute(n - 1); }\n"
      "  int g() { return compute(3) + this.compute(1); }\n}\n");
  const auto r = rename_identifier(p, site_for(sites(p, TransformKind::MethodRename), "compute"),
                                   "calculate");
  CHECK(r.output.content() ==
        "class A {\n  int calculate(int n) { return n <= 0 ? 0 : n + calculate(n - 1); }\n"
        "  int g() { return calculate(3) + this.calculate(1); }\n}\n");
}

TEST_CASE("MethodRename excludes overloads, overrides and entry points") {
  const Program p = prog(
      "class A {\n  int f(int x) { return x; }\n  int f(String s) { return 0; }\n"
      "  @Override public String toString() { return \"\"; }\n"
      "  public static void main(String[] args) {}\n  int ok() { return 1; }\n}\n");
  const auto s = sites(p, TransformKind::MethodRename);
  REQUIRE(s.size() == 1);
  CHECK(s[0].decl_name == "ok");
}

TEST_CASE("ParamRename foo(int x) to val") {
  const Program p = prog("class A { void foo(int x) { int y = x * 2; System.out.println(x + y); } }");
  const auto r =
      rename_identifier(p, site_for(sites(p, TransformKind::ParamRename), "x"), "val");
  CHECK(r.output.content() ==
        "class A { void foo(int val) { int y = val * 2; System.out.println(val + y); } }");
}

TEST_CASE("rename contract errors") {
  const Program p = prog("class A { void foo(int x) { int y = x; } }");
  const auto all = sites(p, TransformKind::ParamRename);
  const auto& s = site_for(all, "x");
  CHECK_THROWS_AS((void)rename_identifier(p, s, "x"), ContractViolation);
  CHECK_THROWS_AS((void)rename_identifier(p, s, "int"), ContractViolation);
  CHECK_THROWS_AS((void)rename_identifier(p, s, "9lives"), ContractViolation);
  CHECK_THROWS_AS((void)rename_identifier(p, s, "y"), ApplicabilityError);
}

TEST_CASE("qualified calls in a client are renamed") {
  const Program test = prog("class T { void t() { int a = A.compute(1); Object r = A.compute(2); compute(); } }");
  const auto r = rename_qualified_calls(test, "A", "compute", "calculate");
  CHECK(r.output.content() ==
        "class T { void t() { int a = A.calculate(1); Object r = A.calculate(2); compute(); } }");
}

TEST_CASE("InsertLog before the first statement with matching indentation") {
  const Program p = prog("class A {\n    int foo(int x) {\n        return x;\n    }\n}\n");
  const auto s = sites(p, TransformKind::InsertLog);
  REQUIRE(s.size() == 1);
  const auto r = insert_log_statement(p, s[0]);
  CHECK(r.output.content() ==
        "class A {\n    int foo(int x) {\n        System.out.println(\"log\");\n"
        "        return x;\n    }\n}\n");
  CHECK_FALSE(r.line_map.touched(3));
  CHECK(r.line_map.map(3) == std::pair{4, 4});
}

TEST_CASE("InsertLog into an empty body") {
  const Program p = prog("class A { void foo() {} abstract static class B { abstract void g(); } }");
  const auto s = sites(p, TransformKind::InsertLog);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) ==
        "class A { void foo() { System.out.println(\"log\"); } abstract static class B { abstract void g(); } }");
}

TEST_CASE("InsertTryCatch wraps an unused declaration") {
  const Program p = prog("class A { int f(String s) { return 0; } void g(String s) {\n  int r = f(s);\n} }");
  const auto s = sites(p, TransformKind::InsertTryCatch);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) ==
        "class A { int f(String s) { return 0; } void g(String s) {\n"
        "  try { int r = f(s); } catch (Exception e) {}\n} }");
}

TEST_CASE("InsertTryCatch excludes declarations used later") {
  const Program p = prog("class A { int g(int s) {\n  int r = s + 1;\n  return r;\n} }");
  CHECK(sites(p, TransformKind::InsertTryCatch).empty());
}

TEST_CASE("InsertTryCatch picks a catch name that is free") {
  const Program p = prog("class A { void g(int e) {\n  System.out.println(e);\n} }");
  const auto s = sites(p, TransformKind::InsertTryCatch);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) ==
        "class A { void g(int e) {\n  try { System.out.println(e); } catch (Exception e2) {}\n} }");
}

TEST_CASE("InsertTryCatch is deterministic for a seed") {
  const Program p = prog("class A { void g() {\n  System.out.println(1);\n  System.out.println(2);\n} }");
  const auto s = sites(p, TransformKind::InsertTryCatch);
  REQUIRE(s.size() == 2);
  const auto& a = choose_site(s, 42);
  const auto& b = choose_site(s, 42);
  CHECK(a.site_id == b.site_id);
  CHECK(insert_try_catch(p, a, 42).output == insert_try_catch(p, b, 42).output);
  const std::vector<TransformSite> none;
  CHECK_THROWS_AS((void)choose_site(none, 1), ApplicabilityError);
}

TEST_CASE("BooleanExchange flips the literal and negates reads") {
  const Program p = prog("class A { boolean f() {\n  boolean res = true;\n  return res;\n} }");
  const auto s = sites(p, TransformKind::BooleanExchange);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) == "class A { boolean f() {\n  boolean res = false;\n  return !(res);\n} }");
}

TEST_CASE("BooleanExchange with a never-read variable") {
  const Program p = prog("class A { void f() { boolean done = false; } }");
  const auto s = sites(p, TransformKind::BooleanExchange);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) == "class A { void f() { boolean done = true; } }");
}

TEST_CASE("BooleanExchange in a condition and an assignment") {
  const Program p = prog(
      "class A { int f(int x) { boolean res = false; if (x > 0) { res = x > 5; } if (res) { return 1; } return 0; } }");
  const auto s = sites(p, TransformKind::BooleanExchange);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) ==
        "class A { int f(int x) { boolean res = true; if (x > 0) { res = !(x > 5); } if (!(res)) { return 1; } return 0; } }");
}

TEST_CASE("BooleanExchange needs a literal initializer and no compound writes") {
  CHECK(sites(prog("class A { void f(int x) { boolean b = x > 0; } }"), TransformKind::BooleanExchange).empty());
  CHECK(sites(prog("class A { void f() { boolean b = true; b &= false; } }"), TransformKind::BooleanExchange).empty());
}

TEST_CASE("for to while keeps the init in an outer block") {
  const Program p = prog(
      "class A { int f(int n) {\n  int s = 0;\n  for (int i = 0; i < n; i++) {\n    s += i;\n  }\n  return s;\n} }");
  const auto s = sites(p, TransformKind::LoopExchange);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) ==
        "class A { int f(int n) {\n  int s = 0;\n  { int i = 0; while (i < n) {\n    s += i;\n"
        "    i++;\n  } }\n  return s;\n} }");
}

TEST_CASE("while to for") {
  const Program p = prog("class A { void f() {\n  while (true) {\n    break;\n  }\n} }");
  const auto s = sites(p, TransformKind::LoopExchange);
  REQUIRE(s.size() == 1);
  CHECK(apply(p, s[0]) == "class A { void f() {\n  for (; true; ) {\n    break;\n  }\n} }");
}

TEST_CASE("for with continue is not a LoopExchange site") {
  const Program p = prog(
      "class A { void f(int n) { for (int i = 0; i < n; i++) { if (i == 2) continue; } } }");
  CHECK(sites(p, TransformKind::LoopExchange).empty());
}

TEST_CASE("every kind on every corpus file reparses and is deterministic") {
  for (const auto& path : testdata::corpus_files()) {
    const Program p = Program::parse(testdata::load(path));
    for (TransformKind k : kAllTransformKinds) {
      for (const auto& s : sites(p, k)) {
        CAPTURE(path.filename().string());
        CAPTURE(to_string(k));
        CAPTURE(s.site_id);
        TransformResult a, b;
        if (is_rename(k)) {
          const std::string fresh = "renamed_" + s.decl_name;
          a = rename_identifier(p, s, fresh);
          b = rename_identifier(p, s, fresh);
        } else {
          a = apply_structural(p, s, kDefaultSeed);
          b = apply_structural(p, s, kDefaultSeed);
        }
        CHECK(a.output == b.output);
        CHECK(a.edits == b.edits);
        CHECK(reparses(a.output));
        for (int l = 1; l <= p.text.line_count(); ++l) {
          if (a.line_map.touched(l)) continue;
          CHECK(a.output.line_text(a.line_map.map(l)->first) == p.text.line_text(l));
        }
      }
    }
  }
}

TEST_CASE("rename closure over the corpus") {
  for (const auto& path : testdata::corpus_files()) {
    const Program p = Program::parse(testdata::load(path));
    for (TransformKind k : {TransformKind::LocalVarRename, TransformKind::ParamRename,
                            TransformKind::MethodRename}) {
      for (const auto& s : sites(p, k)) {
        CAPTURE(path.filename().string());
        CAPTURE(s.decl_name);
        const Declaration& d = p.scopes.declaration(s.decl_id);
        const std::string fresh = "fresh_" + s.decl_name;
        const Program q = Program::parse(rename_identifier(p, s, fresh).output);
        CHECK(bound_count(q, fresh, d.kind) == static_cast<int>(p.scopes.occurrences(d).size()));
        CHECK(bound_count(q, s.decl_name, d.kind) ==
              bound_count(p, s.decl_name, d.kind) - static_cast<int>(p.scopes.occurrences(d).size()));
      }
    }
  }
}

TEST_CASE("ReorderCondition is an involution over the corpus") {
  for (const auto& path : testdata::corpus_files()) {
    const Program p = Program::parse(testdata::load(path));
    const auto s = sites(p, TransformKind::ReorderCondition);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Program q = Program::parse(apply_structural(p, s[i], kDefaultSeed).output);
      const auto qs = sites(q, TransformKind::ReorderCondition);
      REQUIRE(qs.size() == s.size());
      CHECK(apply_structural(q, qs[i], kDefaultSeed).output == p.text);
    }
  }
}

TEST_CASE("mark_buggy_line follows the line map") {
  const Program p = prog("class A {\n  int f(int a, int b) {\n    if (a == b) { return 1; }\n    return 0;\n  }\n}\n");
  const auto s = sites(p, TransformKind::ReorderCondition);
  REQUIRE(s.size() == 1);
  TransformResult r = apply_structural(p, s[0], kDefaultSeed);
  mark_buggy_line(r, p.text.line_span(3, 3));
  CHECK(r.touched_buggy_line);
  r.touched_buggy_line = false;
  mark_buggy_line(r, p.text.line_span(4, 4));
  CHECK_FALSE(r.touched_buggy_line);
}

TEST_CASE("identifier validity") {
  CHECK(is_valid_identifier("count"));
  CHECK(is_valid_identifier("_x1"));
  CHECK_FALSE(is_valid_identifier("1x"));
  CHECK_FALSE(is_valid_identifier("class"));
  CHECK_FALSE(is_valid_identifier("true"));
  CHECK_FALSE(is_valid_identifier(""));
  CHECK(is_java_keyword("while"));
}

}  // TEST_SUITE
