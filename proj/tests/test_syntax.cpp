#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "jrobust/edit.hpp"
#include "jrobust/error.hpp"
#include "jrobust/scope.hpp"
#include "jrobust/syntax_tree.hpp"
#include "oracles.hpp"

using namespace jrobust;
using testdata::line_unedited;
using testdata::random_script;

namespace {

std::string in_method(std::string_view body) {
  return "class A {\n  void m() {\n" + std::string(body) + "\n  }\n}\n";
}

bool has_kind(const SyntaxTree& t, std::string_view kind) {
  return std::ranges::any_of(t.nodes(), [&](const SyntaxNode& n) { return n.kind == kind; });
}

struct Parsed {
  SourceText text;
  SyntaxTree tree;
  ScopeTable table;
};

Parsed parse(std::string src) {
  SourceText text(std::move(src));
  SyntaxTree tree = parse_source(text);
  REQUIRE_FALSE(tree.has_error());
  ScopeTable table = resolve_scopes(tree, text);
  return {std::move(text), std::move(tree), std::move(table)};
}

std::vector<const Declaration*> named(const ScopeTable& t, std::string_view name) {
  std::vector<const Declaration*> out;
  for (const auto& d : t.declarations()) {
    if (d.name == name) out.push_back(&d);
  }
  return out;
}

}  // namespace

TEST_SUITE("syntax") {

TEST_CASE("source text line index") {
  const SourceText t("a\nbc\r\n\nd");
  CHECK(t.line_count() == 4);
  CHECK(t.line_text(1) == "a");
  CHECK(t.line_text(2) == "bc");
  CHECK(t.line_text(3) == "");
  CHECK(t.line_text(4) == "d");
  CHECK(t.line_of(0) == 1);
  CHECK(t.line_of(2) == 2);
  CHECK(t.line_of(100) == 4);
  CHECK(SourceText("").line_count() == 1);
  CHECK(SourceText("x\n").line_count() == 1);
}

TEST_CASE("parse a local variable declaration") {
  const SourceText t(in_method("int x = 0;"));
  const SyntaxTree tree = parse_source(t);
  CHECK_FALSE(tree.has_error());
  CHECK(has_kind(tree, "local_variable_declaration"));
}

TEST_CASE("parse empty text") {
  const SyntaxTree tree = parse_source(SourceText(""));
  CHECK_FALSE(tree.has_error());
  CHECK(tree.node(tree.root()).span.empty());
}

TEST_CASE("parse error is flagged") {
  CHECK(parse_source(SourceText(in_method("int x = ;"))).has_error());
}

TEST_CASE("malformed encoding is an input error") {
  CHECK_THROWS_AS((void)parse_source(SourceText(std::string("class A { String s = \"\xff\"; }"))),
                  InputError);
}

TEST_CASE("every corpus file parses cleanly") {
  for (const auto& p : testdata::corpus_files()) {
    CAPTURE(p.string());
    CHECK_FALSE(parse_source(testdata::load(p)).has_error());
  }
}

TEST_CASE("resolve_scopes rejects an error tree") {
  const SourceText t(in_method("int x = ;"));
  CHECK_THROWS_AS((void)resolve_scopes(parse_source(t), t), ContractViolation);
}

TEST_CASE("temp declared and incremented") {
  const auto p = parse(in_method("int temp = 0; temp++;"));
  const auto d = named(p.table, "temp");
  REQUIRE(d.size() == 1);
  CHECK(d[0]->kind == DeclKind::LocalVariable);
  const auto occ = p.table.occurrences(*d[0]);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].role == OccurrenceRole::Declaration);
  CHECK(occ[1].role == OccurrenceRole::Update);
}

TEST_CASE("parameter and local do not cross-bind") {
  const auto p = parse("class A { void foo(int x){ int x2; } }");
  const auto x = named(p.table, "x");
  const auto x2 = named(p.table, "x2");
  REQUIRE(x.size() == 1);
  REQUIRE(x2.size() == 1);
  CHECK(x[0]->kind == DeclKind::Parameter);
  CHECK(x2[0]->kind == DeclKind::LocalVariable);
  CHECK(find_identifier_occurrences(p.table, *x[0]).size() == 1);
  CHECK(find_identifier_occurrences(p.table, *x2[0]).size() == 1);
}

TEST_CASE("declaration without uses has one occurrence") {
  const auto p = parse(in_method("int unused = 1;"));
  CHECK(find_identifier_occurrences(p.table, *named(p.table, "unused")[0]).size() == 1);
}

TEST_CASE("temp used twice gives three spans in order") {
  const auto p = parse(in_method("int temp = 0;\nint a = temp + 1;\nSystem.out.println(temp);"));
  const auto spans = find_identifier_occurrences(p.table, *named(p.table, "temp")[0]);
  REQUIRE(spans.size() == 3);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    CHECK(p.text.slice(spans[i]) == "temp");
    if (i) CHECK(spans[i - 1].start_byte < spans[i].start_byte);
  }
}

TEST_CASE("inner redeclaration shadows the outer local") {
  // A lambda parameter may not shadow a local in Java, but a local class
  // method body is a fresh scope that may.
  const auto p = parse(
      "class A {\n"
      "  int f() {\n"
      "    int v = 1;\n"
      "    class Inner { int g() { int v = 2; return v; } }\n"
      "    return v + new Inner().g();\n"
      "  }\n"
      "}\n");
  const auto vs = named(p.table, "v");
  REQUIRE(vs.size() == 2);
  const auto outer = find_identifier_occurrences(p.table, *vs[0]);
  const auto inner = find_identifier_occurrences(p.table, *vs[1]);
  REQUIRE(outer.size() == 2);
  REQUIRE(inner.size() == 2);
  CHECK(outer[1].start_line == 5);
  CHECK(inner[1].start_line == 4);
}

TEST_CASE("field accesses and method names are not bound to locals") {
  const auto p = parse(
      "class A {\n"
      "  int size;\n"
      "  int size() { return size; }\n"
      "  int m() { int size = 3; return this.size + size + size(); }\n"
      "}\n");
  std::vector<const Declaration*> locals;
  for (const auto* d : named(p.table, "size")) {
    if (d->kind == DeclKind::LocalVariable) locals.push_back(d);
  }
  REQUIRE(locals.size() == 1);
  const auto spans = find_identifier_occurrences(p.table, *locals[0]);
  CHECK(spans.size() == 2);
}

TEST_CASE("sibling blocks declare independent variables") {
  const auto p = parse(in_method("{ int t = 1; t++; }\n{ int t = 2; t--; }"));
  const auto ts = named(p.table, "t");
  REQUIRE(ts.size() == 2);
  for (const auto* d : ts) CHECK(find_identifier_occurrences(p.table, *d).size() == 2);
}

TEST_CASE("unknown declaration is a lookup error") {
  const auto p = parse(in_method("int a = 0;"));
  Declaration bogus;
  bogus.id = 99;
  bogus.name = "zz";
  CHECK_THROWS_AS((void)find_identifier_occurrences(p.table, bogus), LookupError);
}

TEST_CASE("binding oracle over the corpus") {
  // Every bound occurrence spells the declared name, lies in its scope, and
  // no two declarations claim the same identifier.
  for (const auto& path : testdata::corpus_files()) {
    CAPTURE(path.string());
    const SourceText t = testdata::load(path);
    const SyntaxTree tree = parse_source(t);
    const ScopeTable table = resolve_scopes(tree, t);
    std::set<std::size_t> claimed;
    for (const auto& d : table.declarations()) {
      for (const auto& s : find_identifier_occurrences(table, d)) {
        CHECK(t.slice(s) == d.name);
        if (d.kind != DeclKind::Method) CHECK(d.scope_span.contains(s));
        CHECK(claimed.insert(s.start_byte).second);
      }
    }
  }
}

TEST_CASE("apply_edits with no edits is the identity") {
  const SourceText t("a\nb\nc\n");
  const auto out = apply_edits(t, {});
  CHECK(out.text == t);
  CHECK(out.line_map.is_identity());
}

TEST_CASE("inserting one full line at line 1 shifts every line") {
  const SourceText t("a\nb\nc\n");
  const std::vector<Edit> edits = {Edit::insert(t, 0, "new\n")};
  const auto out = apply_edits(t, edits);
  CHECK(out.text.content() == "new\na\nb\nc\n");
  for (int k = 1; k <= 3; ++k) {
    CHECK(out.line_map.map(k) == std::pair{k + 1, k + 1});
    CHECK_FALSE(out.line_map.touched(k));
  }
}

TEST_CASE("three-line insertion before a line shifts it by three") {
  const SourceText t("a\nb\nc\nd\n");
  const std::vector<Edit> edits = {Edit::insert(t, t.line_start(2), "x\ny\nz\n")};
  const auto out = apply_edits(t, edits);
  CHECK(out.line_map.map(1) == std::pair{1, 1});
  CHECK(out.line_map.map(3) == std::pair{6, 6});
}

TEST_CASE("lines before the first edit map to themselves") {
  const SourceText t("a\nb\nc\nd\n");
  const std::vector<Edit> edits = {Edit::replace(t, t.line_start(3), t.line_start(3) + 1, "C\nC")};
  const auto out = apply_edits(t, edits);
  CHECK(out.line_map.map(1) == std::pair{1, 1});
  CHECK(out.line_map.map(2) == std::pair{2, 2});
  CHECK(out.line_map.touched(3));
  CHECK(out.line_map.map(3) == std::pair{3, 4});
  CHECK(out.line_map.map(4) == std::pair{5, 5});
}

TEST_CASE("overlapping and out-of-range edits are contract violations") {
  const SourceText t("abcdef\n");
  const std::vector<Edit> overlap = {Edit::replace(t, 0, 3, "x"), Edit::replace(t, 2, 4, "y")};
  CHECK_THROWS_AS((void)apply_edits(t, overlap), ContractViolation);
  Edit bad = Edit::insert(t, 0, "x");
  bad.target.start_byte = bad.target.end_byte = 100;
  const std::vector<Edit> out_of_range = {bad};
  CHECK_THROWS_AS((void)apply_edits(t, out_of_range), ContractViolation);
}

TEST_CASE("edit_touches_line distinguishes whole-line insertions") {
  const SourceText t("a\nb\n");
  CHECK_FALSE(edit_touches_line(t, Edit::insert(t, 2, "x\n"), 2));
  CHECK(edit_touches_line(t, Edit::insert(t, 2, "x"), 2));
  CHECK(edit_touches_line(t, Edit::insert(t, 3, "x"), 2));
  CHECK_FALSE(edit_touches_line(t, Edit::insert(t, 2, "x"), 1));
}

TEST_CASE("line map oracle over random edit scripts") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (const auto& path : testdata::corpus_files()) {
    const SourceText t = testdata::load(path);
    for (int round = 0; round < 100; ++round) {
      const auto edits = random_script(t, rng);
      const auto out = apply_edits(t, edits);
      for (int l = 1; l <= t.line_count(); ++l) {
        const bool unedited = line_unedited(t, edits, l);
        // Completeness: every line the strict oracle calls unedited is
        // untouched. Soundness: every untouched line keeps its content.
        if (unedited) CHECK_FALSE(out.line_map.touched(l));
        if (out.line_map.touched(l)) continue;
        const auto m = out.line_map.map(l);
        REQUIRE(m.has_value());
        CHECK(m->first == m->second);
        CHECK(out.text.line_text(m->first) == t.line_text(l));
        ++checked;
      }
    }
  }
  CHECK(checked > 10000);
}

}  // TEST_SUITE
