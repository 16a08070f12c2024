#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "jrobust/benchmark.hpp"
#include "jrobust/error.hpp"
#include "temp_dir.hpp"

using namespace jrobust;
using testdata::TempDir;

namespace {

std::string entry(std::string_view id, int start, int end) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["buggy_path"] = std::string(id) + "/buggy/P.java";
  j["fixed_path"] = std::string(id) + "/fixed/P.java";
  j["test_path"] = std::string(id) + "/test/T.java";
  j["buggy_start_line"] = start;
  j["buggy_end_line"] = end;
  return j.dump() + "\n";
}

void write_bug(const TempDir& d, std::string_view id, std::string_view buggy,
               std::string_view fixed) {
  d.write(std::string(id) + "/buggy/P.java", buggy);
  d.write(std::string(id) + "/fixed/P.java", fixed);
  d.write(std::string(id) + "/test/T.java", "class T { public static void main(String[] a) {} }\n");
}

constexpr std::string_view kLoopFixed =
    "public class P {\n"
    "    public static int sum(int n) {\n"
    "        int s = 0;\n"
    "        for (int i = 0; i <= n; i++) {\n"
    "            s += i;\n"
    "        }\n"
    "        return s;\n"
    "    }\n"
    "}\n";

std::string loop_buggy() {
  std::string b(kLoopFixed);
  b.replace(b.find("int s = 0;"), 10, "int s = 1;");
  return b;
}

std::map<std::string, std::string> tree_bytes(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      out[fs::relative(e.path(), root).string()] = read_text_file(e.path());
    }
  }
  return out;
}

BuildResult build_corpus(const std::set<TransformKind>& kinds, unsigned jobs, bool random) {
  const LoadResult loaded =
      load_base_dataset(testdata::corpus_dir(), testdata::corpus_manifest());
  BuildOptions opts;
  opts.kinds = kinds;
  opts.jobs = jobs;
  opts.random_rename = random;
  return build_benchmark(loaded.instances, opts);
}

}  // namespace

TEST_SUITE("benchmark") {

TEST_CASE("remap: edit after the buggy line keeps its number") {
  const SourceText t("a\nb\nc\nd\n");
  const std::vector<Edit> edits = {Edit::replace(t, t.line_start(4), t.line_start(4) + 1, "D")};
  const auto out = apply_edits(t, edits);
  const auto r = remap_buggy_line(t, out.line_map, edits, t.line_span(2, 2));
  CHECK_FALSE(r.excluded);
  CHECK(r.start_line == 2);
  CHECK(r.end_line == 2);
}

TEST_CASE("remap: three-line insertion before the buggy line shifts it") {
  const SourceText t("a\nb\nc\nd\n");
  const std::vector<Edit> edits = {Edit::insert(t, t.line_start(2), "x\ny\nz\n")};
  const auto out = apply_edits(t, edits);
  const auto r = remap_buggy_line(t, out.line_map, edits, t.line_span(3, 3));
  CHECK_FALSE(r.excluded);
  CHECK(r.start_line == 6);
  CHECK(r.end_line == 6);
}

TEST_CASE("remap: overlapping edit excludes") {
  const SourceText t("a\nbb\nc\n");
  const std::vector<Edit> edits = {Edit::replace(t, t.line_start(2) + 1, t.line_start(2) + 2, "X")};
  const auto out = apply_edits(t, edits);
  CHECK(remap_buggy_line(t, out.line_map, edits, t.line_span(2, 2)).excluded);
  CHECK(remap_buggy_line(t, out.line_map, edits, t.line_span(1, 3)).excluded);
  CHECK_FALSE(remap_buggy_line(t, out.line_map, edits, t.line_span(3, 3)).excluded);
}

TEST_CASE("load: the fixture corpus") {
  const LoadResult r = load_base_dataset(testdata::corpus_dir(), testdata::corpus_manifest());
  CHECK(r.rejected.empty());
  CHECK(r.instances.size() >= 20);
  for (const auto& b : r.instances) {
    CHECK(b.buggy_span.start_line >= 1);
    CHECK(b.buggy_span.end_line <= b.buggy.line_count());
  }
}

TEST_CASE("load: empty manifest gives no instances") {
  TempDir d;
  d.write("m.jsonl", "");
  const LoadResult r = load_base_dataset(d.path(), d / "m.jsonl");
  CHECK(r.instances.empty());
  CHECK(r.rejected.empty());
}

TEST_CASE("load: a corrupted entry is rejected and the rest load") {
  TempDir d;
  write_bug(d, "good", loop_buggy(), kLoopFixed);
  write_bug(d, "broken", "public class P { int f( { }\n", kLoopFixed);
  write_bug(d, "range", loop_buggy(), kLoopFixed);
  d.write("m.jsonl", entry("good", 3, 3) + entry("broken", 1, 1) + entry("range", 20, 21) +
                         entry("missing", 1, 1) + "{not json\n");
  const LoadResult r = load_base_dataset(d.path(), d / "m.jsonl");
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].id == "good");
  CHECK(r.rejected.size() == 4);
  CHECK_THROWS_AS((void)load_base_dataset(d.path(), d / "absent.jsonl"), InputError);
}

TEST_CASE("build: one for loop gives exactly one LoopExchange instance") {
  TempDir d;
  write_bug(d, "loop", loop_buggy(), kLoopFixed);
  d.write("m.jsonl", entry("loop", 3, 3));
  const LoadResult loaded = load_base_dataset(d.path(), d / "m.jsonl");
  BuildOptions opts;
  opts.kinds = {TransformKind::LoopExchange};
  const BuildResult r = build_benchmark(loaded.instances, opts);
  REQUIRE(r.instances.size() == 1);
  const auto& inst = r.instances[0];
  CHECK(inst.id == "loop__LoopExchange__0");
  CHECK(inst.validation == "skipped");
  CHECK(inst.buggy.line_text(inst.buggy_span.start_line) == "        int s = 1;");
  CHECK(inst.fixed.content().find("while (i <= n)") != std::string::npos);
}

TEST_CASE("build: edits on the buggy line are excluded") {
  TempDir d;
  std::string fixed(kLoopFixed);
  std::string buggy = fixed;
  buggy.replace(buggy.find("i <= n"), 6, "i < n");
  write_bug(d, "loop", buggy, fixed);
  d.write("m.jsonl", entry("loop", 4, 4));
  const LoadResult loaded = load_base_dataset(d.path(), d / "m.jsonl");
  BuildOptions opts;
  opts.kinds = {TransformKind::LoopExchange, TransformKind::LocalVarRename};
  const BuildResult r = build_benchmark(loaded.instances, opts);
  // The loop header is the buggy line and `i` only lives there and in the
  // update; `s` is renamed on lines 3, 5 and 7.
  for (const auto& inst : r.instances) CHECK(inst.kind == TransformKind::LocalVarRename);
  REQUIRE_FALSE(r.exclusions.empty());
  CHECK(r.exclusions[0].reason == ExclusionReason::BuggyLineTouched);
}

TEST_CASE("build: emitted instances keep the buggy line") {
  const BuildResult r = build_corpus({kAllTransformKinds.begin(), kAllTransformKinds.end()}, 2, false);
  const LoadResult loaded = load_base_dataset(testdata::corpus_dir(), testdata::corpus_manifest());
  std::map<std::string, const BugInstance*> base;
  for (const auto& b : loaded.instances) base[b.id] = &b;
  CHECK(r.instances.size() > 100);
  for (const auto& inst : r.instances) {
    CAPTURE(inst.id);
    const BugInstance& b = *base.at(inst.base_id);
    const int n = b.buggy_span.end_line - b.buggy_span.start_line;
    REQUIRE(inst.buggy_span.end_line - inst.buggy_span.start_line == n);
    for (int i = 0; i <= n; ++i) {
      CHECK(trim(inst.buggy.line_text(inst.buggy_span.start_line + i)) ==
            trim(b.buggy.line_text(b.buggy_span.start_line + i)));
    }
  }
  for (TransformKind k : kAllTransformKinds) {
    const int n = static_cast<int>(std::ranges::count(r.instances, k, &TransformedInstance::kind));
    CAPTURE(to_string(k));
    CHECK(n > 0);
  }
}

TEST_CASE("build: renames emit at most one instance per program") {
  const BuildResult r = build_corpus({TransformKind::LocalVarRename, TransformKind::ParamRename,
                                      TransformKind::MethodRename}, 1, false);
  std::set<std::pair<std::string, TransformKind>> seen;
  for (const auto& inst : r.instances) {
    CHECK(seen.insert({inst.base_id, inst.kind}).second);
    REQUIRE(inst.provenance.naming.has_value());
    CHECK(inst.provenance.naming->provider == "builtin");
  }
}

TEST_CASE("build and write are deterministic") {
  const std::set<TransformKind> all(kAllTransformKinds.begin(), kAllTransformKinds.end());
  TempDir a, b;
  write_benchmark(build_corpus(all, 1, true), a.path());
  write_benchmark(build_corpus(all, 4, true), b.path());
  CHECK(tree_bytes(a.path()) == tree_bytes(b.path()));
  // Rewriting over an existing benchmark is allowed and identical.
  write_benchmark(build_corpus(all, 2, true), a.path());
  CHECK(tree_bytes(a.path()) == tree_bytes(b.path()));
}

TEST_CASE("seed changes the random rename choice only") {
  const LoadResult loaded = load_base_dataset(testdata::corpus_dir(), testdata::corpus_manifest());
  BuildOptions opts;
  opts.kinds = {TransformKind::InsertLog};
  opts.seed = 1;
  const auto a = build_benchmark(loaded.instances, opts);
  opts.seed = 2;
  const auto b = build_benchmark(loaded.instances, opts);
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].fixed == b.instances[i].fixed);
  }
}

TEST_CASE("manifest round trip and tamper detection") {
  TempDir d;
  const BuildResult r = build_corpus({TransformKind::InsertLog, TransformKind::LoopExchange}, 1, false);
  write_benchmark(r, d.path());
  const Manifest m = read_manifest(d.path());
  CHECK(m.version == kManifestVersion);
  CHECK(m.seed == kDefaultSeed);
  CHECK(m.base_digest.size() == 64);
  CHECK(m.instances.size() == r.instances.size());
  CHECK(m.exclusions.size() == r.exclusions.size());
  const auto cs = count_summary(m);
  CHECK(cs.total == static_cast<int>(r.instances.size()));
  CHECK(cs.per_kind.at(TransformKind::BooleanExchange) == 0);
  CHECK(count_summary(r).per_kind == cs.per_kind);

  // Stable key order at the top level.
  const auto j = nlohmann::ordered_json::parse(read_text_file(d / "manifest.json"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "base_digest", "seed", "counts", "instances",
                                         "exclusions", "base_failures"});

  std::ofstream(m.instances[0].fixed_path, std::ios::app) << "// changed\n";
  CHECK_THROWS_AS((void)read_manifest(d.path()), InputError);
}

TEST_CASE("write refuses a foreign non-empty directory") {
  TempDir d;
  d.write("notes.txt", "keep me");
  CHECK_THROWS_AS(write_benchmark(BuildResult{}, d.path()), InputError);
  CHECK(fs::exists(d / "notes.txt"));
}

TEST_CASE("count summary examples") {
  const CountSummary empty = count_summary(BuildResult{});
  CHECK(empty.total == 0);
  CHECK(empty.per_kind.size() == kAllTransformKinds.size());
  for (const auto& [k, n] : empty.per_kind) CHECK(n == 0);

  BuildResult r;
  for (TransformKind k : {TransformKind::InsertLog, TransformKind::InsertLog, TransformKind::InsertLog,
                          TransformKind::LoopExchange, TransformKind::LoopExchange}) {
    TransformedInstance t;
    t.kind = k;
    r.instances.push_back(t);
  }
  r.exclusions.push_back({"x", "x", TransformKind::InsertLog, ExclusionReason::PreservationFailed, ""});
  const CountSummary c = count_summary(r);
  CHECK(c.per_kind.at(TransformKind::InsertLog) == 3);
  CHECK(c.per_kind.at(TransformKind::LoopExchange) == 2);
  CHECK(c.total == 5);
  CHECK(c.exclusions.at(ExclusionReason::PreservationFailed) == 1);
}

TEST_CASE("published counts total 1450") {
  Manifest m;
  int total = 0;
  const int published[] = {100, 149, 162, 7, 142, 603, 173, 114};
  for (std::size_t i = 0; i < kAllTransformKinds.size(); ++i) {
    for (int n = 0; n < published[i]; ++n) m.instances.push_back({.kind = kAllTransformKinds[i]});
    total += published[i];
  }
  CHECK(count_summary(m).total == 1450);
  CHECK(total == 1450);
}

TEST_CASE("sha256 of a known string") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // TEST_SUITE
