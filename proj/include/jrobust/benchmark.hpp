#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "jrobust/edit.hpp"
#include "jrobust/harness.hpp"
#include "jrobust/naming.hpp"
#include "jrobust/source_text.hpp"
#include "jrobust/transforms.hpp"

namespace jrobust {

namespace fs = std::filesystem;

inline constexpr std::string_view kManifestVersion = "1";

struct BugInstance {
  std::string id;
  SourceText buggy;
  SourceText fixed;
  SourceText test;
  Span buggy_span;  // whole lines of `buggy`
};

struct LoadDiagnostic {
  std::string id;  // or "line N" when the record has no usable id
  std::string reason;
};

struct LoadResult {
  std::vector<BugInstance> instances;
  std::vector<LoadDiagnostic> rejected;
};

// Reads a JSON-lines manifest with fields id, buggy_path, fixed_path,
// test_path, buggy_start_line, buggy_end_line (1-based, inclusive). Paths are
// relative to `root`. Bad entries are rejected with a diagnostic; a missing
// manifest throws InputError.
LoadResult load_base_dataset(const fs::path& root, const fs::path& manifest);

struct RemapOutcome {
  bool excluded = false;
  int start_line = 0;
  int end_line = 0;
};

// Excluded when any edit touches a line of `buggy_span`; otherwise the
// mapped line range.
RemapOutcome remap_buggy_line(const SourceText& original, const LineMap& line_map,
                              std::span<const Edit> edits, const Span& buggy_span);

enum class ExclusionReason {
  BuggyLineTouched,
  PreservationFailed,
  InapplicableCollision,
  SiteMismatch,
  RemapMismatch,
};
std::string_view to_string(ExclusionReason r);

struct Exclusion {
  std::string instance;  // candidate id: base__Kind__site
  std::string base_id;
  TransformKind kind = TransformKind::InsertLog;
  ExclusionReason reason = ExclusionReason::BuggyLineTouched;
  std::string detail;
};

struct TransformedInstance {
  std::string id;
  std::string base_id;
  TransformKind kind = TransformKind::InsertLog;
  int site_id = 0;
  SourceText buggy;
  SourceText fixed;
  SourceText test;
  Span buggy_span;
  Provenance provenance;
  std::string validation;  // "pass" or "skipped"
};

struct BaseFailure {
  std::string id;
  std::string reason;
};

struct BuildOptions {
  std::set<TransformKind> kinds{kAllTransformKinds.begin(), kAllTransformKinds.end()};
  std::uint64_t seed = kDefaultSeed;
  bool random_rename = false;   // seeded choice instead of document order
  unsigned jobs = 1;
  const Harness* harness = nullptr;  // null: validation skipped
  NamingProvider* naming = nullptr;  // null: built-in provider
  int naming_k = 5;
  std::function<void(const std::string&)> log;  // warnings; may be empty
};

struct BuildResult {
  // Input order, then kind order, then site order.
  std::vector<TransformedInstance> instances;
  std::vector<Exclusion> exclusions;
  std::vector<BaseFailure> base_failures;  // e.g. fixed program fails its tests
  std::string base_digest;
  std::uint64_t seed = 0;
};

// Transforms every base instance for every requested kind: renames give at
// most one instance per program, structural kinds one per applicable site.
// Buggy and fixed programs get identical edits; instances whose edits touch
// the buggy lines are excluded, and with a harness the transformed fixed
// program must pass its tests. Deterministic for fixed inputs and seed.
BuildResult build_benchmark(const std::vector<BugInstance>& instances,
                            const BuildOptions& options);

struct CountSummary {
  std::map<TransformKind, int> per_kind;  // every kind present, zero if none
  int total = 0;
  std::map<ExclusionReason, int> exclusions;
};

CountSummary count_summary(const BuildResult& result);

// Writes out/instances/<id>/{buggy,fixed,test}/<File>.java, meta.json per
// instance, and out/manifest.json. Instance directories are staged and renamed
// into place; a previous benchmark in `out` is replaced.
void write_benchmark(const BuildResult& result, const fs::path& out);

struct ManifestEntry {
  std::string id;
  std::string base_id;
  TransformKind kind = TransformKind::InsertLog;
  int site_id = 0;
  fs::path buggy_path;
  fs::path fixed_path;
  fs::path test_path;
  std::string buggy_sha256;
  std::string fixed_sha256;
  std::string test_sha256;
  int buggy_start_line = 0;
  int buggy_end_line = 0;
  std::string validation;
};

struct Manifest {
  std::string version;
  std::string base_digest;
  std::uint64_t seed = 0;
  std::vector<ManifestEntry> instances;
  std::map<TransformKind, int> counts;
  int total = 0;
  std::vector<Exclusion> exclusions;
};

// Reads and checks out/manifest.json: counts must equal list lengths and
// every file must exist with its recorded digest. Throws InputError.
Manifest read_manifest(const fs::path& out);

CountSummary count_summary(const Manifest& manifest);

std::string sha256_hex(std::string_view data);

}  // namespace jrobust
