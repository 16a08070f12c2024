#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jrobust/benchmark.hpp"
#include "jrobust/harness.hpp"
#include "jrobust/report.hpp"

namespace jrobust {

namespace fs = std::filesystem;

// A bug to score: a base bug (no kind) or a transformed instance.
struct EvalTarget {
  std::string id;
  std::string base_id;
  std::optional<TransformKind> kind;
  SourceText buggy;
  SourceText fixed;
  SourceText test;
};

std::vector<EvalTarget> targets_from_base(const std::vector<BugInstance>& bugs);
// Reads the sources referenced by a checked manifest.
std::vector<EvalTarget> targets_from_manifest(const Manifest& manifest);

struct PatchFile {
  int ordinal = 0;
  fs::path path;
};

// <root>/<id>/NN.java, ordinals from 1, sorted. Other files are ignored and a
// missing directory yields no patches.
std::vector<PatchFile> find_patches(const fs::path& root, const std::string& id);

struct PatchVerdict {
  std::string instance_id;
  int ordinal = 0;
  TestVerdict verdict;
};

// Compiles the patch in place of the buggy compilation unit together with
// the target's test and runs it.
PatchVerdict evaluate_patch(const Harness& harness, const EvalTarget& target,
                            const SourceText& patch, int ordinal,
                            std::chrono::milliseconds timeout = {});

struct EvaluateOptions {
  std::string model;
  unsigned jobs = 1;
  std::chrono::milliseconds timeout{0};  // 0: the harness default
  bool codebleu = true;  // against the fixed program
  std::function<void(const std::string&)> log;
};

struct EvaluateResult {
  std::vector<BugResult> results;  // target order
  std::vector<PatchVerdict> verdicts;
  int bugs_without_patches = 0;
};

// Scores every target's patches in parallel. A bug with fewer patches than
// expected is scored on those present and a warning is logged.
EvaluateResult evaluate_patches(const Harness& harness, const std::vector<EvalTarget>& targets,
                                const fs::path& patches_root, const EvaluateOptions& options);

}  // namespace jrobust
