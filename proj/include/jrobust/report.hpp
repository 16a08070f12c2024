#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jrobust/metrics.hpp"
#include "jrobust/transforms.hpp"

namespace jrobust {

namespace fs = std::filesystem;

// One evaluated bug for one model: a base bug (orig side, no kind) or a
// transformed instance (trans side).
struct BugResult {
  std::string model;
  std::string id;
  std::string base_id;
  std::optional<TransformKind> kind;
  SampleStats stats;
  std::optional<double> codebleu;  // mean over scorable patches, in [0, 1]
  std::vector<std::string> verdicts;  // per patch ordinal
};

// JSON Lines, one BugResult per line, stable field order.
void write_results(const std::vector<BugResult>& results, const fs::path& path);
std::vector<BugResult> read_results(const fs::path& path);

struct EvalRow {
  std::string model;
  TransformKind kind = TransformKind::InsertLog;
  int bugs_orig = 0;
  int bugs_trans = 0;
  double any_orig = 0, any_trans = 0;
  Change any_change;
  double unbiased_orig = 0, unbiased_trans = 0;
  Change unbiased_change;
  std::optional<double> codebleu_orig, codebleu_trans;  // x100
};

inline constexpr int kUnderpoweredThreshold = 30;

// Instance counts published with the original benchmark, for comparison.
const std::map<TransformKind, int>& reference_counts();

struct ReportTable {
  int k = 10;
  std::map<TransformKind, int> instances;  // per kind, from the trans side or manifest
  std::vector<EvalRow> rows;               // kind order, then model order
};

// Pairs orig results (base bugs) with trans results (instances). The orig
// row of a kind uses the base bugs of that kind's instances. Throws
// InputError when the two files cover different model sets. Bugs with fewer
// than k patches are scored with k clamped to their patch count.
ReportTable build_report(const std::vector<BugResult>& orig,
                         const std::vector<BugResult>& trans, int k,
                         const std::map<TransformKind, int>* manifest_counts = nullptr);

enum class ReportFormat { Table, Csv };

std::string render_report(const ReportTable& table, ReportFormat format);

// "54.99↓", "4.65↑", "0%", or "n/a" when the original was zero.
std::string format_change(const Change& change);

// Per-bug pass@k terms with k clamped to the available samples.
double pass_any_clamped(const std::vector<SampleStats>& stats, int k);
double pass_unbiased_clamped(const std::vector<SampleStats>& stats, int k);

}  // namespace jrobust
