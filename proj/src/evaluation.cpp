#include "jrobust/evaluation.hpp"

#include <algorithm>
#include <mutex>
#include <regex>

#include "jrobust/error.hpp"
#include "jrobust/metrics.hpp"
#include "jrobust/parallel.hpp"

namespace jrobust {

std::vector<EvalTarget> targets_from_base(const std::vector<BugInstance>& bugs) {
  std::vector<EvalTarget> out;
  out.reserve(bugs.size());
  for (const auto& b : bugs) out.push_back({b.id, b.id, std::nullopt, b.buggy, b.fixed, b.test});
  return out;
}

std::vector<EvalTarget> targets_from_manifest(const Manifest& manifest) {
  std::vector<EvalTarget> out;
  out.reserve(manifest.instances.size());
  for (const auto& e : manifest.instances) {
    out.push_back({e.id, e.base_id, e.kind, SourceText(read_text_file(e.buggy_path)),
                   SourceText(read_text_file(e.fixed_path)),
                   SourceText(read_text_file(e.test_path))});
  }
  return out;
}

std::vector<PatchFile> find_patches(const fs::path& root, const std::string& id) {
  static const std::regex kName(R"(([0-9]{2,})\.java)");
  std::vector<PatchFile> out;
  const fs::path dir = root / id;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::smatch m;
    const std::string name = entry.path().filename().string();
    if (!entry.is_regular_file() || !std::regex_match(name, m, kName)) continue;
    const int ordinal = std::stoi(m[1].str());
    if (ordinal >= 1) out.push_back({ordinal, entry.path()});
  }
  std::ranges::sort(out, {}, &PatchFile::ordinal);
  return out;
}

PatchVerdict evaluate_patch(const Harness& harness, const EvalTarget& target,
                            const SourceText& patch, int ordinal,
                            std::chrono::milliseconds timeout) {
  // The file keeps the buggy unit's name so a patch with a parse error still
  // reaches the compiler and is reported as a compile error.
  const SourceFile program{java_file_name(target.buggy.view()), patch.content()};
  const SourceFile test{java_file_name(target.test.view()), target.test.content()};
  return {target.id, ordinal, harness.evaluate({program}, test, timeout)};
}

EvaluateResult evaluate_patches(const Harness& harness, const std::vector<EvalTarget>& targets,
                                const fs::path& patches_root, const EvaluateOptions& options) {
  struct Job {
    std::size_t target;
    PatchFile patch;
  };
  std::vector<Job> jobs;
  std::vector<std::vector<PatchFile>> patches(targets.size());
  EvaluateResult result;
  int most = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    patches[i] = find_patches(patches_root, targets[i].id);
    most = std::max(most, static_cast<int>(patches[i].size()));
    for (const auto& p : patches[i]) jobs.push_back({i, p});
  }
  std::mutex log_mutex;
  auto warn = [&](const std::string& msg) {
    if (!options.log) return;
    std::scoped_lock lock(log_mutex);
    options.log(msg);
  };
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (patches[i].empty()) {
      ++result.bugs_without_patches;
      warn("no patches for " + targets[i].id + "; scored with n = 0");
    } else if (static_cast<int>(patches[i].size()) < most) {
      warn("only " + std::to_string(patches[i].size()) + " patches for " + targets[i].id +
           "; scored with n = " + std::to_string(patches[i].size()));
    }
  }

  std::vector<PatchVerdict> verdicts(jobs.size());
  std::vector<std::optional<double>> scores(jobs.size());
  parallel_for(jobs.size(), options.jobs, [&](std::size_t j) {
    const EvalTarget& target = targets[jobs[j].target];
    const SourceText patch(read_text_file(jobs[j].patch.path));
    verdicts[j] = evaluate_patch(harness, target, patch, jobs[j].patch.ordinal, options.timeout);
    if (options.codebleu) {
      try {
        scores[j] = codebleu_subset(target.fixed, patch).total;
      } catch (const MetricError& e) {
        warn("CodeBLEU skipped for " + target.id + " patch " +
             std::to_string(jobs[j].patch.ordinal) + ": " + e.what());
      }
    }
  });

  std::size_t j = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    BugResult r;
    r.model = options.model;
    r.id = targets[i].id;
    r.base_id = targets[i].base_id;
    r.kind = targets[i].kind;
    std::vector<bool> passed;
    double sum = 0;
    int scored = 0;
    for (std::size_t p = 0; p < patches[i].size(); ++p, ++j) {
      passed.push_back(verdicts[j].verdict.status == TestStatus::Pass);
      r.verdicts.emplace_back(to_string(verdicts[j].verdict.status));
      if (scores[j]) {
        sum += *scores[j];
        ++scored;
      }
      result.verdicts.push_back(verdicts[j]);
    }
    r.stats = SampleStats::from_outcomes(passed);
    if (scored > 0) r.codebleu = sum / scored;
    result.results.push_back(std::move(r));
  }
  return result;
}

}  // namespace jrobust
