#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jrobust/benchmark.hpp"
#include "jrobust/error.hpp"
#include "jrobust/evaluation.hpp"
#include "jrobust/harness.hpp"
#include "jrobust/naming.hpp"
#include "jrobust/parallel.hpp"
#include "jrobust/report.hpp"

namespace {

using namespace jrobust;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfrastructure = 3;

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = default_jobs();
  std::string jdk_home;
  std::string naming_provider = "builtin";
  double timeout_s = 30;
  std::string format = "table";
};

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

Harness make_harness(const Globals& g) {
  std::optional<fs::path> home;
  if (!g.jdk_home.empty()) home = g.jdk_home;
  HarnessOptions opts;
  opts.timeout = std::chrono::milliseconds(std::llround(g.timeout_s * 1000));
  return Harness(Toolchain::discover(home), opts);
}

std::unique_ptr<NamingProvider> make_naming(const Globals& g) {
  if (g.naming_provider == "builtin") return std::make_unique<BuiltinNamingProvider>();
  return std::make_unique<ExternalNamingProvider>(g.naming_provider);
}

std::set<TransformKind> parse_kinds(const std::string& list) {
  if (list == "all") return {kAllTransformKinds.begin(), kAllTransformKinds.end()};
  std::set<TransformKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto k = parse_transform_kind(item);
    if (!k) throw CLI::ValidationError("--kinds", "unknown transformation '" + item + "'");
    kinds.insert(*k);
  }
  if (kinds.empty()) throw CLI::ValidationError("--kinds", "empty list");
  return kinds;
}

std::string percent(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << v << "%";
  return s.str();
}

void print_counts(const CountSummary& counts, std::ostream& out) {
  const auto& ref = reference_counts();
  int ref_total = 0;
  out << std::left << std::setw(18) << "kind" << std::right << std::setw(8) << "emitted"
      << std::setw(11) << "reference" << std::setw(9) << "delta" << "\n";
  for (TransformKind k : kAllTransformKinds) {
    const int n = counts.per_kind.at(k);
    const int r = ref.at(k);
    ref_total += r;
    out << std::left << std::setw(18) << to_string(k) << std::right << std::setw(8) << n
        << std::setw(11) << r << std::setw(9) << percent(100.0 * (n - r) / r) << "\n";
  }
  out << std::left << std::setw(18) << "total" << std::right << std::setw(8) << counts.total
      << std::setw(11) << ref_total << std::setw(9)
      << percent(100.0 * (counts.total - ref_total) / ref_total) << "\n";
}

int cmd_transform(const Globals& g, const std::string& input, std::string root,
                  const std::set<TransformKind>& kinds, const std::string& out, bool no_validate,
                  bool random_rename) {
  if (root.empty()) root = fs::path(input).parent_path().string();
  const LoadResult loaded = load_base_dataset(root, input);
  for (const auto& r : loaded.rejected) warn("rejected " + r.id + ": " + r.reason);

  std::optional<Harness> harness;
  if (!no_validate) harness.emplace(make_harness(g));
  auto naming = make_naming(g);

  BuildOptions opts;
  opts.kinds = kinds;
  opts.seed = g.seed;
  opts.random_rename = random_rename;
  opts.jobs = g.jobs;
  opts.harness = harness ? &*harness : nullptr;
  opts.naming = naming.get();
  opts.log = warn;
  const BuildResult result = build_benchmark(loaded.instances, opts);
  write_benchmark(result, out);

  for (const auto& f : result.base_failures) warn("base " + f.id + " skipped: " + f.reason);
  const CountSummary counts = count_summary(result);
  std::cout << "loaded " << loaded.instances.size() << " base programs ("
            << loaded.rejected.size() << " rejected, " << result.base_failures.size()
            << " failing their own tests)\n";
  print_counts(counts, std::cout);
  std::cout << "exclusions:";
  if (counts.exclusions.empty()) std::cout << " none";
  for (const auto& [reason, n] : counts.exclusions) {
    std::cout << " " << to_string(reason) << "=" << n;
  }
  std::cout << "\n";
  if (opts.harness) {
    const auto it = counts.exclusions.find(ExclusionReason::PreservationFailed);
    const int dropped = it == counts.exclusions.end() ? 0 : it->second;
    // Validation only sees candidates that survived the buggy-line rule.
    const int candidates = counts.total + dropped;
    std::cout << "validation dropped " << dropped << " of " << candidates << " candidates ("
              << percent(candidates ? 100.0 * dropped / candidates : 0.0) << ")\n";
  } else {
    std::cout << "validation skipped\n";
  }
  std::cout << "manifest: " << (fs::path(out) / "manifest.json").string() << "\n";
  return kExitOk;
}

int cmd_validate(const Globals& g, const std::string& bench) {
  const Manifest manifest = read_manifest(bench);
  const Harness harness = make_harness(g);
  const auto targets = targets_from_manifest(manifest);
  std::vector<TestVerdict> verdicts(targets.size());
  parallel_for(targets.size(), g.jobs, [&](std::size_t i) {
    const auto& t = targets[i];
    verdicts[i] = harness.evaluate({{java_file_name(t.fixed.view()), t.fixed.content()}},
                                   {java_file_name(t.test.view()), t.test.content()});
  });
  int failed = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (verdicts[i].status == TestStatus::Pass) continue;
    ++failed;
    std::cout << targets[i].id << ": " << to_string(verdicts[i].status) << "\n";
    if (!verdicts[i].detail.empty()) std::cout << "  " << verdicts[i].detail << "\n";
  }
  std::cout << targets.size() - failed << " of " << targets.size()
            << " fixed programs pass their tests\n";
  return failed ? kExitFailures : kExitOk;
}

int cmd_evaluate(const Globals& g, const std::string& manifest_dir, const std::string& input,
                 std::string root, const std::string& patches, const std::string& model,
                 int k, const std::string& out, bool no_codebleu) {
  std::vector<EvalTarget> targets;
  if (!manifest_dir.empty()) {
    targets = targets_from_manifest(read_manifest(manifest_dir));
  } else {
    if (root.empty()) root = fs::path(input).parent_path().string();
    const LoadResult loaded = load_base_dataset(root, input);
    for (const auto& r : loaded.rejected) warn("rejected " + r.id + ": " + r.reason);
    targets = targets_from_base(loaded.instances);
  }
  const Harness harness = make_harness(g);
  EvaluateOptions opts;
  opts.model = model;
  opts.jobs = g.jobs;
  opts.codebleu = !no_codebleu;
  opts.log = warn;
  const EvaluateResult r = evaluate_patches(harness, targets, patches, opts);
  write_results(r.results, out);

  std::vector<SampleStats> stats;
  int unfixed = 0;
  for (const auto& b : r.results) {
    stats.push_back(b.stats);
    if (b.stats.c == 0) ++unfixed;
  }
  std::cout << "evaluated " << r.verdicts.size() << " patches for " << r.results.size()
            << " bugs (" << r.bugs_without_patches << " without patches)\n";
  if (!stats.empty()) {
    std::cout << std::fixed << std::setprecision(2) << "pass@" << k
              << " any=" << pass_any_clamped(stats, k)
              << " unbiased=" << pass_unbiased_clamped(stats, k) << "\n";
  }
  std::cout << "results: " << out << "\n";
  return unfixed ? kExitFailures : kExitOk;
}

int cmd_report(const Globals& g, const std::string& orig, const std::string& trans,
               const std::string& manifest_dir, int k) {
  std::optional<Manifest> manifest;
  if (!manifest_dir.empty()) manifest = read_manifest(manifest_dir);
  const ReportTable table = build_report(read_results(orig), read_results(trans), k,
                                         manifest ? &manifest->counts : nullptr);
  std::cout << render_report(table, g.format == "csv" ? ReportFormat::Csv : ReportFormat::Table);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantics-preserving transformation benchmark for Java program repair"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Global seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Parallel workers")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--jdk-home", g.jdk_home, "JDK directory (default: JDK_HOME, then PATH)");
  app.add_option("--naming-provider", g.naming_provider,
                 "'builtin' or a command speaking the naming protocol")
      ->capture_default_str();
  app.add_option("--timeout", g.timeout_s, "Per-program test timeout in seconds")
      ->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Report format")->capture_default_str()
      ->check(CLI::IsMember({"table", "csv"}));

  std::string input, root, kinds = "all", out, bench, patches, model, orig, trans;
  bool no_validate = false, random_rename = false, no_codebleu = false;
  int k = 10;

  auto* transform = app.add_subcommand("transform", "Build a transformed benchmark");
  transform->add_option("--input", input, "Base dataset manifest (JSON lines)")->required();
  transform->add_option("--root", root, "Directory the manifest paths are relative to");
  transform->add_option("--kinds", kinds, "'all' or a comma-separated list")
      ->capture_default_str();
  transform->add_option("--out", out, "Output directory")->required();
  transform->add_flag("--no-validate", no_validate, "Skip the compile-and-test gate");
  transform->add_flag("--random-rename", random_rename,
                      "Pick the renamed declaration with the seed");

  auto* validate = app.add_subcommand("validate", "Re-run the tests of an emitted benchmark");
  validate->add_option("--manifest", bench, "Benchmark directory")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Score candidate patches");
  auto* m_opt = evaluate->add_option("--manifest", bench, "Benchmark directory");
  auto* i_opt = evaluate->add_option("--input", input, "Base dataset manifest");
  m_opt->excludes(i_opt);
  evaluate->add_option("--root", root, "Base dataset root")->needs(i_opt);
  evaluate->add_option("--patches", patches, "Patches root: <root>/<id>/NN.java")->required();
  evaluate->add_option("--model", model, "Model name recorded in the results")->required();
  evaluate->add_option("--k", k, "k for the printed summary")->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--out", out, "Results file (JSON lines)")->required();
  evaluate->add_flag("--no-codebleu", no_codebleu, "Skip CodeBLEU scoring");

  auto* report = app.add_subcommand("report", "Render the robustness table");
  report->add_option("--orig", orig, "Results on the base programs")->required();
  report->add_option("--trans", trans, "Results on the transformed instances")->required();
  report->add_option("--manifest", bench, "Benchmark directory for instance counts");
  report->add_option("--k", k, "k for pass@k")->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::set<TransformKind> kind_set;
  try {
    app.parse(argc, argv);
    if (*transform) kind_set = parse_kinds(kinds);
    if (*evaluate && bench.empty() && input.empty()) {
      throw CLI::RequiredError("--manifest or --input");
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform) return cmd_transform(g, input, root, kind_set, out, no_validate, random_rename);
    if (*validate) return cmd_validate(g, bench);
    if (*evaluate) {
      return cmd_evaluate(g, bench, input, root, patches, model, k, out, no_codebleu);
    }
    return cmd_report(g, orig, trans, bench, k);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfrastructure;
  }
}
