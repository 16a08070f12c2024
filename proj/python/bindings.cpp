#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "jrobust/benchmark.hpp"
#include "jrobust/error.hpp"
#include "jrobust/metrics.hpp"
#include "jrobust/report.hpp"
#include "jrobust/transforms.hpp"

namespace py = pybind11;
using namespace jrobust;

namespace {

TransformKind kind_arg(const std::string& name) {
  auto k = parse_transform_kind(name);
  if (!k) throw InputError("unknown transformation kind: " + name);
  return *k;
}

const TransformSite& site_arg(const std::vector<TransformSite>& sites, int site_id) {
  for (const auto& s : sites) {
    if (s.site_id == site_id) return s;
  }
  throw LookupError("no site " + std::to_string(site_id));
}

py::list sites(const std::string& source, const std::string& kind) {
  const Program p = Program::parse(SourceText(source));
  py::list out;
  for (const auto& s : enumerate_sites(p, kind_arg(kind))) {
    py::dict d;
    d["site_id"] = s.site_id;
    d["start_line"] = s.anchor.start_line;
    d["end_line"] = s.anchor.end_line;
    d["name"] = s.decl_name;
    d["detail"] = s.detail;
    out.append(d);
  }
  return out;
}

std::string transform(const std::string& source, const std::string& kind, int site_id,
                      const std::optional<std::string>& new_name, std::uint64_t seed) {
  const TransformKind k = kind_arg(kind);
  const Program p = Program::parse(SourceText(source));
  const auto all = enumerate_sites(p, k);
  const TransformSite& site = site_arg(all, site_id);
  if (is_rename(k)) {
    if (!new_name) throw ContractViolation("a rename needs new_name");
    return rename_identifier(p, site, *new_name).output.content();
  }
  return apply_structural(p, site, seed).output.content();
}

py::dict codebleu(const std::string& reference, const std::string& hypothesis) {
  const CodeBleuScore s = codebleu_subset(SourceText(reference), SourceText(hypothesis));
  py::dict d;
  d["ngram"] = s.ngram;
  d["weighted"] = s.weighted;
  d["ast"] = s.ast;
  d["total"] = s.total;
  return d;
}

py::dict build(const fs::path& manifest, const std::optional<fs::path>& root,
               const std::optional<std::vector<std::string>>& kinds, std::uint64_t seed,
               unsigned jobs, const std::optional<fs::path>& out) {
  const LoadResult loaded =
      load_base_dataset(root ? *root : manifest.parent_path(), manifest);
  BuildOptions opts;
  opts.seed = seed;
  opts.jobs = jobs;
  if (kinds) {
    opts.kinds.clear();
    for (const auto& k : *kinds) opts.kinds.insert(kind_arg(k));
  }
  BuildResult result;
  {
    py::gil_scoped_release release;
    result = build_benchmark(loaded.instances, opts);
    if (out) write_benchmark(result, *out);
  }
  const CountSummary counts = count_summary(result);
  py::dict per_kind, exclusions;
  for (const auto& [k, n] : counts.per_kind) per_kind[py::str(std::string(to_string(k)))] = n;
  for (const auto& [r, n] : counts.exclusions) {
    exclusions[py::str(std::string(to_string(r)))] = n;
  }
  py::dict d;
  d["loaded"] = loaded.instances.size();
  d["rejected"] = loaded.rejected.size();
  d["counts"] = per_kind;
  d["total"] = counts.total;
  d["exclusions"] = exclusions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_jrobust, m) {
  m.doc() = "Semantics-preserving Java transformations and repair metrics";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ApplicabilityError>(m, "ApplicabilityError", PyExc_ValueError);
  py::register_exception<LookupError>(m, "LookupError", PyExc_LookupError);
  py::register_exception<MetricError>(m, "MetricError", PyExc_ArithmeticError);

  m.def("kinds", [] {
    std::vector<std::string> out;
    for (auto k : kAllTransformKinds) out.emplace_back(to_string(k));
    return out;
  }, "Transformation kind names, in report order.");
  m.def("sites", &sites, py::arg("source"), py::arg("kind"),
        "Applicable sites of one kind in a Java compilation unit.");
  m.def("transform", &transform, py::arg("source"), py::arg("kind"), py::arg("site_id"),
        py::arg("new_name") = std::nullopt, py::arg("seed") = kDefaultSeed,
        "Applies one transformation at one site and returns the new source.");
  m.def("pass_at_k_unbiased", &unbiased_term, py::arg("n"), py::arg("c"), py::arg("k"),
        "1 - C(n-c, k) / C(n, k) for one bug.");
  m.def("relative_change", [](double orig, double trans) {
    const Change c = relative_change(orig, trans);
    return py::make_tuple(c.percent, std::string(to_string(c.direction)), format_change(c));
  }, py::arg("orig"), py::arg("trans"),
        "(percent, direction, formatted) for an orig and trans score.");
  m.def("codebleu", &codebleu, py::arg("reference"), py::arg("hypothesis"),
        "CodeBLEU subset components and total, each in [0, 1].");
  m.def("build_benchmark", &build, py::arg("manifest"), py::arg("root") = std::nullopt,
        py::arg("kinds") = std::nullopt, py::arg("seed") = kDefaultSeed, py::arg("jobs") = 1,
        py::arg("out") = std::nullopt,
        "Transforms a base dataset without validation and returns instance counts.");
}
