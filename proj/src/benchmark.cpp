#include "jrobust/benchmark.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include <json.hpp>
#include <openssl/evp.h>

#include "jrobust/error.hpp"
#include "jrobust/parallel.hpp"

namespace jrobust {

using ojson = nlohmann::ordered_json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw InfrastructureError("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

void write_file(const fs::path& p, std::string_view content) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw InfrastructureError("cannot write " + p.string());
}

}  // namespace

LoadResult load_base_dataset(const fs::path& root, const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw InputError("cannot read manifest " + manifest.string());
  LoadResult result;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::string id = "line " + std::to_string(lineno);
    try {
      const auto j = nlohmann::json::parse(line);
      id = j.at("id").get<std::string>();
      if (id.empty() || id.find_first_of("/\\ ") != std::string::npos) {
        throw InputError("id must be nonempty without slashes or spaces");
      }
      if (!seen.insert(id).second) throw InputError("duplicate id");
      BugInstance bug;
      bug.id = id;
      bug.buggy = SourceText(read_text_file(root / j.at("buggy_path").get<std::string>()));
      bug.fixed = SourceText(read_text_file(root / j.at("fixed_path").get<std::string>()));
      bug.test = SourceText(read_text_file(root / j.at("test_path").get<std::string>()));
      const int first = j.at("buggy_start_line").get<int>();
      const int last = j.at("buggy_end_line").get<int>();
      if (first < 1 || last < first || last > bug.buggy.line_count()) {
        throw InputError("buggy line range " + std::to_string(first) + "-" +
                         std::to_string(last) + " outside the buggy file");
      }
      bug.buggy_span = bug.buggy.line_span(first, last);
      for (const auto* t : {&bug.buggy, &bug.fixed, &bug.test}) {
        if (parse_source(*t).has_error()) {
          const char* which = t == &bug.buggy ? "buggy" : t == &bug.fixed ? "fixed" : "test";
          throw InputError(std::string(which) + " source does not parse");
        }
      }
      result.instances.push_back(std::move(bug));
    } catch (const nlohmann::json::exception& e) {
      result.rejected.push_back({id, std::string("bad record: ") + e.what()});
    } catch (const Error& e) {
      result.rejected.push_back({id, e.what()});
    }
  }
  return result;
}

RemapOutcome remap_buggy_line(const SourceText& original, const LineMap& line_map,
                              std::span<const Edit> edits, const Span& buggy_span) {
  RemapOutcome out;
  for (int l = buggy_span.start_line; l <= buggy_span.end_line; ++l) {
    if (line_map.touched(l)) {
      out.excluded = true;
      return out;
    }
    for (const Edit& e : edits) {
      if (edit_touches_line(original, e, l)) {
        out.excluded = true;
        return out;
      }
    }
  }
  const auto first = line_map.map(buggy_span.start_line);
  const auto last = line_map.map(buggy_span.end_line);
  if (!first || !last) {
    out.excluded = true;
    return out;
  }
  out.start_line = first->first;
  out.end_line = last->second;
  return out;
}

std::string_view to_string(ExclusionReason r) {
  switch (r) {
    case ExclusionReason::BuggyLineTouched:
      return "buggy-line-touched";
    case ExclusionReason::PreservationFailed:
      return "preservation-failed";
    case ExclusionReason::InapplicableCollision:
      return "inapplicable-collision";
    case ExclusionReason::SiteMismatch:
      return "site-mismatch";
    case ExclusionReason::RemapMismatch:
      return "remap-mismatch";
  }
  return "?";
}

namespace {

std::optional<ExclusionReason> parse_reason(std::string_view s) {
  for (auto r : {ExclusionReason::BuggyLineTouched, ExclusionReason::PreservationFailed,
                 ExclusionReason::InapplicableCollision, ExclusionReason::SiteMismatch,
                 ExclusionReason::RemapMismatch}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

// Line alignment of two versions of a program by longest common subsequence.
// a_to_b[l] is the matching line of `b` for line l of `a`, or 0.
struct LineAlignment {
  std::vector<int> a_to_b;
  std::vector<int> b_to_a;
};

LineAlignment align_lines(const SourceText& a, const SourceText& b) {
  const int n = a.line_count();
  const int m = b.line_count();
  std::vector<std::vector<int>> lcs(n + 2, std::vector<int>(m + 2, 0));
  for (int i = n; i >= 1; --i) {
    for (int j = m; j >= 1; --j) {
      lcs[i][j] = a.line_text(i) == b.line_text(j) ? lcs[i + 1][j + 1] + 1
                                                   : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  LineAlignment out{std::vector<int>(n + 1, 0), std::vector<int>(m + 1, 0)};
  int i = 1, j = 1;
  while (i <= n && j <= m) {
    if (a.line_text(i) == b.line_text(j)) {
      out.a_to_b[i] = j;
      out.b_to_a[j] = i;
      ++i;
      ++j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

// Sites are matched across the buggy and fixed programs by their anchor
// position in the fixed program's coordinates plus the site detail. The start
// line must be unchanged; an end in the changed region matches any end there.
using SiteKey = std::tuple<int, std::size_t, int, std::size_t, std::string>;

SiteKey site_key(const Program& p, const TransformSite& s, const std::vector<int>& to_common,
                 bool is_target) {
  auto line = [&](int l) { return is_target ? (to_common[l] ? l : 0) : to_common[l]; };
  const int start = line(s.anchor.start_line);
  const int end = line(s.anchor.end_line);
  const std::size_t start_col = s.anchor.start_byte - p.text.line_start(s.anchor.start_line);
  const std::size_t end_col =
      end ? s.anchor.end_byte - p.text.line_start(s.anchor.end_line) : 0;
  return {start ? start : -1, start_col, end, end_col, s.detail};
}

const TransformSite* match_site(const Program& from, const std::vector<TransformSite>& from_sites,
                                std::size_t index, const Program& to,
                                const std::vector<TransformSite>& to_sites,
                                const LineAlignment& align) {
  const SiteKey key = site_key(from, from_sites[index], align.a_to_b, false);
  if (std::get<0>(key) < 0) return nullptr;
  int ordinal = 0;
  for (std::size_t i = 0; i < index; ++i) {
    ordinal += site_key(from, from_sites[i], align.a_to_b, false) == key;
  }
  for (const auto& s : to_sites) {
    if (site_key(to, s, align.b_to_a, true) == key && ordinal-- == 0) return &s;
  }
  return nullptr;
}

bool lines_intersect(const Span& a, const Span& b) {
  return a.start_line <= b.end_line && b.start_line <= a.end_line;
}

bool trimmed_lines_equal(const SourceText& a, int a_first, int a_last,
                         const SourceText& b, int b_first, int b_last) {
  if (a_last - a_first != b_last - b_first) return false;
  for (int i = 0; i <= a_last - a_first; ++i) {
    if (trim(a.line_text(a_first + i)) != trim(b.line_text(b_first + i))) return false;
  }
  return true;
}

std::string first_line(std::string_view s) {
  const auto nl = s.find('\n');
  return std::string(trim(s.substr(0, nl)));
}

std::string candidate_id(const std::string& base, TransformKind kind, int site) {
  return base + "__" + std::string(to_string(kind)) + "__" + std::to_string(site);
}

struct BaseOutput {
  std::vector<TransformedInstance> instances;
  std::vector<Exclusion> exclusions;
  std::optional<BaseFailure> failure;
};

class BasePipeline {
 public:
  BasePipeline(const BugInstance& bug, const BuildOptions& options,
               NamingProvider& naming, BuiltinNamingProvider& builtin)
      : bug_(bug),
        options_(options),
        naming_(naming),
        builtin_(builtin),
        buggy_(Program::parse(bug.buggy)),
        fixed_(Program::parse(bug.fixed)),
        test_(Program::parse(bug.test)),
        align_(align_lines(bug.buggy, bug.fixed)) {}

  BaseOutput run() {
    if (options_.harness) {
      const TestVerdict v = validate(bug_.fixed, bug_.test);
      if (v.status != TestStatus::Pass) {
        out_.failure = BaseFailure{
            bug_.id, "fixed program does not pass its tests: " +
                         std::string(to_string(v.status)) + " " + first_line(v.detail)};
        return std::move(out_);
      }
    }
    for (TransformKind kind : kAllTransformKinds) {
      if (!options_.kinds.contains(kind)) continue;
      if (is_rename(kind)) {
        run_rename(kind);
      } else {
        run_structural(kind);
      }
    }
    return std::move(out_);
  }

 private:
  TestVerdict validate(const SourceText& program, const SourceText& test) const {
    return options_.harness->evaluate(
        {SourceFile{java_file_name(program.view()), program.content()}},
        SourceFile{java_file_name(test.view()), test.content()});
  }

  void exclude(TransformKind kind, int site, ExclusionReason reason, std::string detail) {
    out_.exclusions.push_back(Exclusion{candidate_id(bug_.id, kind, site), bug_.id, kind,
                                        reason, std::move(detail)});
  }

  // Shared tail: remap, re-parse, check content, validate, emit. Returns true
  // when the instance was emitted.
  bool finish(TransformKind kind, const TransformSite& site, TransformResult rb,
              TransformResult rf, SourceText test_out) {
    const RemapOutcome remap =
        remap_buggy_line(bug_.buggy, rb.line_map, rb.edits, bug_.buggy_span);
    if (remap.excluded) {
      exclude(kind, site.site_id, ExclusionReason::BuggyLineTouched, "");
      return false;
    }
    for (const SourceText* t : {&rb.output, &rf.output, &test_out}) {
      if (parse_source(*t).has_error()) {
        exclude(kind, site.site_id, ExclusionReason::PreservationFailed,
                "transformed source does not parse");
        return false;
      }
    }
    if (!trimmed_lines_equal(bug_.buggy, bug_.buggy_span.start_line, bug_.buggy_span.end_line,
                             rb.output, remap.start_line, remap.end_line)) {
      exclude(kind, site.site_id, ExclusionReason::RemapMismatch, "");
      return false;
    }
    std::string validation = "skipped";
    if (options_.harness) {
      const TestVerdict v = validate(rf.output, test_out);
      if (v.status != TestStatus::Pass) {
        exclude(kind, site.site_id, ExclusionReason::PreservationFailed,
                std::string(to_string(v.status)) + ": " + first_line(v.detail));
        return false;
      }
      validation = "pass";
    }
    TransformedInstance inst;
    inst.id = candidate_id(bug_.id, kind, site.site_id);
    inst.base_id = bug_.id;
    inst.kind = kind;
    inst.site_id = site.site_id;
    inst.buggy_span = rb.output.line_span(remap.start_line, remap.end_line);
    inst.provenance = rb.provenance;
    inst.provenance.seed = options_.seed;
    inst.buggy = std::move(rb.output);
    inst.fixed = std::move(rf.output);
    inst.test = std::move(test_out);
    inst.validation = validation;
    out_.instances.push_back(std::move(inst));
    return true;
  }

  const TransformSite* counterpart(TransformKind kind, const std::vector<TransformSite>& bs,
                                   std::size_t i, const std::vector<TransformSite>& fs) {
    const TransformSite* f = match_site(buggy_, bs, i, fixed_, fs, align_);
    if (!f) {
      const bool near_bug = lines_intersect(bs[i].anchor, bug_.buggy_span);
      exclude(kind, bs[i].site_id,
              near_bug ? ExclusionReason::BuggyLineTouched : ExclusionReason::SiteMismatch,
              near_bug ? "" : "no counterpart site in the fixed program");
    }
    return f;
  }

  void run_structural(TransformKind kind) {
    const auto bs = enumerate_sites(buggy_, kind);
    if (bs.empty()) return;
    const auto fs = enumerate_sites(fixed_, kind);
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const TransformSite* f = counterpart(kind, bs, i, fs);
      if (!f) continue;
      try {
        TransformResult rb = apply_structural(buggy_, bs[i], options_.seed);
        TransformResult rf = apply_structural(fixed_, *f, options_.seed);
        finish(kind, bs[i], std::move(rb), std::move(rf), bug_.test);
      } catch (const ApplicabilityError& e) {
        exclude(kind, bs[i].site_id, ExclusionReason::InapplicableCollision, e.what());
      }
    }
  }

  std::vector<NameCandidate> candidates(const Declaration& decl) {
    const NamingRequest req =
        make_naming_request(bug_.buggy, buggy_.scopes, decl, options_.naming_k);
    try {
      auto c = suggest_names(req, naming_);
      if (!c.empty()) return c;
    } catch (const ProviderError& e) {
      if (options_.log) {
        options_.log("naming provider failed for " + bug_.id + " (" + decl.name +
                     "), using the built-in provider: " + e.what());
      }
    }
    return suggest_names(req, builtin_);
  }

  void run_rename(TransformKind kind) {
    auto bs = enumerate_sites(buggy_, kind);
    if (bs.empty()) return;
    const auto fs = enumerate_sites(fixed_, kind);
    std::vector<std::size_t> order(bs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (options_.random_rename) {
      const std::string salt = sha256_hex(bug_.id + "/" + std::string(to_string(kind)));
      std::mt19937_64 rng(options_.seed ^ std::stoull(salt.substr(0, 16), nullptr, 16));
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    }
    std::set<std::string, std::less<>> visible;
    for (const Program* p : {&buggy_, &fixed_, &test_}) {
      visible.insert(p->scopes.all_names().begin(), p->scopes.all_names().end());
    }
    for (std::size_t i : order) {
      const TransformSite& site = bs[i];
      const TransformSite* f = counterpart(kind, bs, i, fs);
      if (!f) continue;
      const Declaration& decl = buggy_.scopes.declaration(site.decl_id);
      const auto cands = candidates(decl);
      if (cands.empty()) {
        exclude(kind, site.site_id, ExclusionReason::InapplicableCollision, "no name candidates");
        continue;
      }
      const std::string name = select_name(cands, visible);
      try {
        TransformResult rb = rename_identifier(buggy_, site, name);
        TransformResult rf = rename_identifier(fixed_, *f, name);
        SourceText test_out = bug_.test;
        if (kind == TransformKind::MethodRename) {
          test_out = rename_qualified_calls(test_, buggy_.primary_class_name(), decl.name, name)
                         .output;
        }
        rb.provenance.naming->provider = naming_.name();
        if (finish(kind, site, std::move(rb), std::move(rf), std::move(test_out))) return;
      } catch (const ApplicabilityError& e) {
        exclude(kind, site.site_id, ExclusionReason::InapplicableCollision, e.what());
      }
    }
  }

  const BugInstance& bug_;
  const BuildOptions& options_;
  NamingProvider& naming_;
  BuiltinNamingProvider& builtin_;
  Program buggy_;
  Program fixed_;
  Program test_;
  LineAlignment align_;
  BaseOutput out_;
};

std::string base_digest(const std::vector<BugInstance>& instances) {
  std::string record;
  for (const auto& b : instances) {
    record += b.id + '\0' + sha256_hex(b.buggy.view()) + '\0' + sha256_hex(b.fixed.view()) +
              '\0' + sha256_hex(b.test.view()) + '\0' + std::to_string(b.buggy_span.start_line) +
              '\0' + std::to_string(b.buggy_span.end_line) + '\n';
  }
  return sha256_hex(record);
}

}  // namespace

BuildResult build_benchmark(const std::vector<BugInstance>& instances,
                            const BuildOptions& options) {
  BuiltinNamingProvider builtin;
  NamingProvider& naming = options.naming ? *options.naming : builtin;
  std::vector<BaseOutput> outputs(instances.size());
  parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    try {
      BasePipeline pipeline(instances[i], options, naming, builtin);
      outputs[i] = pipeline.run();
    } catch (const InputError& e) {
      outputs[i].failure = BaseFailure{instances[i].id, e.what()};
    }
  });
  BuildResult result;
  result.seed = options.seed;
  result.base_digest = base_digest(instances);
  for (auto& o : outputs) {
    for (auto& inst : o.instances) result.instances.push_back(std::move(inst));
    for (auto& ex : o.exclusions) result.exclusions.push_back(std::move(ex));
    if (o.failure) result.base_failures.push_back(std::move(*o.failure));
  }
  return result;
}

CountSummary count_summary(const BuildResult& result) {
  CountSummary s;
  for (TransformKind k : kAllTransformKinds) s.per_kind[k] = 0;
  for (const auto& inst : result.instances) ++s.per_kind[inst.kind];
  s.total = static_cast<int>(result.instances.size());
  for (const auto& ex : result.exclusions) ++s.exclusions[ex.reason];
  return s;
}

CountSummary count_summary(const Manifest& manifest) {
  CountSummary s;
  for (TransformKind k : kAllTransformKinds) s.per_kind[k] = 0;
  for (const auto& e : manifest.instances) ++s.per_kind[e.kind];
  s.total = static_cast<int>(manifest.instances.size());
  for (const auto& ex : manifest.exclusions) ++s.exclusions[ex.reason];
  return s;
}

namespace {

ojson provenance_json(const Provenance& p) {
  ojson j;
  j["kind"] = std::string(to_string(p.kind));
  j["site_id"] = p.site_id;
  j["seed"] = p.seed;
  j["detail"] = p.detail;
  if (p.naming) {
    j["naming"] = {{"old_name", p.naming->old_name},
                   {"new_name", p.naming->new_name},
                   {"provider", p.naming->provider}};
  } else {
    j["naming"] = nullptr;
  }
  return j;
}

ojson exclusion_json(const Exclusion& e) {
  ojson j;
  j["instance"] = e.instance;
  j["base_id"] = e.base_id;
  j["kind"] = std::string(to_string(e.kind));
  j["reason"] = std::string(to_string(e.reason));
  j["detail"] = e.detail;
  return j;
}

}  // namespace

void write_benchmark(const BuildResult& result, const fs::path& out) {
  if (fs::exists(out) && !fs::is_directory(out)) {
    throw InputError(out.string() + " exists and is not a directory");
  }
  if (fs::exists(out) && !fs::is_empty(out) && !fs::exists(out / "manifest.json")) {
    throw InputError(out.string() + " is not empty and holds no benchmark");
  }
  fs::create_directories(out);
  const fs::path staging = out / ".staging";
  fs::remove_all(staging);
  const CountSummary counts = count_summary(result);
  ojson manifest;
  manifest["version"] = std::string(kManifestVersion);
  manifest["base_digest"] = result.base_digest;
  manifest["seed"] = result.seed;
  ojson counts_j = ojson::object();
  for (TransformKind k : kAllTransformKinds) counts_j[std::string(to_string(k))] = counts.per_kind.at(k);
  counts_j["total"] = counts.total;
  manifest["counts"] = counts_j;
  ojson list = ojson::array();
  try {
    for (const auto& inst : result.instances) {
      const fs::path rel = fs::path("instances") / inst.id;
      const fs::path dir = staging / inst.id;
      const fs::path buggy = fs::path("buggy") / java_file_name(inst.buggy.view());
      const fs::path fixed = fs::path("fixed") / java_file_name(inst.fixed.view());
      const fs::path test = fs::path("test") / java_file_name(inst.test.view());
      write_file(dir / buggy, inst.buggy.view());
      write_file(dir / fixed, inst.fixed.view());
      write_file(dir / test, inst.test.view());
      ojson e;
      e["id"] = inst.id;
      e["base_id"] = inst.base_id;
      e["kind"] = std::string(to_string(inst.kind));
      e["site_id"] = inst.site_id;
      e["buggy_path"] = (rel / buggy).generic_string();
      e["fixed_path"] = (rel / fixed).generic_string();
      e["test_path"] = (rel / test).generic_string();
      e["buggy_sha256"] = sha256_hex(inst.buggy.view());
      e["fixed_sha256"] = sha256_hex(inst.fixed.view());
      e["test_sha256"] = sha256_hex(inst.test.view());
      e["buggy_start_line"] = inst.buggy_span.start_line;
      e["buggy_end_line"] = inst.buggy_span.end_line;
      e["validation"] = inst.validation;
      ojson meta = e;
      meta["provenance"] = provenance_json(inst.provenance);
      write_file(dir / "meta.json", meta.dump(2) + "\n");
      list.push_back(std::move(e));
    }
    manifest["instances"] = std::move(list);
    ojson ex = ojson::array();
    for (const auto& e : result.exclusions) ex.push_back(exclusion_json(e));
    manifest["exclusions"] = std::move(ex);
    ojson bf = ojson::array();
    for (const auto& f : result.base_failures) bf.push_back({{"id", f.id}, {"reason", f.reason}});
    manifest["base_failures"] = std::move(bf);
    write_file(staging / "manifest.json", manifest.dump(2) + "\n");

    fs::remove(out / "manifest.json");
    fs::remove_all(out / "instances");
    fs::create_directories(out / "instances");
    for (const auto& inst : result.instances) {
      fs::rename(staging / inst.id, out / "instances" / inst.id);
    }
    fs::rename(staging / "manifest.json", out / "manifest.json");
    fs::remove_all(staging);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(staging, ec);
    throw;
  }
}

Manifest read_manifest(const fs::path& out) {
  const fs::path path = fs::is_directory(out) ? out / "manifest.json" : out;
  const fs::path root = path.parent_path();
  Manifest m;
  try {
    const auto j = nlohmann::json::parse(read_text_file(path));
    m.version = j.at("version").get<std::string>();
    if (m.version != kManifestVersion) throw InputError("unsupported manifest version " + m.version);
    m.base_digest = j.at("base_digest").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("instances")) {
      ManifestEntry me;
      me.id = e.at("id").get<std::string>();
      me.base_id = e.at("base_id").get<std::string>();
      const auto kind = parse_transform_kind(e.at("kind").get<std::string>());
      if (!kind) throw InputError("unknown kind in entry " + me.id);
      me.kind = *kind;
      me.site_id = e.at("site_id").get<int>();
      me.buggy_path = root / e.at("buggy_path").get<std::string>();
      me.fixed_path = root / e.at("fixed_path").get<std::string>();
      me.test_path = root / e.at("test_path").get<std::string>();
      me.buggy_sha256 = e.at("buggy_sha256").get<std::string>();
      me.fixed_sha256 = e.at("fixed_sha256").get<std::string>();
      me.test_sha256 = e.at("test_sha256").get<std::string>();
      me.buggy_start_line = e.at("buggy_start_line").get<int>();
      me.buggy_end_line = e.at("buggy_end_line").get<int>();
      me.validation = e.at("validation").get<std::string>();
      for (const auto& [p, sha] : {std::pair{me.buggy_path, me.buggy_sha256},
                                   std::pair{me.fixed_path, me.fixed_sha256},
                                   std::pair{me.test_path, me.test_sha256}}) {
        if (sha256_hex(read_text_file(p)) != sha) {
          throw InputError("digest mismatch for " + p.string());
        }
      }
      m.instances.push_back(std::move(me));
    }
    int total = 0;
    for (TransformKind k : kAllTransformKinds) {
      const int c = j.at("counts").at(std::string(to_string(k))).get<int>();
      m.counts[k] = c;
      const auto actual = std::count_if(m.instances.begin(), m.instances.end(),
                                        [&](const ManifestEntry& e) { return e.kind == k; });
      if (actual != c) throw InputError("count mismatch for " + std::string(to_string(k)));
      total += c;
    }
    m.total = j.at("counts").at("total").get<int>();
    if (m.total != total || m.total != static_cast<int>(m.instances.size())) {
      throw InputError("manifest total does not match its instances");
    }
    for (const auto& e : j.at("exclusions")) {
      Exclusion ex;
      ex.instance = e.at("instance").get<std::string>();
      ex.base_id = e.at("base_id").get<std::string>();
      const auto kind = parse_transform_kind(e.at("kind").get<std::string>());
      const auto reason = parse_reason(e.at("reason").get<std::string>());
      if (!kind || !reason) throw InputError("bad exclusion record " + ex.instance);
      ex.kind = *kind;
      ex.reason = *reason;
      ex.detail = e.at("detail").get<std::string>();
      m.exclusions.push_back(std::move(ex));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed manifest " + path.string() + ": " + e.what());
  }
  return m;
}

}  // namespace jrobust
