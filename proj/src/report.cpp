#include "jrobust/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jrobust/error.hpp"

namespace jrobust {

using ojson = nlohmann::ordered_json;

void write_results(const std::vector<BugResult>& results, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  for (const BugResult& r : results) {
    ojson j;
    j["model"] = r.model;
    j["id"] = r.id;
    j["base_id"] = r.base_id;
    j["kind"] = r.kind ? ojson(std::string(to_string(*r.kind))) : ojson(nullptr);
    j["n"] = r.stats.n;
    j["c"] = r.stats.c;
    j["first_pass"] = r.stats.first_pass;
    j["codebleu"] = r.codebleu ? ojson(*r.codebleu) : ojson(nullptr);
    j["verdicts"] = r.verdicts;
    out << j.dump() << "\n";
  }
  out.close();
  if (!out) throw InfrastructureError("cannot write " + path.string());
}

std::vector<BugResult> read_results(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read results " + path.string());
  std::vector<BugResult> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      BugResult r;
      r.model = j.at("model").get<std::string>();
      r.id = j.at("id").get<std::string>();
      r.base_id = j.at("base_id").get<std::string>();
      if (!j.at("kind").is_null()) {
        r.kind = parse_transform_kind(j.at("kind").get<std::string>());
        if (!r.kind) throw InputError("unknown kind");
      }
      r.stats = {j.at("n").get<int>(), j.at("c").get<int>(), j.at("first_pass").get<int>()};
      if (r.stats.n < 0 || r.stats.c < 0 || r.stats.c > r.stats.n ||
          r.stats.first_pass < 0 || r.stats.first_pass > r.stats.n ||
          (r.stats.c > 0) != (r.stats.first_pass > 0)) {
        throw InputError("inconsistent sample counts");
      }
      if (!j.at("codebleu").is_null()) r.codebleu = j.at("codebleu").get<double>();
      r.verdicts = j.value("verdicts", std::vector<std::string>{});
      out.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

const std::map<TransformKind, int>& reference_counts() {
  static const std::map<TransformKind, int> m = {
      {TransformKind::LocalVarRename, 100}, {TransformKind::MethodRename, 149},
      {TransformKind::ParamRename, 162},    {TransformKind::BooleanExchange, 7},
      {TransformKind::LoopExchange, 142},   {TransformKind::ReorderCondition, 603},
      {TransformKind::InsertLog, 173},      {TransformKind::InsertTryCatch, 114},
  };
  return m;
}

double pass_any_clamped(const std::vector<SampleStats>& stats, int k) {
  if (stats.empty()) throw MetricError("pass@k over an empty bug list");
  int fixed = 0;
  for (const auto& s : stats) {
    if (s.first_pass >= 1 && s.first_pass <= std::min(k, s.n)) ++fixed;
  }
  return 100.0 * fixed / static_cast<double>(stats.size());
}

double pass_unbiased_clamped(const std::vector<SampleStats>& stats, int k) {
  if (stats.empty()) throw MetricError("pass@k over an empty bug list");
  double sum = 0;
  for (const auto& s : stats) sum += unbiased_term(s.n, s.c, std::min(k, s.n));
  return 100.0 * sum / static_cast<double>(stats.size());
}

namespace {

std::set<std::string> models_of(const std::vector<BugResult>& rs) {
  std::set<std::string> m;
  for (const auto& r : rs) m.insert(r.model);
  return m;
}

std::optional<double> mean_codebleu(const std::vector<const BugResult*>& rs) {
  double sum = 0;
  int n = 0;
  for (const auto* r : rs) {
    if (r->codebleu) {
      sum += *r->codebleu;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return round2(100.0 * sum / n);
}

}  // namespace

ReportTable build_report(const std::vector<BugResult>& orig,
                         const std::vector<BugResult>& trans, int k,
                         const std::map<TransformKind, int>* manifest_counts) {
  if (k < 1) throw ContractViolation("k must be at least 1");
  const auto mo = models_of(orig);
  const auto mt = models_of(trans);
  if (mo != mt) {
    std::string msg = "orig and trans results cover different models:";
    for (const auto& m : mo) {
      if (!mt.contains(m)) msg += " " + m + " (orig only)";
    }
    for (const auto& m : mt) {
      if (!mo.contains(m)) msg += " " + m + " (trans only)";
    }
    throw InputError(msg);
  }
  ReportTable table;
  table.k = k;
  if (manifest_counts) table.instances = *manifest_counts;

  std::map<std::string, std::map<std::string, const BugResult*>> orig_by_model;
  for (const auto& r : orig) orig_by_model[r.model][r.base_id] = &r;

  std::map<TransformKind, std::map<std::string, int>> trans_counts;
  for (const auto& r : trans) {
    if (!r.kind) throw InputError("trans result " + r.id + " has no kind");
    ++trans_counts[*r.kind][r.model];
  }
  if (!manifest_counts) {
    for (const auto& [kind, per_model] : trans_counts) {
      int most = 0;
      for (const auto& [m, n] : per_model) most = std::max(most, n);
      table.instances[kind] = most;
    }
  }

  for (TransformKind kind : kAllTransformKinds) {
    for (const auto& model : mt) {
      std::vector<const BugResult*> t;
      for (const auto& r : trans) {
        if (r.model == model && r.kind == kind) t.push_back(&r);
      }
      if (t.empty()) continue;
      std::vector<const BugResult*> o;
      std::set<std::string> bases;
      for (const auto* r : t) bases.insert(r->base_id);
      for (const auto& b : bases) {
        auto it = orig_by_model[model].find(b);
        if (it == orig_by_model[model].end()) {
          throw InputError("no orig result for base bug " + b + " (model " + model + ")");
        }
        o.push_back(it->second);
      }
      auto stats = [](const std::vector<const BugResult*>& v) {
        std::vector<SampleStats> s;
        for (const auto* r : v) s.push_back(r->stats);
        return s;
      };
      EvalRow row;
      row.model = model;
      row.kind = kind;
      row.bugs_orig = static_cast<int>(o.size());
      row.bugs_trans = static_cast<int>(t.size());
      row.any_orig = round2(pass_any_clamped(stats(o), k));
      row.any_trans = round2(pass_any_clamped(stats(t), k));
      row.any_change = relative_change(row.any_orig, row.any_trans);
      row.unbiased_orig = round2(pass_unbiased_clamped(stats(o), k));
      row.unbiased_trans = round2(pass_unbiased_clamped(stats(t), k));
      row.unbiased_change = relative_change(row.unbiased_orig, row.unbiased_trans);
      row.codebleu_orig = mean_codebleu(o);
      row.codebleu_trans = mean_codebleu(t);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string format_change(const Change& change) {
  if (change.from_zero) return "n/a";
  if (change.direction == Direction::None) return "0%";
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << change.percent
    << (change.direction == Direction::Up ? "↑" : "↓");
  return s.str();
}

namespace {

std::string fixed2(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

std::string opt2(const std::optional<double>& v) { return v ? fixed2(*v) : "-"; }

// Display width in code points, so arrows count as one column.
std::size_t width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

std::string pad(std::string_view s, std::size_t w, bool right) {
  const std::size_t n = width(s);
  const std::string fill(n < w ? w - n : 0, ' ');
  return right ? fill + std::string(s) : std::string(s) + fill;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_table(const ReportTable& t) {
  std::ostringstream out;
  const std::string k = std::to_string(t.k);
  bool any_underpowered = false;
  for (TransformKind kind : kAllTransformKinds) {
    const auto it = t.instances.find(kind);
    std::vector<const EvalRow*> rows;
    for (const auto& r : t.rows) {
      if (r.kind == kind) rows.push_back(&r);
    }
    if (it == t.instances.end() && rows.empty()) continue;
    const int count = it == t.instances.end() ? 0 : it->second;
    const bool underpowered = count < kUnderpoweredThreshold;
    any_underpowered |= underpowered;
    out << to_string(kind) << " (" << count << " instances)" << (underpowered ? " †" : "")
        << "\n";
    const std::vector<std::string> header = {
        "model", "any@" + k + " orig", "trans", "change", "unbiased@" + k + " orig",
        "trans", "change", "CodeBLEU orig", "trans"};
    std::vector<std::vector<std::string>> cells{header};
    for (const auto* r : rows) {
      cells.push_back({r->model, fixed2(r->any_orig), fixed2(r->any_trans),
                       format_change(r->any_change), fixed2(r->unbiased_orig),
                       fixed2(r->unbiased_trans), format_change(r->unbiased_change),
                       opt2(r->codebleu_orig), opt2(r->codebleu_trans)});
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));
    }
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        line += pad(row[c], widths[c], c > 0);
      }
      out << "  " << line << "\n";
    }
    if (rows.empty()) out << "  (no results)\n";
    out << "\n";
  }
  if (any_underpowered) {
    out << "† fewer than " << kUnderpoweredThreshold
        << " instances: one changed prediction moves the percentage by several points, so "
           "the change is statistically underpowered.\n";
  }
  return out.str();
}

std::string render_csv(const ReportTable& t) {
  std::ostringstream out;
  out << "kind,instances,model,bugs_orig,bugs_trans,any_orig,any_trans,any_change,"
         "any_direction,unbiased_orig,unbiased_trans,unbiased_change,unbiased_direction,"
         "codebleu_orig,codebleu_trans,underpowered\n";
  for (const auto& r : t.rows) {
    const auto it = t.instances.find(r.kind);
    const int count = it == t.instances.end() ? 0 : it->second;
    auto change = [](const Change& c) {
      return c.from_zero ? std::string("n/a") : fixed2(c.percent);
    };
    out << to_string(r.kind) << "," << count << "," << csv_field(r.model) << ","
        << r.bugs_orig << "," << r.bugs_trans << "," << fixed2(r.any_orig) << ","
        << fixed2(r.any_trans) << "," << change(r.any_change) << ","
        << to_string(r.any_change.direction) << "," << fixed2(r.unbiased_orig) << ","
        << fixed2(r.unbiased_trans) << "," << change(r.unbiased_change) << ","
        << to_string(r.unbiased_change.direction) << ","
        << (r.codebleu_orig ? fixed2(*r.codebleu_orig) : "") << ","
        << (r.codebleu_trans ? fixed2(*r.codebleu_trans) : "") << ","
        << (count < kUnderpoweredThreshold ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_report(const ReportTable& table, ReportFormat format) {
  return format == ReportFormat::Csv ? render_csv(table) : render_table(table);
}

}  // namespace jrobust
