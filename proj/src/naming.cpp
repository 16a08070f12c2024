#include "jrobust/naming.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

#include "jrobust/error.hpp"
#include "jrobust/process.hpp"
#include "jrobust/transforms.hpp"

namespace jrobust {

namespace {

using json = nlohmann::json;

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Synonyms for common original spellings, best first.
const std::map<std::string, std::vector<std::string>, std::less<>>& by_name() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> m = {
      {"temp", {"count", "value", "tmp", "current"}},
      {"tmp", {"temp", "value", "current"}},
      {"count", {"total", "num", "counter", "tally"}},
      {"cnt", {"count", "total", "counter"}},
      {"counter", {"count", "total", "tally"}},
      {"sum", {"total", "acc", "result"}},
      {"total", {"sum", "acc", "result"}},
      {"result", {"res", "answer", "output", "ret"}},
      {"res", {"result", "answer", "output"}},
      {"ans", {"answer", "result", "res"}},
      {"answer", {"result", "res", "ans"}},
      {"ret", {"result", "res", "output"}},
      {"x", {"val", "value", "num", "a"}},
      {"y", {"other", "val2", "b"}},
      {"n", {"num", "size", "len", "count"}},
      {"num", {"n", "number", "value"}},
      {"number", {"num", "n", "value"}},
      {"i", {"index", "idx", "pos"}},
      {"j", {"k", "idx2", "inner"}},
      {"k", {"m", "step", "idx3"}},
      {"idx", {"index", "pos", "i"}},
      {"index", {"idx", "pos", "position"}},
      {"s", {"str", "text", "input"}},
      {"str", {"s", "text", "string1"}},
      {"string", {"str", "text", "input"}},
      {"text", {"str", "s", "content"}},
      {"word", {"token", "w", "term"}},
      {"words", {"tokens", "terms", "parts"}},
      {"c", {"ch", "character", "letter"}},
      {"ch", {"c", "character", "letter"}},
      {"arr", {"array", "values", "nums", "items"}},
      {"array", {"arr", "values", "items"}},
      {"nums", {"numbers", "arr", "values"}},
      {"numbers", {"nums", "values", "arr"}},
      {"list", {"items", "values", "lst", "elements"}},
      {"lst", {"list", "items", "values"}},
      {"l", {"list", "items", "lst"}},
      {"flag", {"found", "ok", "done", "valid"}},
      {"found", {"flag", "exists", "hit"}},
      {"res2", {"result2", "other"}},
      {"max", {"maximum", "best", "largest", "maxVal"}},
      {"min", {"minimum", "smallest", "minVal"}},
      {"len", {"length", "size", "n"}},
      {"length", {"len", "size", "n"}},
      {"size", {"len", "length", "n"}},
      {"a", {"first", "left", "x"}},
      {"b", {"second", "right", "y"}},
      {"left", {"lo", "start", "low"}},
      {"right", {"hi", "end", "high"}},
      {"lo", {"low", "left", "start"}},
      {"hi", {"high", "right", "end"}},
      {"start", {"begin", "from", "lo"}},
      {"end", {"stop", "to", "hi"}},
      {"map", {"table", "lookup", "dict"}},
      {"sb", {"builder", "buffer", "out"}},
      {"prev", {"previous", "last", "before"}},
      {"curr", {"current", "cur", "now"}},
      {"cur", {"current", "curr", "now"}},
      {"val", {"value", "v", "x"}},
      {"value", {"val", "v", "item"}},
      {"item", {"element", "elem", "entry"}},
      {"key", {"k1", "name", "id"}},
      // Methods: common verbs.
      {"compute", {"calculate", "evaluate", "solve"}},
      {"calculate", {"compute", "evaluate", "solve"}},
      {"foo", {"bar", "process", "handle"}},
      {"helper", {"aux", "assist", "util"}},
      {"check", {"verify", "validate", "test1"}},
      {"solve", {"compute", "calculate", "resolve"}},
  };
  return m;
}

// Method verb prefixes and their replacements.
const std::vector<std::pair<std::string, std::string>>& verb_synonyms() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"get", "fetch"},      {"compute", "calculate"}, {"calculate", "compute"},
      {"find", "search"},    {"is", "check"},          {"has", "contains"},
      {"count", "tally"},    {"sum", "total"},         {"make", "create"},
      {"create", "build"},   {"build", "construct"},   {"check", "verify"},
      {"convert", "transform"}, {"sort", "order"},     {"remove", "delete"},
      {"add", "append"},     {"to", "as"},             {"can", "is"},
      {"max", "largest"},    {"min", "smallest"},      {"parse", "read"},
      {"filter", "select"},  {"split", "divide"},      {"reverse", "invert"},
      {"select", "pick"},    {"encode", "encrypt"},    {"decode", "decrypt"},
      {"do", "perform"},     {"solve", "resolve"},     {"print", "show"},
  };
  return v;
}

// Role tables keyed by inferred declared type.
const std::map<std::string, std::vector<std::string>, std::less<>>& by_type() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> m = {
      {"int", {"count", "value", "num", "total", "result"}},
      {"long", {"total", "value", "num", "count"}},
      {"short", {"value", "num", "small"}},
      {"byte", {"b", "octet", "value"}},
      {"double", {"value", "amount", "ratio", "total"}},
      {"float", {"value", "amount", "ratio"}},
      {"boolean", {"flag", "found", "ok", "done", "valid"}},
      {"char", {"ch", "c", "letter", "symbol"}},
      {"String", {"str", "text", "word", "s"}},
      {"Integer", {"value", "num", "boxed"}},
      {"StringBuilder", {"sb", "builder", "buffer"}},
      {"List", {"items", "list", "values", "elements"}},
      {"ArrayList", {"items", "list", "values"}},
      {"Map", {"map", "table", "lookup"}},
      {"HashMap", {"map", "table", "lookup"}},
      {"Set", {"seen", "set", "unique"}},
      {"HashSet", {"seen", "set", "unique"}},
      {"Object", {"obj", "o", "item"}},
      {"[]", {"arr", "values", "items", "array"}},
  };
  return m;
}

const std::vector<std::string> kLoopNames = {"i", "j", "k", "idx", "index", "pos"};
const std::vector<std::string> kGeneric = {"value", "item", "data", "elem", "var1"};
const std::vector<std::string> kGenericMethods = {"process", "handle", "run1",
                                                  "compute", "evaluate"};

struct Role {
  std::string type;  // "[]" for arrays, base name for generics
  bool loop = false;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// Reads the declared type immediately preceding the first mask.
Role infer_role(std::string_view context) {
  Role role;
  const auto mask = context.find(kMaskToken);
  if (mask == std::string_view::npos) return role;
  std::string_view before = context.substr(0, mask);
  auto rstrip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  };
  before = rstrip(before);
  if (before.ends_with("]")) {
    role.type = "[]";
    while (!before.empty() && (before.back() == ']' || before.back() == '[' ||
                               std::isspace(static_cast<unsigned char>(before.back())))) {
      before.remove_suffix(1);
    }
  }
  if (before.ends_with(">")) {
    int depth = 0;
    while (!before.empty()) {
      const char c = before.back();
      before.remove_suffix(1);
      if (c == '>') ++depth;
      if (c == '<' && --depth == 0) break;
    }
    before = rstrip(before);
  }
  std::size_t i = before.size();
  while (i > 0 && ident_char(before[i - 1])) --i;
  if (role.type.empty()) role.type = std::string(before.substr(i));
  std::string_view head = rstrip(before.substr(0, i));
  // `final int x` and similar.
  while (head.ends_with("final")) head = rstrip(head.substr(0, head.size() - 5));
  if (head.ends_with("(")) {
    head = rstrip(head.substr(0, head.size() - 1));
    role.loop = head.ends_with("for");
  }
  return role;
}

std::vector<std::string> split_camel(std::string_view name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (std::isupper(static_cast<unsigned char>(c)) && !cur.empty()) {
      parts.push_back(cur);
      cur.clear();
    }
    cur.push_back(c);
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<std::string> method_variants(std::string_view name) {
  std::vector<std::string> out;
  auto parts = split_camel(name);
  if (parts.empty()) return out;
  std::string head = parts.front();
  std::transform(head.begin(), head.end(), head.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::string tail;
  for (std::size_t i = 1; i < parts.size(); ++i) tail += parts[i];
  for (const auto& [verb, synonym] : verb_synonyms()) {
    if (head == verb) out.push_back(synonym + tail);
  }
  if (!tail.empty()) {
    std::string t = tail;
    t[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(t[0])));
    out.push_back("compute" + tail);
    out.push_back(t);
  } else {
    std::string cap(name);
    cap[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(cap[0])));
    out.push_back("do" + cap);
    out.push_back(std::string(name) + "Impl");
  }
  return out;
}

// Rotates a synonym list by a hash of the request so different programs do
// not all get the same spelling.
std::vector<std::string> rotated(const std::vector<std::string>& v,
                                 std::uint64_t h) {
  if (v.empty()) return v;
  std::vector<std::string> out(v.size());
  const std::size_t shift = h % v.size();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + shift) % v.size()];
  return out;
}

}  // namespace

std::vector<NameCandidate> BuiltinNamingProvider::suggest(const NamingRequest& request) {
  std::vector<std::string> names;
  auto add = [&](const std::vector<std::string>& v) {
    names.insert(names.end(), v.begin(), v.end());
  };
  const Role role = infer_role(request.masked_context);
  const std::uint64_t h =
      fnv1a(request.original_name + "\x1f" + std::string(to_string(request.kind)) +
            "\x1f" + role.type);

  if (request.kind == DeclKind::Method) {
    if (auto it = by_name().find(request.original_name); it != by_name().end()) {
      add(it->second);
    }
    add(method_variants(request.original_name));
    add(rotated(kGenericMethods, h));
  } else {
    if (auto it = by_name().find(request.original_name); it != by_name().end()) {
      add(it->second);
    }
    if (role.loop) add(kLoopNames);
    if (auto it = by_type().find(role.type); it != by_type().end()) {
      add(rotated(it->second, h));
    }
    add(rotated(kGeneric, h));
  }

  std::vector<NameCandidate> out;
  double score = 0.95;
  for (const auto& n : names) {
    out.push_back({n, std::max(score, 0.05)});
    score -= 0.05;
  }
  return out;
}

class ExternalNamingProvider::Worker {
 public:
  explicit Worker(const std::string& command)
      : process({"/bin/sh", "-c", command}) {}
  LineProcess process;
};

ExternalNamingProvider::ExternalNamingProvider(std::string command,
                                               std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {
  if (command_.empty()) throw ContractViolation("empty naming provider command");
}

ExternalNamingProvider::~ExternalNamingProvider() = default;

std::unique_ptr<ExternalNamingProvider::Worker> ExternalNamingProvider::acquire() {
  {
    std::lock_guard lock(mutex_);
    if (!idle_.empty()) {
      auto w = std::move(idle_.back());
      idle_.pop_back();
      return w;
    }
  }
  try {
    return std::make_unique<Worker>(command_);
  } catch (const InfrastructureError& e) {
    throw ProviderError(std::string("naming provider: ") + e.what());
  }
}

void ExternalNamingProvider::release(std::unique_ptr<Worker> worker) {
  if (!worker || !worker->process.alive()) return;
  std::lock_guard lock(mutex_);
  idle_.push_back(std::move(worker));
}

std::vector<NameCandidate> ExternalNamingProvider::suggest(const NamingRequest& request) {
  auto worker = acquire();
  const auto reply = worker->process.request(encode_request(request), timeout_);
  if (!reply) {
    throw ProviderError("naming provider gave no reply within " +
                        std::to_string(timeout_.count()) + " ms");
  }
  // On a malformed reply the worker is dropped with the exception, since a
  // confused child may be out of sync.
  std::vector<NameCandidate> out = decode_response(*reply);
  release(std::move(worker));
  return out;
}

NamingRequest make_naming_request(const SourceText& text, const ScopeTable& table,
                                  const Declaration& decl, int k) {
  if (k < 1) throw ContractViolation("k must be at least 1");
  NamingRequest req;
  req.original_name = decl.name;
  req.kind = decl.kind;
  req.k = k;
  std::string out;
  std::size_t pos = 0;
  for (const Occurrence& o : table.occurrences(decl)) {
    out.append(text.view().substr(pos, o.span.start_byte - pos));
    out.append(kMaskToken);
    pos = o.span.end_byte;
  }
  out.append(text.view().substr(pos));
  req.masked_context = std::move(out);
  return req;
}

std::string encode_request(const NamingRequest& request) {
  json j;
  j["v"] = kNamingProtocolVersion;
  j["context"] = request.masked_context;
  j["original"] = request.original_name;
  j["kind"] = std::string(to_string(request.kind));
  j["k"] = request.k;
  return j.dump();
}

std::vector<NameCandidate> decode_response(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ProviderError(std::string("malformed provider reply: ") + e.what());
  }
  if (!j.is_object() || !j.contains("v") || j["v"] != kNamingProtocolVersion) {
    throw ProviderError("provider reply has a missing or unsupported version");
  }
  if (!j.contains("candidates") || !j["candidates"].is_array()) {
    throw ProviderError("provider reply lacks a candidates list");
  }
  std::vector<NameCandidate> out;
  for (const auto& c : j["candidates"]) {
    if (!c.is_object() || !c.contains("name") || !c["name"].is_string() ||
        !c.contains("score") || !c["score"].is_number()) {
      throw ProviderError("provider candidate needs a string name and numeric score");
    }
    out.push_back({c["name"].get<std::string>(), c["score"].get<double>()});
  }
  return out;
}

std::vector<NameCandidate> suggest_names(const NamingRequest& request,
                                         NamingProvider& provider) {
  if (request.k < 1) throw ContractViolation("k must be at least 1");
  if (request.masked_context.find(kMaskToken) == std::string::npos) {
    throw ContractViolation("naming context has no mask token");
  }
  std::vector<NameCandidate> raw = provider.suggest(request);
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.score > b.score;
  });
  std::vector<NameCandidate> out;
  std::set<std::string, std::less<>> seen;
  for (auto& c : raw) {
    if (c.name == request.original_name || !is_valid_identifier(c.name)) continue;
    if (!(c.score >= 0.0 && c.score <= 1.0)) continue;
    if (!seen.insert(c.name).second) continue;
    out.push_back(std::move(c));
    if (static_cast<int>(out.size()) == request.k) break;
  }
  return out;
}

std::string select_name(const std::vector<NameCandidate>& candidates,
                        const std::set<std::string, std::less<>>& visible) {
  if (candidates.empty()) throw ContractViolation("no naming candidates");
  const NameCandidate* best = nullptr;
  for (const auto& c : candidates) {
    if (visible.contains(c.name)) continue;
    if (!best || c.score > best->score) best = &c;
  }
  if (best) return best->name;
  const NameCandidate* top = &candidates.front();
  for (const auto& c : candidates) {
    if (c.score > top->score) top = &c;
  }
  for (int i = 2;; ++i) {
    std::string name = top->name + std::to_string(i);
    if (!visible.contains(name)) return name;
  }
}

}  // namespace jrobust
