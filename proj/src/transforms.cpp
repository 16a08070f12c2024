#include "jrobust/transforms.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "jrobust/error.hpp"

namespace jrobust {

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::LocalVarRename:
      return "LocalVarRename";
    case TransformKind::MethodRename:
      return "MethodRename";
    case TransformKind::ParamRename:
      return "ParamRename";
    case TransformKind::InsertLog:
      return "InsertLog";
    case TransformKind::InsertTryCatch:
      return "InsertTryCatch";
    case TransformKind::BooleanExchange:
      return "BooleanExchange";
    case TransformKind::LoopExchange:
      return "LoopExchange";
    case TransformKind::ReorderCondition:
      return "ReorderCondition";
  }
  return "?";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  for (TransformKind k : kAllTransformKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool is_rename(TransformKind kind) {
  return kind == TransformKind::LocalVarRename ||
         kind == TransformKind::MethodRename ||
         kind == TransformKind::ParamRename;
}

DeclKind rename_target(TransformKind kind) {
  switch (kind) {
    case TransformKind::LocalVarRename:
      return DeclKind::LocalVariable;
    case TransformKind::MethodRename:
      return DeclKind::Method;
    case TransformKind::ParamRename:
      return DeclKind::Parameter;
    default:
      throw ContractViolation(std::string(to_string(kind)) +
                              " is not a rename transformation");
  }
}

Program Program::parse(SourceText text) {
  SyntaxTree tree = parse_source(text);
  if (tree.has_error()) throw InputError("program does not parse cleanly");
  ScopeTable scopes = resolve_scopes(tree, text);
  return Program{std::move(text), std::move(tree), std::move(scopes)};
}

std::string Program::primary_class_name() const {
  for (NodeId c : tree.named_children(tree.root())) {
    const std::string_view k = tree.node(c).kind;
    if (k == "class_declaration" || k == "interface_declaration" ||
        k == "enum_declaration" || k == "record_declaration") {
      const NodeId name = tree.child_by_field(c, "name");
      if (name != kNoNode) return std::string(text.slice(tree.node(name).span));
    }
  }
  return {};
}

bool is_java_keyword(std::string_view word) {
  static const std::set<std::string_view> kKeywords = {
      "abstract",   "assert",       "boolean",   "break",      "byte",
      "case",       "catch",        "char",      "class",      "const",
      "continue",   "default",      "do",        "double",     "else",
      "enum",       "extends",      "final",     "finally",    "float",
      "for",        "goto",         "if",        "implements", "import",
      "instanceof", "int",          "interface", "long",       "native",
      "new",        "package",      "private",   "protected",  "public",
      "return",     "short",        "static",    "strictfp",   "super",
      "switch",     "synchronized", "this",      "throw",      "throws",
      "transient",  "try",          "void",      "volatile",   "while",
      "true",       "false",        "null",      "var",        "yield",
      "record",     "sealed",       "permits",   "non-sealed", "_"};
  return kKeywords.contains(word);
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || is_java_keyword(name)) return false;
  auto start = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
           c == '$';
  };
  auto part = [&](char c) { return start(c) || (c >= '0' && c <= '9'); };
  if (!start(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), part);
}

namespace {

// ---------------------------------------------------------------------------
// Shared helpers

std::string_view text_of(const Program& p, NodeId n) {
  return p.text.slice(p.tree.node(n).span);
}

bool has_annotation(const SyntaxTree& tree, const SourceText& text,
                    NodeId decl, std::string_view name) {
  const NodeId mods = tree.child_of_kind(decl, "modifiers");
  if (mods == kNoNode) return false;
  for (NodeId c : tree.node(mods).children) {
    const auto& k = tree.node(c).kind;
    if (k != "marker_annotation" && k != "annotation") continue;
    const NodeId n = tree.child_by_field(c, "name");
    if (n != kNoNode && text.slice(tree.node(n).span) == name) return true;
  }
  return false;
}

bool has_modifier(const SyntaxTree& tree, NodeId decl, std::string_view word) {
  const NodeId mods = tree.child_of_kind(decl, "modifiers");
  if (mods == kNoNode) return false;
  for (NodeId c : tree.node(mods).children) {
    if (tree.node(c).kind == word) return true;
  }
  return false;
}

TransformResult finish(const Program& program, std::vector<Edit> edits,
                       const TransformSite& site, std::uint64_t seed = 0) {
  EditOutcome out = apply_edits(program.text, edits);
  TransformResult r;
  r.output = std::move(out.text);
  r.line_map = std::move(out.line_map);
  r.edits = std::move(edits);
  r.provenance.kind = site.kind;
  r.provenance.site_id = site.site_id;
  r.provenance.seed = seed;
  r.provenance.detail = site.detail;
  return r;
}

void require_kind(const TransformSite& site, TransformKind kind) {
  if (site.kind != kind) {
    throw ContractViolation("site of kind " + std::string(to_string(site.kind)) +
                            " passed to " + std::string(to_string(kind)));
  }
}

NodeId require_node(const Program& program, const TransformSite& site,
                    std::string_view kind) {
  if (site.node == kNoNode || site.node >= program.tree.size() ||
      program.tree.node(site.node).kind != kind ||
      program.tree.node(site.node).span != site.anchor) {
    throw ApplicabilityError("site does not anchor a " + std::string(kind) +
                             " in this program");
  }
  return site.node;
}

// First and last direct children that are the given tokens.
NodeId first_token(const SyntaxTree& tree, NodeId n, std::string_view tok) {
  for (NodeId c : tree.node(n).children) {
    if (tree.node(c).kind == tok && !tree.node(c).named) return c;
  }
  return kNoNode;
}
NodeId last_token(const SyntaxTree& tree, NodeId n, std::string_view tok) {
  const auto& kids = tree.node(n).children;
  for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
    if (tree.node(*it).kind == tok && !tree.node(*it).named) return *it;
  }
  return kNoNode;
}

std::string leading_whitespace(std::string_view line) {
  const auto n = line.find_first_not_of(" \t");
  return std::string(line.substr(0, n == std::string_view::npos ? line.size() : n));
}

// ---------------------------------------------------------------------------
// Renames

bool renamable(const Program& p, const Declaration& d, TransformKind kind) {
  switch (kind) {
    case TransformKind::LocalVarRename:
      return d.kind == DeclKind::LocalVariable &&
             (d.origin == DeclOrigin::LocalDeclaration ||
              d.origin == DeclOrigin::ForEachVariable);
    case TransformKind::ParamRename:
      return d.kind == DeclKind::Parameter &&
             (d.origin == DeclOrigin::MethodParameter ||
              d.origin == DeclOrigin::ConstructorParameter);
    case TransformKind::MethodRename: {
      if (d.kind != DeclKind::Method || d.overloaded) return false;
      // Entry points, overrides, and interface contracts keep their names.
      if (d.name == "main" || d.name == "toString" || d.name == "equals" ||
          d.name == "hashCode" || d.name == "compareTo" ||
          d.name == "compare" || d.name == "run" || d.name == "call" ||
          d.name == "apply" || d.name == "accept" || d.name == "test" ||
          d.name == "get" || d.name == "iterator" || d.name == "close") {
        return false;
      }
      if (has_annotation(p.tree, p.text, d.decl_node, "Override")) return false;
      if (has_modifier(p.tree, d.decl_node, "abstract")) return false;
      // Only methods of named classes; anonymous-class members implement
      // some supertype's contract.
      const NodeId body = p.tree.parent(d.decl_node);
      if (body == kNoNode || p.tree.node(body).kind != "class_body") return false;
      const NodeId owner = p.tree.parent(body);
      return owner != kNoNode && p.tree.node(owner).kind == "class_declaration";
    }
    default:
      return false;
  }
}

std::vector<TransformSite> rename_sites(const Program& p, TransformKind kind) {
  std::vector<TransformSite> out;
  for (const Declaration* d : p.scopes.of_kind(rename_target(kind))) {
    if (!renamable(p, *d, kind)) continue;
    TransformSite s;
    s.kind = kind;
    s.anchor = d->decl_span;
    s.node = d->name_node;
    s.decl_id = d->id;
    s.decl_name = d->name;
    s.detail = std::string(to_string(d->kind));
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// InsertLog

std::vector<TransformSite> log_sites(const Program& p) {
  std::vector<TransformSite> out;
  for (NodeId n = 0; n < p.tree.size(); ++n) {
    const SyntaxNode& node = p.tree.node(n);
    if (node.kind != "method_declaration") continue;
    const NodeId body = p.tree.child_by_field(n, "body");
    if (body == kNoNode || p.tree.node(body).kind != "block") continue;
    TransformSite s;
    s.kind = TransformKind::InsertLog;
    s.anchor = node.span;
    s.node = n;
    const NodeId name = p.tree.child_by_field(n, "name");
    if (name != kNoNode) s.decl_name = std::string(text_of(p, name));
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// InsertTryCatch

bool is_block_like(std::string_view kind) {
  return kind == "block" || kind == "constructor_body" ||
         kind == "switch_block_statement_group";
}

// Declaration ids of locals declared by `stmt` (a local_variable_declaration).
std::vector<int> declared_here(const Program& p, NodeId stmt) {
  std::vector<int> ids;
  for (const Declaration& d : p.scopes.declarations()) {
    if (d.kind == DeclKind::LocalVariable && d.decl_node != kNoNode &&
        p.tree.parent(d.decl_node) == stmt) {
      ids.push_back(d.id);
    }
  }
  return ids;
}

bool try_catch_applicable(const Program& p, NodeId stmt) {
  const SyntaxNode& node = p.tree.node(stmt);
  if (node.kind == "local_variable_declaration") {
    // Every use of the declared variables must stay inside the try block.
    for (int id : declared_here(p, stmt)) {
      for (const Occurrence& o : p.scopes.occurrences(p.scopes.declaration(id))) {
        if (!node.span.contains(o.span)) return false;
      }
    }
    return true;
  }
  if (node.kind != "expression_statement") return false;
  // Assigning a local that has no initializer would break definite
  // assignment once the write may be skipped.
  for (const Declaration& d : p.scopes.declarations()) {
    if (d.kind != DeclKind::LocalVariable ||
        d.origin != DeclOrigin::LocalDeclaration) {
      continue;
    }
    if (p.tree.child_by_field(d.decl_node, "value") != kNoNode) continue;
    for (const Occurrence& o : p.scopes.occurrences(d)) {
      if (o.role != OccurrenceRole::Declaration && o.role != OccurrenceRole::Read &&
          node.span.contains(o.span)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<TransformSite> try_catch_sites(const Program& p) {
  std::vector<TransformSite> out;
  for (NodeId n = 0; n < p.tree.size(); ++n) {
    const SyntaxNode& node = p.tree.node(n);
    if (node.parent == kNoNode || !is_block_like(p.tree.node(node.parent).kind)) {
      continue;
    }
    if (!try_catch_applicable(p, n)) continue;
    TransformSite s;
    s.kind = TransformKind::InsertTryCatch;
    s.anchor = node.span;
    s.node = n;
    s.detail = node.kind;
    out.push_back(std::move(s));
  }
  return out;
}

std::string fresh_catch_name(const Program& p) {
  const auto& names = p.scopes.all_names();
  auto taken = [&](const std::string& n) {
    return std::binary_search(names.begin(), names.end(), n);
  };
  if (!taken("e")) return "e";
  for (int i = 2;; ++i) {
    std::string candidate = "e" + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------------------
// BooleanExchange

std::vector<TransformSite> boolean_sites(const Program& p) {
  std::vector<TransformSite> out;
  for (const Declaration* d : p.scopes.of_kind(DeclKind::LocalVariable)) {
    if (d->origin != DeclOrigin::LocalDeclaration) continue;
    const NodeId declarator = d->decl_node;
    const NodeId decl = p.tree.parent(declarator);
    const NodeId type = p.tree.child_by_field(decl, "type");
    if (type == kNoNode || p.tree.node(type).kind != "boolean_type") continue;
    if (p.tree.child_by_field(declarator, "dimensions") != kNoNode) continue;
    const NodeId value = p.tree.child_by_field(declarator, "value");
    if (value == kNoNode) continue;
    const std::string_view vk = p.tree.node(value).kind;
    if (vk != "true" && vk != "false") continue;
    bool ok = true;
    for (const Occurrence& o : p.scopes.occurrences(*d)) {
      if (o.role == OccurrenceRole::CompoundWrite ||
          o.role == OccurrenceRole::Update) {
        ok = false;
      }
    }
    if (!ok) continue;
    TransformSite s;
    s.kind = TransformKind::BooleanExchange;
    s.anchor = p.tree.node(declarator).span;
    s.node = declarator;
    s.decl_id = d->id;
    s.decl_name = d->name;
    s.detail = std::string(vk);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// LoopExchange

bool contains_kind(const SyntaxTree& tree, NodeId n, std::string_view kind) {
  for (NodeId d : tree.descendants(n)) {
    if (tree.node(d).kind == kind) return true;
  }
  return false;
}

bool is_true_literal(const SyntaxTree& tree, NodeId cond) {
  while (cond != kNoNode && tree.node(cond).kind == "parenthesized_expression") {
    const auto kids = tree.named_children(cond);
    cond = kids.empty() ? kNoNode : kids.front();
  }
  return cond != kNoNode && tree.node(cond).kind == "true";
}

// Conservative syntactic approximation of "cannot complete normally": true
// only for statement shapes that definitely never fall through.
bool never_completes(const SyntaxTree& tree, NodeId stmt) {
  const SyntaxNode& s = tree.node(stmt);
  const std::string_view k = s.kind;
  if (k == "return_statement" || k == "throw_statement" ||
      k == "break_statement" || k == "continue_statement" ||
      k == "yield_statement") {
    return true;
  }
  if (k == "block") {
    const auto kids = tree.named_children(stmt);
    return std::any_of(kids.begin(), kids.end(),
                       [&](NodeId c) { return never_completes(tree, c); });
  }
  if (k == "if_statement") {
    const NodeId cons = tree.child_by_field(stmt, "consequence");
    const NodeId alt = tree.child_by_field(stmt, "alternative");
    return cons != kNoNode && alt != kNoNode && never_completes(tree, cons) &&
           never_completes(tree, alt);
  }
  if (k == "while_statement" || k == "for_statement" || k == "do_statement") {
    const NodeId cond = tree.child_by_field(stmt, "condition");
    const bool infinite = (k == "for_statement" && cond == kNoNode) ||
                          (cond != kNoNode && is_true_literal(tree, cond));
    return infinite && !contains_kind(tree, stmt, "break_statement");
  }
  if (k == "try_statement") {
    const NodeId body = tree.child_by_field(stmt, "body");
    if (body == kNoNode || !never_completes(tree, body)) return false;
    for (NodeId c : tree.named_children(stmt)) {
      if (tree.node(c).kind == "catch_clause") {
        const NodeId cb = tree.child_by_field(c, "body");
        if (cb == kNoNode || !never_completes(tree, cb)) return false;
      }
    }
    return true;
  }
  if (k == "labeled_statement" || k == "synchronized_statement") {
    const auto kids = tree.named_children(stmt);
    return !kids.empty() && never_completes(tree, kids.back()) &&
           !contains_kind(tree, stmt, "break_statement");
  }
  if (k == "switch_expression" || k == "expression_statement") return false;
  return false;
}

std::vector<TransformSite> loop_sites(const Program& p) {
  std::vector<TransformSite> out;
  for (NodeId n = 0; n < p.tree.size(); ++n) {
    const SyntaxNode& node = p.tree.node(n);
    TransformSite s;
    s.kind = TransformKind::LoopExchange;
    s.anchor = node.span;
    s.node = n;
    if (node.kind == "for_statement") {
      const NodeId body = p.tree.child_by_field(n, "body");
      if (body == kNoNode || contains_kind(p.tree, body, "continue_statement")) {
        continue;
      }
      if (p.tree.children_by_field(n, "init").empty() ||
          p.tree.child_by_field(n, "condition") == kNoNode ||
          p.tree.children_by_field(n, "update").empty()) {
        continue;
      }
      if (never_completes(p.tree, body)) continue;
      s.detail = "for-to-while";
    } else if (node.kind == "while_statement") {
      s.detail = "while-to-for";
    } else {
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// ReorderCondition

bool is_literal_kind(std::string_view k) {
  return k == "decimal_integer_literal" || k == "hex_integer_literal" ||
         k == "octal_integer_literal" || k == "binary_integer_literal" ||
         k == "decimal_floating_point_literal" ||
         k == "hex_floating_point_literal" || k == "true" || k == "false" ||
         k == "character_literal" || k == "string_literal" ||
         k == "null_literal" || k == "text_block";
}

// Whitelisted operand forms that cannot write state: identifiers, literals,
// `this`, field and array reads, and operator compositions of those.
bool side_effect_free(const SyntaxTree& tree, NodeId n) {
  const SyntaxNode& node = tree.node(n);
  const std::string_view k = node.kind;
  if (k == "identifier" || k == "this" || is_literal_kind(k)) return true;
  if (k == "field_access") {
    const NodeId object = tree.child_by_field(n, "object");
    if (object == kNoNode) return false;
    const std::string_view ok = tree.node(object).kind;
    return ok == "super" || side_effect_free(tree, object);
  }
  if (k == "array_access") {
    const NodeId array = tree.child_by_field(n, "array");
    const NodeId index = tree.child_by_field(n, "index");
    return array != kNoNode && index != kNoNode &&
           side_effect_free(tree, array) && side_effect_free(tree, index);
  }
  if (k == "parenthesized_expression") {
    const auto kids = tree.named_children(n);
    return kids.size() == 1 && side_effect_free(tree, kids.front());
  }
  if (k == "unary_expression") {
    const NodeId operand = tree.child_by_field(n, "operand");
    return operand != kNoNode && side_effect_free(tree, operand);
  }
  if (k == "binary_expression") {
    const NodeId l = tree.child_by_field(n, "left");
    const NodeId r = tree.child_by_field(n, "right");
    return l != kNoNode && r != kNoNode && side_effect_free(tree, l) &&
           side_effect_free(tree, r);
  }
  return false;
}

// Whether evaluating a side-effect-free operand may throw. Swapping two
// operands is only unobservable when at most one of them can.
bool may_throw(const SyntaxTree& tree, NodeId n) {
  for (NodeId d : tree.descendants(n)) {
    const SyntaxNode& node = tree.node(d);
    if (node.kind == "array_access") return true;
    if (node.kind == "field_access") {
      const NodeId object = tree.child_by_field(d, "object");
      const std::string_view ok = tree.node(object).kind;
      if (ok != "this" && ok != "super") return true;
    }
    if (node.kind == "binary_expression") {
      const std::string_view o =
          tree.node(tree.child_by_field(d, "operator")).kind;
      if (o == "/" || o == "%") return true;
    }
  }
  return false;
}

bool swappable(const SyntaxTree& tree, NodeId l, NodeId r) {
  return side_effect_free(tree, l) && side_effect_free(tree, r) &&
         !(may_throw(tree, l) && may_throw(tree, r));
}

// Operand forms that bind at most as loosely as `==` must be parenthesized
// to survive a textual swap.
bool binds_tighter_than_equality(const SyntaxTree& tree, NodeId n) {
  const SyntaxNode& node = tree.node(n);
  if (node.kind == "binary_expression") {
    const NodeId op = tree.child_by_field(n, "operator");
    const std::string_view o = tree.node(op).kind;
    return !(o == "==" || o == "!=" || o == "&" || o == "^" || o == "|" ||
             o == "&&" || o == "||");
  }
  return node.kind != "ternary_expression" &&
         node.kind != "assignment_expression" &&
         node.kind != "lambda_expression";
}

std::vector<TransformSite> condition_sites(const Program& p) {
  std::vector<TransformSite> out;
  for (NodeId n = 0; n < p.tree.size(); ++n) {
    const SyntaxNode& node = p.tree.node(n);
    if (node.kind != "binary_expression") continue;
    const NodeId op = p.tree.child_by_field(n, "operator");
    if (op == kNoNode) continue;
    const std::string_view o = p.tree.node(op).kind;
    if (o != "==" && o != "!=") continue;
    const NodeId l = p.tree.child_by_field(n, "left");
    const NodeId r = p.tree.child_by_field(n, "right");
    if (l == kNoNode || r == kNoNode) continue;
    if (!swappable(p.tree, l, r)) continue;
    if (!binds_tighter_than_equality(p.tree, l) ||
        !binds_tighter_than_equality(p.tree, r)) {
      continue;
    }
    TransformSite s;
    s.kind = TransformKind::ReorderCondition;
    s.anchor = node.span;
    s.node = n;
    s.detail = std::string(o);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Public operations

std::vector<TransformSite> enumerate_sites(const Program& program,
                                           TransformKind kind) {
  std::vector<TransformSite> sites;
  switch (kind) {
    case TransformKind::LocalVarRename:
    case TransformKind::MethodRename:
    case TransformKind::ParamRename:
      sites = rename_sites(program, kind);
      break;
    case TransformKind::InsertLog:
      sites = log_sites(program);
      break;
    case TransformKind::InsertTryCatch:
      sites = try_catch_sites(program);
      break;
    case TransformKind::BooleanExchange:
      sites = boolean_sites(program);
      break;
    case TransformKind::LoopExchange:
      sites = loop_sites(program);
      break;
    case TransformKind::ReorderCondition:
      sites = condition_sites(program);
      break;
  }
  std::stable_sort(sites.begin(), sites.end(), [](const auto& a, const auto& b) {
    return a.anchor.start_byte < b.anchor.start_byte;
  });
  for (std::size_t i = 0; i < sites.size(); ++i) {
    sites[i].site_id = static_cast<int>(i);
  }
  return sites;
}

std::vector<TransformSite> enumerate_sites(const SourceText& program,
                                           const SyntaxTree& tree,
                                           const ScopeTable& table,
                                           TransformKind kind) {
  if (tree.has_error()) {
    throw ContractViolation("enumerate_sites requires an error-free tree");
  }
  // The helpers work on a Program view; copies are cheap at function scale.
  const Program p{program, tree, table};
  return enumerate_sites(p, kind);
}

TransformResult rename_identifier(const Program& program,
                                  const TransformSite& site,
                                  std::string_view new_name) {
  if (!is_rename(site.kind)) {
    throw ContractViolation("rename_identifier needs a rename site");
  }
  const Declaration& decl = program.scopes.declaration(site.decl_id);
  if (decl.name != site.decl_name || decl.decl_span != site.anchor) {
    throw ApplicabilityError("site does not match a declaration in this program");
  }
  if (!is_valid_identifier(new_name)) {
    throw ContractViolation("'" + std::string(new_name) +
                            "' is not a valid Java identifier");
  }
  if (new_name == decl.name) {
    throw ContractViolation("new name equals the old name");
  }
  const auto& names = program.scopes.all_names();
  if (std::binary_search(names.begin(), names.end(), std::string(new_name))) {
    throw ApplicabilityError("'" + std::string(new_name) +
                             "' collides with a name in the program");
  }
  std::vector<Edit> edits;
  for (const Occurrence& o : program.scopes.occurrences(decl)) {
    edits.push_back(Edit{o.span, std::string(new_name)});
  }
  TransformResult r = finish(program, std::move(edits), site);
  r.provenance.naming = NamingInfo{decl.name, std::string(new_name), ""};
  return r;
}

TransformResult rename_qualified_calls(const Program& client,
                                       std::string_view class_name,
                                       std::string_view old_name,
                                       std::string_view new_name) {
  std::vector<Edit> edits;
  const SyntaxTree& t = client.tree;
  auto is_class_ref = [&](NodeId q) {
    if (q == kNoNode) return false;
    const std::string_view k = t.node(q).kind;
    return (k == "identifier" || k == "type_identifier") &&
           text_of(client, q) == class_name;
  };
  for (NodeId n = 0; n < t.size(); ++n) {
    const SyntaxNode& node = t.node(n);
    if (node.kind == "method_invocation") {
      const NodeId name = t.child_by_field(n, "name");
      if (name != kNoNode && text_of(client, name) == old_name &&
          is_class_ref(t.child_by_field(n, "object"))) {
        edits.push_back(Edit{t.node(name).span, std::string(new_name)});
      }
    } else if (node.kind == "method_reference" && !node.children.empty() &&
               is_class_ref(node.children.front())) {
      const NodeId name = node.children.back();
      if (t.node(name).kind == "identifier" && text_of(client, name) == old_name) {
        edits.push_back(Edit{t.node(name).span, std::string(new_name)});
      }
    }
  }
  TransformSite site;
  site.kind = TransformKind::MethodRename;
  TransformResult r = finish(client, std::move(edits), site);
  r.provenance.naming =
      NamingInfo{std::string(old_name), std::string(new_name), ""};
  return r;
}

TransformResult insert_log_statement(const Program& program,
                                     const TransformSite& site) {
  require_kind(site, TransformKind::InsertLog);
  const NodeId method = require_node(program, site, "method_declaration");
  const SyntaxTree& t = program.tree;
  const SourceText& text = program.text;
  const NodeId body = t.child_by_field(method, "body");
  if (body == kNoNode || t.node(body).kind != "block") {
    throw ApplicabilityError("method has no block body");
  }
  const NodeId open = first_token(t, body, "{");
  const NodeId close = last_token(t, body, "}");
  if (open == kNoNode || close == kNoNode) {
    throw ApplicabilityError("malformed method body");
  }
  const auto stmts = t.named_children(body);
  const Span open_span = t.node(open).span;
  const int open_line = open_span.start_line;
  // Whole-line insertion when nothing but trivia follows `{` on its line.
  const std::size_t line_end = text.line_end(open_line);
  std::string_view rest = text.slice(open_span.end_byte, line_end);
  rest = trim(rest);
  const bool clean_break =
      (rest.empty() || rest.starts_with("//")) && open_line < text.line_count();

  std::vector<Edit> edits;
  if (clean_break) {
    std::string indent;
    const int next_line = open_line + 1;
    if (!stmts.empty() && t.node(stmts.front()).span.start_line > open_line) {
      indent = leading_whitespace(text.line_text(t.node(stmts.front()).span.start_line));
    } else {
      indent = leading_whitespace(text.line_text(open_line)) + "    ";
      if (t.node(close).span.start_line > open_line) {
        indent = leading_whitespace(text.line_text(t.node(close).span.start_line)) +
                 "    ";
      }
    }
    edits.push_back(Edit::insert(text, text.line_start(next_line),
                                 indent + std::string(kLogStatement) + "\n"));
  } else {
    std::string ins = " " + std::string(kLogStatement);
    if (stmts.empty() && t.node(close).span.start_byte == open_span.end_byte) {
      ins += " ";
    }
    edits.push_back(Edit::insert(text, open_span.end_byte, std::move(ins)));
  }
  return finish(program, std::move(edits), site);
}

TransformResult insert_try_catch(const Program& program,
                                 const TransformSite& site,
                                 std::uint64_t rng_seed) {
  require_kind(site, TransformKind::InsertTryCatch);
  if (site.node == kNoNode || site.node >= program.tree.size() ||
      program.tree.node(site.node).span != site.anchor) {
    throw ApplicabilityError("site does not anchor a statement in this program");
  }
  if (!try_catch_applicable(program, site.node)) {
    throw ApplicabilityError("statement cannot be wrapped in try-catch");
  }
  const Span s = site.anchor;
  const std::string param = fresh_catch_name(program);
  std::vector<Edit> edits;
  edits.push_back(Edit::insert(program.text, s.start_byte, "try { "));
  edits.push_back(Edit::insert(program.text, s.end_byte,
                               " } catch (Exception " + param + ") {}"));
  return finish(program, std::move(edits), site, rng_seed);
}

TransformResult exchange_boolean(const Program& program,
                                 const TransformSite& site) {
  require_kind(site, TransformKind::BooleanExchange);
  const NodeId declarator = require_node(program, site, "variable_declarator");
  const SyntaxTree& t = program.tree;
  const NodeId value = t.child_by_field(declarator, "value");
  if (value == kNoNode ||
      (t.node(value).kind != "true" && t.node(value).kind != "false")) {
    throw ApplicabilityError("boolean initializer is not a literal");
  }
  const Declaration& decl = program.scopes.declaration(site.decl_id);
  std::vector<Edit> edits;
  edits.push_back(Edit{t.node(value).span,
                       t.node(value).kind == "true" ? "false" : "true"});
  for (const Occurrence& o : program.scopes.occurrences(decl)) {
    switch (o.role) {
      case OccurrenceRole::Declaration:
        break;
      case OccurrenceRole::Read:
        edits.push_back(Edit{o.span, "!(" + decl.name + ")"});
        break;
      case OccurrenceRole::Write: {
        NodeId assign = t.parent(o.node);
        while (assign != kNoNode && t.node(assign).kind != "assignment_expression") {
          assign = t.parent(assign);
        }
        const NodeId rhs = assign == kNoNode ? kNoNode : t.child_by_field(assign, "right");
        if (rhs == kNoNode) throw ApplicabilityError("unrecognized assignment");
        edits.push_back(Edit::insert(program.text, t.node(rhs).span.start_byte, "!("));
        edits.push_back(Edit::insert(program.text, t.node(rhs).span.end_byte, ")"));
        break;
      }
      case OccurrenceRole::CompoundWrite:
      case OccurrenceRole::Update:
        throw ApplicabilityError("compound update of the boolean variable");
    }
  }
  // Reads inside an assignment's right-hand side share its start offset;
  // the wrapping "!(" must come first.
  std::stable_sort(edits.begin(), edits.end(), [](const Edit& a, const Edit& b) {
    if (a.target.start_byte != b.target.start_byte) {
      return a.target.start_byte < b.target.start_byte;
    }
    return a.target.empty() && !b.target.empty();
  });
  return finish(program, std::move(edits), site);
}

TransformResult exchange_loop(const Program& program, const TransformSite& site) {
  require_kind(site, TransformKind::LoopExchange);
  const SyntaxTree& t = program.tree;
  const SourceText& text = program.text;
  if (site.node == kNoNode || site.node >= t.size() ||
      t.node(site.node).span != site.anchor) {
    throw ApplicabilityError("site does not anchor a loop in this program");
  }
  const NodeId loop = site.node;
  const SyntaxNode& node = t.node(loop);
  std::vector<Edit> edits;

  if (node.kind == "while_statement") {
    const NodeId kw = first_token(t, loop, "while");
    const NodeId cond = t.child_by_field(loop, "condition");
    if (kw == kNoNode || cond == kNoNode) throw ApplicabilityError("malformed while");
    const Span cs = t.node(cond).span;
    edits.push_back(Edit::replace(text, t.node(kw).span.start_byte,
                                  cs.start_byte + 1, "for (; "));
    edits.push_back(Edit::replace(text, cs.end_byte - 1, cs.end_byte, "; )"));
    return finish(program, std::move(edits), site);
  }
  if (node.kind != "for_statement") {
    throw ApplicabilityError("site is not a for or while loop");
  }
  const NodeId body = t.child_by_field(loop, "body");
  if (body == kNoNode) throw ApplicabilityError("for loop without body");
  if (contains_kind(t, body, "continue_statement")) {
    throw ApplicabilityError("for loop body contains continue");
  }
  const auto updates = t.children_by_field(loop, "update");
  if (!updates.empty() && never_completes(t, body)) {
    throw ApplicabilityError("loop update would become unreachable");
  }

  std::string init;
  for (NodeId i : t.children_by_field(loop, "init")) {
    const std::string_view it = text_of(program, i);
    init += std::string(it);
    if (t.node(i).kind != "local_variable_declaration") init += ";";
    init += " ";
  }
  const NodeId cond = t.child_by_field(loop, "condition");
  const std::string cond_text =
      cond == kNoNode ? std::string("true") : std::string(text_of(program, cond));
  std::string update;
  for (NodeId u : updates) update += std::string(text_of(program, u)) + "; ";

  const Span bs = t.node(body).span;
  edits.push_back(Edit::replace(text, node.span.start_byte, bs.start_byte,
                                "{ " + init + "while (" + cond_text + ") "));
  if (t.node(body).kind == "block") {
    const NodeId close = last_token(t, body, "}");
    if (close == kNoNode) throw ApplicabilityError("malformed loop body");
    const Span cl = t.node(close).span;
    if (!update.empty()) {
      const std::string_view before = text.slice(text.line_start(cl.start_line), cl.start_byte);
      if (trim(before).empty() && cl.start_line > bs.start_line) {
        // `}` opens its line: add the update as its own line above it.
        const auto stmts = t.named_children(body);
        std::string indent = leading_whitespace(before) + "    ";
        if (!stmts.empty() &&
            t.node(stmts.back()).span.start_line > bs.start_line) {
          indent = leading_whitespace(
              text.line_text(t.node(stmts.back()).span.start_line));
        }
        update.pop_back();  // trailing space
        edits.push_back(Edit::insert(text, text.line_start(cl.start_line),
                                     indent + update + "\n"));
      } else {
        edits.push_back(Edit::insert(text, cl.start_byte, update));
      }
    }
    edits.push_back(Edit::insert(text, cl.end_byte, " }"));
  } else {
    edits.push_back(Edit::insert(text, bs.start_byte, "{ "));
    edits.push_back(Edit::insert(text, bs.end_byte, " " + update + "} }"));
  }
  return finish(program, std::move(edits), site);
}

TransformResult reorder_condition(const Program& program,
                                  const TransformSite& site) {
  require_kind(site, TransformKind::ReorderCondition);
  const NodeId n = require_node(program, site, "binary_expression");
  const SyntaxTree& t = program.tree;
  const NodeId l = t.child_by_field(n, "left");
  const NodeId r = t.child_by_field(n, "right");
  const NodeId op = t.child_by_field(n, "operator");
  if (l == kNoNode || r == kNoNode || op == kNoNode ||
      (t.node(op).kind != "==" && t.node(op).kind != "!=")) {
    throw ApplicabilityError("not an equality comparison");
  }
  if (!swappable(t, l, r)) {
    throw ApplicabilityError("swapping the operands could be observable");
  }
  std::vector<Edit> edits;
  edits.push_back(Edit{t.node(l).span, std::string(text_of(program, r))});
  edits.push_back(Edit{t.node(r).span, std::string(text_of(program, l))});
  return finish(program, std::move(edits), site);
}

TransformResult apply_structural(const Program& program,
                                 const TransformSite& site,
                                 std::uint64_t seed) {
  switch (site.kind) {
    case TransformKind::InsertLog:
      return insert_log_statement(program, site);
    case TransformKind::InsertTryCatch:
      return insert_try_catch(program, site, seed);
    case TransformKind::BooleanExchange:
      return exchange_boolean(program, site);
    case TransformKind::LoopExchange:
      return exchange_loop(program, site);
    case TransformKind::ReorderCondition:
      return reorder_condition(program, site);
    default:
      throw ContractViolation("apply_structural called with a rename site");
  }
}

const TransformSite& choose_site(std::span<const TransformSite> sites,
                                 std::uint64_t seed) {
  if (sites.empty()) throw ApplicabilityError("no applicable site");
  // mt19937_64 output is fully specified by the standard, unlike the
  // distributions, so the modulo keeps choices portable.
  std::mt19937_64 rng(seed);
  return sites[rng() % sites.size()];
}

void mark_buggy_line(TransformResult& result, const Span& buggy_lines) {
  result.touched_buggy_line = false;
  for (int l = buggy_lines.start_line; l <= buggy_lines.end_line; ++l) {
    if (l >= 1 && l <= result.line_map.original_line_count() &&
        result.line_map.touched(l)) {
      result.touched_buggy_line = true;
      return;
    }
  }
}

}  // namespace jrobust
