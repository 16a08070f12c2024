#include "jrobust/scope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jrobust/error.hpp"

namespace jrobust {

std::string_view to_string(DeclKind kind) {
  switch (kind) {
    case DeclKind::LocalVariable:
      return "local-variable";
    case DeclKind::Parameter:
      return "parameter";
    case DeclKind::Method:
      return "method";
  }
  return "?";
}

namespace {

constexpr int kUntracked = -1;  // fields, enum constants, record components

struct Scope {
  bool is_class = false;
  std::string class_name;  // empty for anonymous classes
  Span region;
  std::map<std::string, int, std::less<>> vars;
  std::map<std::string, std::vector<int>, std::less<>> methods;
};

class Resolver {
 public:
  Resolver(const SyntaxTree& tree, const SourceText& text)
      : tree_(tree), text_(text) {}

  ScopeTable run() {
    Scope top;
    top.region = tree_.node(tree_.root()).span;
    stack_.push_back(std::move(top));
    visit_children(tree_.root());
    stack_.pop_back();

    for (auto& list : occurrences_) {
      std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return a.span.start_byte < b.span.start_byte;
      });
      list.erase(std::unique(list.begin(), list.end(),
                             [](const auto& a, const auto& b) {
                               return a.span == b.span;
                             }),
                 list.end());
    }
    std::set<std::string> names;
    for (const SyntaxNode& n : tree_.nodes()) {
      if (n.kind == "identifier" || n.kind == "type_identifier") {
        names.emplace(text_.slice(n.span));
      }
    }
    return ScopeTable(std::move(decls_), std::move(occurrences_),
                      {names.begin(), names.end()});
  }

 private:
  [[nodiscard]] const SyntaxNode& node(NodeId id) const {
    return tree_.node(id);
  }
  [[nodiscard]] std::string_view text_of(NodeId id) const {
    return text_.slice(node(id).span);
  }

  int add_declaration(NodeId name_node, NodeId decl_node, DeclKind kind,
                      DeclOrigin origin, Span scope) {
    Declaration d;
    d.id = static_cast<int>(decls_.size());
    d.name = std::string(text_of(name_node));
    d.kind = kind;
    d.origin = origin;
    d.decl_span = node(name_node).span;
    d.scope_span = scope;
    d.name_node = name_node;
    d.decl_node = decl_node;
    decls_.push_back(std::move(d));
    occurrences_.push_back(
        {Occurrence{node(name_node).span, OccurrenceRole::Declaration, name_node}});
    return decls_.back().id;
  }

  // Declares a variable in the innermost scope; visible from its name to the
  // end of that scope's region.
  void declare_variable(NodeId name_node, NodeId decl_node, DeclKind kind,
                        DeclOrigin origin) {
    if (node(name_node).kind != "identifier") return;  // `_` patterns
    const Span region = stack_.back().region;
    const Span scope = text_.span(node(name_node).span.start_byte,
                                  region.end_byte);
    const int id = add_declaration(name_node, decl_node, kind, origin, scope);
    stack_.back().vars[decls_[static_cast<std::size_t>(id)].name] = id;
  }

  void declare_parameter(NodeId param, DeclOrigin origin) {
    const SyntaxNode& p = node(param);
    NodeId name = kNoNode;
    if (p.kind == "formal_parameter" || p.kind == "catch_formal_parameter") {
      name = tree_.child_by_field(param, "name");
    } else if (p.kind == "spread_parameter") {
      const NodeId decl = tree_.child_of_kind(param, "variable_declarator");
      if (decl != kNoNode) name = tree_.child_by_field(decl, "name");
    } else if (p.kind == "identifier") {
      name = param;
    }
    if (name == kNoNode || node(name).kind != "identifier") return;
    const int id = add_declaration(name, param, DeclKind::Parameter, origin,
                                   stack_.back().region);
    stack_.back().vars[decls_[static_cast<std::size_t>(id)].name] = id;
  }

  void push_scope(Span region) {
    Scope s;
    s.region = region;
    stack_.push_back(std::move(s));
  }

  // Innermost binding of a simple variable name, or kUntracked.
  [[nodiscard]] int lookup_variable(std::string_view name) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      auto found = it->vars.find(name);
      if (found != it->vars.end()) return found->second;
    }
    return kUntracked;
  }

  [[nodiscard]] const Scope* class_declaring_method(std::string_view name) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->is_class && it->methods.contains(name)) return &*it;
    }
    return nullptr;
  }

  [[nodiscard]] const Scope* class_named(std::string_view name) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->is_class && it->class_name == name) return &*it;
    }
    return nullptr;
  }

  void bind_method_use(const Scope* cls, NodeId name_node) {
    if (cls == nullptr) return;
    auto it = cls->methods.find(text_of(name_node));
    if (it == cls->methods.end()) return;
    for (int id : it->second) {
      occurrences_[static_cast<std::size_t>(id)].push_back(
          Occurrence{node(name_node).span, OccurrenceRole::Read, name_node});
    }
  }

  void visit_class_body(NodeId body, std::string class_name) {
    Scope s;
    s.is_class = true;
    s.class_name = std::move(class_name);
    s.region = node(body).span;
    for (NodeId m : tree_.named_children(body)) {
      const SyntaxNode& member = node(m);
      if (member.kind == "field_declaration" ||
          member.kind == "constant_declaration") {
        for (NodeId d : tree_.children_by_field(m, "declarator")) {
          const NodeId name = tree_.child_by_field(d, "name");
          if (name != kNoNode) s.vars[std::string(text_of(name))] = kUntracked;
        }
      } else if (member.kind == "enum_body_declarations") {
        // Members after the enum constants.
        for (NodeId mm : tree_.named_children(m)) {
          if (node(mm).kind == "field_declaration") {
            for (NodeId d : tree_.children_by_field(mm, "declarator")) {
              const NodeId name = tree_.child_by_field(d, "name");
              if (name != kNoNode) s.vars[std::string(text_of(name))] = kUntracked;
            }
          } else if (node(mm).kind == "method_declaration") {
            predeclare_method(mm, body, s);
          }
        }
      } else if (member.kind == "enum_constant") {
        const NodeId name = tree_.child_by_field(m, "name");
        if (name != kNoNode) s.vars[std::string(text_of(name))] = kUntracked;
      } else if (member.kind == "method_declaration") {
        predeclare_method(m, body, s);
      }
    }
    for (auto& [name, ids] : s.methods) {
      if (ids.size() > 1) {
        for (int id : ids) decls_[static_cast<std::size_t>(id)].overloaded = true;
      }
    }
    stack_.push_back(std::move(s));
    visit_children(body);
    stack_.pop_back();
  }

  void predeclare_method(NodeId method, NodeId body, Scope& cls) {
    const NodeId name = tree_.child_by_field(method, "name");
    if (name == kNoNode) return;
    const int id = add_declaration(name, method, DeclKind::Method,
                                   DeclOrigin::Method, node(body).span);
    method_ids_[method] = id;
    cls.methods[std::string(text_of(name))].push_back(id);
  }

  void visit_type_declaration(NodeId n) {
    const NodeId name = tree_.child_by_field(n, "name");
    const std::string class_name =
        name == kNoNode ? std::string() : std::string(text_of(name));
    // Record components behave like fields inside the body.
    const NodeId params = tree_.child_by_field(n, "parameters");
    const NodeId body = tree_.child_by_field(n, "body");
    if (body == kNoNode) return;
    if (params != kNoNode) {
      push_scope(node(n).span);
      for (NodeId p : tree_.named_children(params)) {
        const NodeId pn = tree_.child_by_field(p, "name");
        if (pn != kNoNode) stack_.back().vars[std::string(text_of(pn))] = kUntracked;
      }
      visit_class_body(body, class_name);
      stack_.pop_back();
      return;
    }
    visit_class_body(body, class_name);
  }

  void visit_callable(NodeId n, DeclOrigin param_origin) {
    push_scope(node(n).span);
    const NodeId params = tree_.child_by_field(n, "parameters");
    if (params != kNoNode) {
      for (NodeId p : tree_.named_children(params)) {
        declare_parameter(p, param_origin);
      }
    }
    const NodeId body = tree_.child_by_field(n, "body");
    if (body != kNoNode) visit(body);
    stack_.pop_back();
  }

  void visit_lambda(NodeId n) {
    push_scope(node(n).span);
    const NodeId params = tree_.child_by_field(n, "parameters");
    if (params != kNoNode) {
      if (node(params).kind == "identifier") {
        declare_parameter(params, DeclOrigin::LambdaParameter);
      } else {
        for (NodeId p : tree_.named_children(params)) {
          declare_parameter(p, DeclOrigin::LambdaParameter);
        }
      }
    }
    const NodeId body = tree_.child_by_field(n, "body");
    if (body != kNoNode) visit(body);
    stack_.pop_back();
  }

  void visit_local_declaration(NodeId n) {
    for (NodeId d : tree_.children_by_field(n, "declarator")) {
      const NodeId name = tree_.child_by_field(d, "name");
      if (name != kNoNode) {
        declare_variable(name, d, DeclKind::LocalVariable,
                         DeclOrigin::LocalDeclaration);
      }
      const NodeId value = tree_.child_by_field(d, "value");
      if (value != kNoNode) visit(value);
    }
  }

  void visit_identifier_use(NodeId n) {
    const int id = lookup_variable(text_of(n));
    if (id == kUntracked) return;
    OccurrenceRole role = OccurrenceRole::Read;
    NodeId parent = node(n).parent;
    // `(x) = 1` still writes x.
    NodeId child = n;
    while (parent != kNoNode && node(parent).kind == "parenthesized_expression") {
      child = parent;
      parent = node(parent).parent;
    }
    if (parent != kNoNode) {
      const SyntaxNode& p = node(parent);
      if (p.kind == "assignment_expression" && node(child).field == "left") {
        const NodeId op = tree_.child_by_field(parent, "operator");
        role = (op != kNoNode && node(op).kind == "=")
                   ? OccurrenceRole::Write
                   : OccurrenceRole::CompoundWrite;
      } else if (p.kind == "update_expression") {
        role = OccurrenceRole::Update;
      }
    }
    occurrences_[static_cast<std::size_t>(id)].push_back(
        Occurrence{node(n).span, role, n});
  }

  void visit_method_invocation(NodeId n) {
    const NodeId object = tree_.child_by_field(n, "object");
    const NodeId name = tree_.child_by_field(n, "name");
    if (object != kNoNode) visit(object);
    const NodeId args = tree_.child_by_field(n, "arguments");
    if (args != kNoNode) visit(args);
    if (name == kNoNode) return;

    const bool has_super = tree_.child_of_kind(n, "super") != kNoNode;
    if (has_super) return;
    if (object == kNoNode || node(object).kind == "this") {
      bind_method_use(class_declaring_method(text_of(name)), name);
    } else if (node(object).kind == "identifier" &&
               lookup_variable(text_of(object)) == kUntracked) {
      bind_method_use(class_named(text_of(object)), name);
    }
  }

  void visit_method_reference(NodeId n) {
    const auto& kids = node(n).children;
    if (kids.empty()) return;
    const NodeId qualifier = kids.front();
    NodeId name = kNoNode;
    bool after_colons = false;
    for (NodeId c : kids) {
      if (node(c).kind == "::") {
        after_colons = true;
      } else if (after_colons && node(c).kind == "identifier") {
        name = c;
      }
    }
    const std::string_view qk = node(qualifier).kind;
    if (qk == "identifier") {
      visit_identifier_use(qualifier);
    } else if (qk != "type_identifier" && qk != "scoped_type_identifier" &&
               qk != "generic_type" && qk != "super") {
      visit(qualifier);
    }
    if (name == kNoNode) return;
    if (qk == "this") {
      bind_method_use(class_declaring_method(text_of(name)), name);
    } else if ((qk == "identifier" || qk == "type_identifier") &&
               lookup_variable(text_of(qualifier)) == kUntracked) {
      bind_method_use(class_named(text_of(qualifier)), name);
    }
  }

  void visit_children(NodeId n) {
    for (NodeId c : node(n).children) visit(c);
  }

  void visit(NodeId n) {
    const SyntaxNode& nd = node(n);
    const std::string_view k = nd.kind;
    if (!nd.named || nd.is_extra) return;

    if (k == "identifier") {
      // Names reached through a generic walk are uses unless they sit in a
      // declaration-name position.
      if (nd.field == "name" || nd.field == "field") return;
      visit_identifier_use(n);
      return;
    }
    if (k == "annotation" || k == "marker_annotation" ||
        k == "package_declaration" || k == "import_declaration" ||
        k == "type_arguments" || k == "type_parameters" ||
        k == "scoped_identifier" || k == "type_identifier" ||
        k == "scoped_type_identifier" || k == "generic_type" ||
        k == "array_type" || k == "integral_type" ||
        k == "floating_point_type" || k == "boolean_type" ||
        k == "void_type" || k == "dimensions" || k == "modifiers" ||
        k == "throws" || k == "break_statement" ||
        k == "continue_statement") {
      return;
    }
    if (k == "class_declaration" || k == "interface_declaration" ||
        k == "enum_declaration" || k == "record_declaration" ||
        k == "annotation_type_declaration") {
      visit_type_declaration(n);
      return;
    }
    if (k == "object_creation_expression") {
      for (NodeId c : nd.children) {
        const SyntaxNode& cn = node(c);
        if (cn.kind == "class_body") {
          visit_class_body(c, "");
        } else if (cn.field != "type") {
          visit(c);
        }
      }
      return;
    }
    if (k == "enum_constant") {
      for (NodeId c : nd.children) {
        if (node(c).kind == "class_body") {
          visit_class_body(c, "");
        } else if (node(c).field != "name") {
          visit(c);
        }
      }
      return;
    }
    if (k == "method_declaration") {
      visit_callable(n, DeclOrigin::MethodParameter);
      return;
    }
    if (k == "constructor_declaration" ||
        k == "compact_constructor_declaration") {
      visit_callable(n, DeclOrigin::ConstructorParameter);
      return;
    }
    if (k == "lambda_expression") {
      visit_lambda(n);
      return;
    }
    if (k == "block" || k == "constructor_body" || k == "switch_block" ||
        k == "switch_block_statement_group" || k == "switch_rule") {
      // Statement groups share the enclosing switch block's scope.
      if (k == "switch_block_statement_group" || k == "switch_rule") {
        visit_children(n);
        return;
      }
      push_scope(nd.span);
      visit_children(n);
      stack_.pop_back();
      return;
    }
    if (k == "local_variable_declaration") {
      visit_local_declaration(n);
      return;
    }
    if (k == "for_statement") {
      push_scope(nd.span);
      visit_children(n);
      stack_.pop_back();
      return;
    }
    if (k == "enhanced_for_statement") {
      const NodeId value = tree_.child_by_field(n, "value");
      if (value != kNoNode) visit(value);
      push_scope(nd.span);
      const NodeId name = tree_.child_by_field(n, "name");
      if (name != kNoNode) {
        declare_variable(name, n, DeclKind::LocalVariable,
                         DeclOrigin::ForEachVariable);
      }
      const NodeId body = tree_.child_by_field(n, "body");
      if (body != kNoNode) visit(body);
      stack_.pop_back();
      return;
    }
    if (k == "catch_clause") {
      push_scope(nd.span);
      const NodeId param = tree_.child_of_kind(n, "catch_formal_parameter");
      if (param != kNoNode) declare_parameter(param, DeclOrigin::CatchParameter);
      const NodeId body = tree_.child_by_field(n, "body");
      if (body != kNoNode) visit(body);
      stack_.pop_back();
      return;
    }
    if (k == "try_with_resources_statement") {
      push_scope(nd.span);
      visit_children(n);
      stack_.pop_back();
      return;
    }
    if (k == "resource") {
      const NodeId name = tree_.child_by_field(n, "name");
      const NodeId value = tree_.child_by_field(n, "value");
      if (value != kNoNode) visit(value);
      if (name != kNoNode) {
        declare_variable(name, n, DeclKind::LocalVariable, DeclOrigin::Resource);
      } else {
        visit_children(n);
      }
      return;
    }
    if (k == "instanceof_expression") {
      const NodeId left = tree_.child_by_field(n, "left");
      if (left != kNoNode) visit(left);
      const NodeId name = tree_.child_by_field(n, "name");
      if (name != kNoNode) {
        declare_variable(name, n, DeclKind::LocalVariable, DeclOrigin::Pattern);
      }
      const NodeId pattern = tree_.child_by_field(n, "pattern");
      if (pattern != kNoNode) declare_pattern_names(pattern);
      return;
    }
    if (k == "labeled_statement") {
      for (NodeId c : nd.children) {
        if (node(c).kind != "identifier") visit(c);
      }
      return;
    }
    if (k == "field_access") {
      const NodeId object = tree_.child_by_field(n, "object");
      if (object != kNoNode) visit(object);
      return;
    }
    if (k == "method_invocation") {
      visit_method_invocation(n);
      return;
    }
    if (k == "method_reference") {
      visit_method_reference(n);
      return;
    }
    if (k == "cast_expression") {
      const NodeId value = tree_.child_by_field(n, "value");
      if (value != kNoNode) visit(value);
      return;
    }
    if (k == "array_creation_expression") {
      for (NodeId c : nd.children) {
        if (node(c).field != "type") visit(c);
      }
      return;
    }
    for (NodeId c : nd.children) {
      if (node(c).field == "type") continue;
      visit(c);
    }
  }

  void declare_pattern_names(NodeId pattern) {
    for (NodeId d : tree_.descendants(pattern)) {
      const SyntaxNode& dn = node(d);
      if (dn.kind == "identifier" && dn.parent != kNoNode &&
          node(dn.parent).kind == "record_pattern_component") {
        declare_variable(d, dn.parent, DeclKind::LocalVariable,
                         DeclOrigin::Pattern);
      }
    }
  }

  const SyntaxTree& tree_;
  const SourceText& text_;
  std::vector<Declaration> decls_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<Scope> stack_;
  std::map<NodeId, int> method_ids_;
};

}  // namespace

ScopeTable::ScopeTable(std::vector<Declaration> declarations,
                       std::vector<std::vector<Occurrence>> occurrences,
                       std::vector<std::string> all_names)
    : declarations_(std::move(declarations)),
      occurrences_(std::move(occurrences)),
      all_names_(std::move(all_names)) {}

const Declaration& ScopeTable::declaration(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= declarations_.size()) {
    throw LookupError("unknown declaration id " + std::to_string(id));
  }
  return declarations_[static_cast<std::size_t>(id)];
}

const std::vector<Occurrence>& ScopeTable::occurrences(
    const Declaration& decl) const {
  const Declaration& own = declaration(decl.id);
  if (own.name != decl.name || own.decl_span != decl.decl_span) {
    throw LookupError("declaration '" + decl.name +
                      "' does not belong to this scope table");
  }
  return occurrences_[static_cast<std::size_t>(decl.id)];
}

std::vector<const Declaration*> ScopeTable::of_kind(DeclKind kind) const {
  std::vector<const Declaration*> out;
  for (const Declaration& d : declarations_) {
    if (d.kind == kind) out.push_back(&d);
  }
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return a->decl_span.start_byte < b->decl_span.start_byte;
  });
  return out;
}

ScopeTable resolve_scopes(const SyntaxTree& tree, const SourceText& text) {
  if (tree.has_error()) {
    throw ContractViolation("cannot resolve scopes of a tree with parse errors");
  }
  if (tree.size() == 0) return {};
  return Resolver(tree, text).run();
}

std::vector<Span> find_identifier_occurrences(const ScopeTable& table,
                                              const Declaration& decl) {
  std::vector<Span> out;
  for (const Occurrence& o : table.occurrences(decl)) out.push_back(o.span);
  return out;
}

}  // namespace jrobust
