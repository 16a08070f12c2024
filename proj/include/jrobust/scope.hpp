#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jrobust/source_text.hpp"
#include "jrobust/syntax_tree.hpp"

namespace jrobust {

enum class DeclKind { LocalVariable, Parameter, Method };

[[nodiscard]] std::string_view to_string(DeclKind kind);

// Syntactic home of a declaration; refines DeclKind for applicability checks.
enum class DeclOrigin {
  LocalDeclaration,  // `int x = 0;`
  ForEachVariable,   // `for (int x : xs)`
  Resource,          // try-with-resources
  Pattern,           // `o instanceof String s`
  MethodParameter,
  ConstructorParameter,
  LambdaParameter,
  CatchParameter,
  Method,
};

enum class OccurrenceRole {
  Declaration,
  Read,
  Write,          // plain `x = ...`
  CompoundWrite,  // `x += ...`
  Update,         // `x++`, `--x`
};

struct Occurrence {
  Span span;
  OccurrenceRole role = OccurrenceRole::Read;
  NodeId node = kNoNode;  // the identifier node
};

struct Declaration {
  int id = -1;
  std::string name;
  DeclKind kind = DeclKind::LocalVariable;
  DeclOrigin origin = DeclOrigin::LocalDeclaration;
  Span decl_span;   // the declaring identifier
  Span scope_span;  // region where simple-name uses may bind to it
  NodeId name_node = kNoNode;
  NodeId decl_node = kNoNode;  // declarator, parameter, or method node
  // Methods only: another method in the same class shares the name, so
  // call sites cannot be bound without overload resolution.
  bool overloaded = false;
};

// Declarations of locals, parameters and methods with their bound
// occurrences. Resolution is structural: block nesting plus innermost-scope
// shadowing, no type information. Fields and imported names are tracked only
// as shadowing barriers and never appear as declarations.
class ScopeTable {
 public:
  ScopeTable() = default;
  ScopeTable(std::vector<Declaration> declarations,
             std::vector<std::vector<Occurrence>> occurrences,
             std::vector<std::string> all_names);

  [[nodiscard]] const std::vector<Declaration>& declarations() const {
    return declarations_;
  }
  [[nodiscard]] const Declaration& declaration(int id) const;
  // Occurrences of `decl` (declaration included), sorted by start byte.
  [[nodiscard]] const std::vector<Occurrence>& occurrences(
      const Declaration& decl) const;
  [[nodiscard]] std::vector<const Declaration*> of_kind(DeclKind kind) const;
  // Every identifier spelling in the program, sorted and unique.
  [[nodiscard]] const std::vector<std::string>& all_names() const {
    return all_names_;
  }

 private:
  std::vector<Declaration> declarations_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::string> all_names_;
};

// Throws ContractViolation if `tree` has a parse error.
[[nodiscard]] ScopeTable resolve_scopes(const SyntaxTree& tree,
                                        const SourceText& text);

// All spans bound to `decl`, sorted by start byte. Throws LookupError if
// `decl` does not belong to `table`.
[[nodiscard]] std::vector<Span> find_identifier_occurrences(
    const ScopeTable& table, const Declaration& decl);

}  // namespace jrobust
