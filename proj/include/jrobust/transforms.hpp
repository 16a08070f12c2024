#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jrobust/edit.hpp"
#include "jrobust/scope.hpp"
#include "jrobust/source_text.hpp"
#include "jrobust/syntax_tree.hpp"

namespace jrobust {

enum class TransformKind {
  LocalVarRename,
  MethodRename,
  ParamRename,
  InsertLog,
  InsertTryCatch,
  BooleanExchange,
  LoopExchange,
  ReorderCondition,
};

inline constexpr std::array<TransformKind, 8> kAllTransformKinds = {
    TransformKind::LocalVarRename,  TransformKind::MethodRename,
    TransformKind::ParamRename,     TransformKind::BooleanExchange,
    TransformKind::LoopExchange,    TransformKind::ReorderCondition,
    TransformKind::InsertLog,       TransformKind::InsertTryCatch,
};

[[nodiscard]] std::string_view to_string(TransformKind kind);
[[nodiscard]] std::optional<TransformKind> parse_transform_kind(
    std::string_view name);
[[nodiscard]] bool is_rename(TransformKind kind);
// Declaration kind targeted by a rename transformation.
[[nodiscard]] DeclKind rename_target(TransformKind kind);

// A parsed, scope-resolved program. Construction throws InputError when the
// text does not parse cleanly.
struct Program {
  SourceText text;
  SyntaxTree tree;
  ScopeTable scopes;

  static Program parse(SourceText text);
  // Name of the first top-level type declaration, empty if none.
  [[nodiscard]] std::string primary_class_name() const;
};

struct TransformSite {
  TransformKind kind = TransformKind::InsertLog;
  Span anchor;
  int site_id = 0;  // document-order ordinal within (program, kind)
  NodeId node = kNoNode;
  int decl_id = -1;  // renames and BooleanExchange
  std::string decl_name;
  std::string detail;  // e.g. "for-to-while"
};

struct NamingInfo {
  std::string old_name;
  std::string new_name;
  std::string provider;

  friend bool operator==(const NamingInfo&, const NamingInfo&) = default;
};

struct Provenance {
  TransformKind kind = TransformKind::InsertLog;
  int site_id = 0;
  std::optional<NamingInfo> naming;
  std::uint64_t seed = 0;
  std::string detail;
};

struct TransformResult {
  SourceText output;
  std::vector<Edit> edits;
  LineMap line_map;
  bool touched_buggy_line = false;
  Provenance provenance;
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::string_view kLogStatement = "System.out.println(\"log\");";

// Applicable sites for `kind`, in document order. Empty when inapplicable.
[[nodiscard]] std::vector<TransformSite> enumerate_sites(
    const SourceText& program, const SyntaxTree& tree, const ScopeTable& table,
    TransformKind kind);
[[nodiscard]] std::vector<TransformSite> enumerate_sites(const Program& program,
                                                         TransformKind kind);

// Renames every bound occurrence of the site's declaration. Throws
// ContractViolation for an invalid or unchanged name and ApplicabilityError
// when `new_name` collides with a name already present in the program.
[[nodiscard]] TransformResult rename_identifier(const Program& program,
                                                const TransformSite& site,
                                                std::string_view new_name);

// Renames `ClassName.old(...)` calls and `ClassName::old` references in a
// client compilation unit (e.g. the test driver) after a method rename.
[[nodiscard]] TransformResult rename_qualified_calls(const Program& client,
                                                     std::string_view class_name,
                                                     std::string_view old_name,
                                                     std::string_view new_name);

[[nodiscard]] TransformResult insert_log_statement(const Program& program,
                                                   const TransformSite& site);
[[nodiscard]] TransformResult insert_try_catch(const Program& program,
                                               const TransformSite& site,
                                               std::uint64_t rng_seed);
[[nodiscard]] TransformResult exchange_boolean(const Program& program,
                                               const TransformSite& site);
[[nodiscard]] TransformResult exchange_loop(const Program& program,
                                            const TransformSite& site);
[[nodiscard]] TransformResult reorder_condition(const Program& program,
                                                const TransformSite& site);

// Dispatches a structural (non-rename) transformation.
[[nodiscard]] TransformResult apply_structural(const Program& program,
                                               const TransformSite& site,
                                               std::uint64_t seed);

// Seeded uniform choice among sites; identical seeds give identical choices
// on every platform. Throws ApplicabilityError on an empty list.
[[nodiscard]] const TransformSite& choose_site(
    std::span<const TransformSite> sites, std::uint64_t seed);

// Sets touched_buggy_line when any edit changed a line of `buggy_lines`.
void mark_buggy_line(TransformResult& result, const Span& buggy_lines);

[[nodiscard]] bool is_java_keyword(std::string_view word);
[[nodiscard]] bool is_valid_identifier(std::string_view name);

}  // namespace jrobust
