#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jrobust/source_text.hpp"

namespace jrobust {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// One concrete-syntax node. Anonymous tokens (punctuation, keywords) carry
// their literal text as `kind` and `named == false`.
struct SyntaxNode {
  std::string kind;
  std::string field;  // field name in the parent, empty if none
  bool named = false;
  bool is_error = false;    // ERROR node
  bool is_missing = false;  // token inserted by error recovery
  bool is_extra = false;    // comments
  Span span;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
};

// Owned, immutable concrete syntax tree over a SourceText. Node 0 is the root
// and spans the whole text. Nodes are stored in pre-order.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(std::vector<SyntaxNode> nodes, bool has_error);

  [[nodiscard]] NodeId root() const { return 0; }
  [[nodiscard]] bool has_error() const { return has_error_; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const SyntaxNode& node(NodeId id) const { return nodes_[id]; }
  [[nodiscard]] const std::vector<SyntaxNode>& nodes() const { return nodes_; }

  [[nodiscard]] NodeId parent(NodeId id) const { return nodes_[id].parent; }
  [[nodiscard]] NodeId child_by_field(NodeId id, std::string_view field) const;
  [[nodiscard]] std::vector<NodeId> children_by_field(
      NodeId id, std::string_view field) const;
  [[nodiscard]] std::vector<NodeId> named_children(NodeId id) const;
  // First direct child whose kind equals `kind`.
  [[nodiscard]] NodeId child_of_kind(NodeId id, std::string_view kind) const;
  // Closest strict ancestor with the given kind.
  [[nodiscard]] NodeId ancestor_of_kind(NodeId id, std::string_view kind) const;
  [[nodiscard]] bool is_ancestor(NodeId ancestor, NodeId id) const;

  // Pre-order ids of all nodes under `id` (inclusive).
  [[nodiscard]] std::vector<NodeId> descendants(NodeId id) const;
  // Leaf tokens in document order, excluding comments.
  [[nodiscard]] std::vector<NodeId> tokens() const;

 private:
  std::vector<SyntaxNode> nodes_;
  bool has_error_ = false;
};

// Parses Java source. Throws InputError for invalid UTF-8. Syntax errors do
// not throw; they set has_error() on the result.
[[nodiscard]] SyntaxTree parse_source(const SourceText& text);

// Renders `(kind child child)` for named nodes, for debugging and tests.
[[nodiscard]] std::string to_sexp(const SyntaxTree& tree, NodeId id);

}  // namespace jrobust
