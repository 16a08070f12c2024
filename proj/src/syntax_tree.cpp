#include "jrobust/syntax_tree.hpp"

#include <tree_sitter/api.h>

#include <memory>

#include "jrobust/error.hpp"

extern "C" const TSLanguage* tree_sitter_java();

namespace jrobust {
namespace {

struct ParserDeleter {
  void operator()(TSParser* p) const { ts_parser_delete(p); }
};
struct TreeDeleter {
  void operator()(TSTree* t) const { ts_tree_delete(t); }
};

void convert(const SourceText& text, TSTreeCursor* cursor,
             std::vector<SyntaxNode>& out, NodeId parent) {
  const TSNode ts = ts_tree_cursor_current_node(cursor);
  const char* field = ts_tree_cursor_current_field_name(cursor);

  const NodeId id = static_cast<NodeId>(out.size());
  {
    SyntaxNode node;
    node.kind = ts_node_is_error(ts) ? "ERROR" : ts_node_type(ts);
    if (field != nullptr) node.field = field;
    node.named = ts_node_is_named(ts);
    node.is_error = ts_node_is_error(ts);
    node.is_missing = ts_node_is_missing(ts);
    node.is_extra = ts_node_is_extra(ts);
    node.span = text.span(ts_node_start_byte(ts), ts_node_end_byte(ts));
    node.parent = parent;
    out.push_back(std::move(node));
  }
  if (parent != kNoNode) out[parent].children.push_back(id);

  if (ts_tree_cursor_goto_first_child(cursor)) {
    do {
      convert(text, cursor, out, id);
    } while (ts_tree_cursor_goto_next_sibling(cursor));
    ts_tree_cursor_goto_parent(cursor);
  }
}

}  // namespace

SyntaxTree::SyntaxTree(std::vector<SyntaxNode> nodes, bool has_error)
    : nodes_(std::move(nodes)), has_error_(has_error) {}

NodeId SyntaxTree::child_by_field(NodeId id, std::string_view field) const {
  for (NodeId c : nodes_[id].children) {
    if (nodes_[c].field == field) return c;
  }
  return kNoNode;
}

std::vector<NodeId> SyntaxTree::children_by_field(NodeId id,
                                                  std::string_view field) const {
  std::vector<NodeId> out;
  for (NodeId c : nodes_[id].children) {
    if (nodes_[c].field == field) out.push_back(c);
  }
  return out;
}

std::vector<NodeId> SyntaxTree::named_children(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId c : nodes_[id].children) {
    if (nodes_[c].named && !nodes_[c].is_extra) out.push_back(c);
  }
  return out;
}

NodeId SyntaxTree::child_of_kind(NodeId id, std::string_view kind) const {
  for (NodeId c : nodes_[id].children) {
    if (nodes_[c].kind == kind) return c;
  }
  return kNoNode;
}

NodeId SyntaxTree::ancestor_of_kind(NodeId id, std::string_view kind) const {
  for (NodeId p = nodes_[id].parent; p != kNoNode; p = nodes_[p].parent) {
    if (nodes_[p].kind == kind) return p;
  }
  return kNoNode;
}

bool SyntaxTree::is_ancestor(NodeId ancestor, NodeId id) const {
  for (NodeId p = nodes_[id].parent; p != kNoNode; p = nodes_[p].parent) {
    if (p == ancestor) return true;
  }
  return false;
}

std::vector<NodeId> SyntaxTree::descendants(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    out.push_back(n);
    const auto& kids = nodes_[n].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> SyntaxTree::tokens() const {
  // String and character literals are single lexical tokens even though the
  // grammar splits them into quote and fragment nodes.
  auto atomic = [](const SyntaxNode& n) {
    return n.kind == "string_literal" || n.kind == "character_literal";
  };
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    const SyntaxNode& node = nodes_[n];
    if (node.is_extra || node.is_missing) continue;
    if (node.children.empty() || atomic(node)) {
      if (!node.span.empty()) out.push_back(n);
      continue;
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

SyntaxTree parse_source(const SourceText& text) {
  if (!is_valid_utf8(text.view())) {
    throw InputError("source is not valid UTF-8");
  }
  std::unique_ptr<TSParser, ParserDeleter> parser(ts_parser_new());
  if (!ts_parser_set_language(parser.get(), tree_sitter_java())) {
    throw InfrastructureError("Java grammar ABI is incompatible with runtime");
  }
  std::unique_ptr<TSTree, TreeDeleter> tree(ts_parser_parse_string(
      parser.get(), nullptr, text.content().data(),
      static_cast<uint32_t>(text.size())));
  if (!tree) throw InfrastructureError("tree-sitter returned no tree");

  const TSNode root = ts_tree_root_node(tree.get());
  std::vector<SyntaxNode> nodes;
  TSTreeCursor cursor = ts_tree_cursor_new(root);
  convert(text, &cursor, nodes, kNoNode);
  ts_tree_cursor_delete(&cursor);

  // The grammar root excludes leading/trailing trivia; ours spans the text.
  nodes[0].span = text.span(0, text.size());
  return SyntaxTree(std::move(nodes), ts_node_has_error(root));
}

std::string to_sexp(const SyntaxTree& tree, NodeId id) {
  const SyntaxNode& node = tree.node(id);
  std::string out = "(" + node.kind;
  for (NodeId c : tree.named_children(id)) {
    out += " ";
    out += to_sexp(tree, c);
  }
  out += ")";
  return out;
}

}  // namespace jrobust
