#ifndef APSP_SUFFIX_TREE_HPP
#define APSP_SUFFIX_TREE_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apsp/compact_trie.hpp"
#include "apsp/overlap_ledger.hpp"
#include "apsp/string_store.hpp"
#include "apsp/types.hpp"

namespace apsp {

/// Generalized suffix tree in which every suffix of every alive string is
/// an explicit node (repeated suffixes with unique right-extensions sit on
/// non-branching internal nodes). Supports online insertion and full
/// string deletion.
///
/// Per-node bookkeeping:
///  - occurrences: the suffix occurrences (j, q) ending exactly at the node;
///    its size is the suffix count that gates structural removal.
///  - prefix_count: how many alive strings have the node's string as a
///    prefix; positive count marks the node as part of the prefix tree and
///    validates its compact-trie handle.
///  - leaf_ptr: one alive suffix occurrence in the node's subtree; edge
///    labels are kept derived from it so they never cite dead strings.
///
/// Exclusive access for all operations.
class SuffixTreeIndex {
 public:
  /// Suffix occurrence: string id and 0-based start position.
  using Occurrence = std::pair<StringId, std::uint32_t>;

  /// Flat read-only view of one live node, for audits and tests.
  struct NodeView {
    std::string str;
    std::uint32_t depth = 0;
    std::size_t suffix_count = 0;
    std::uint32_t prefix_count = 0;
    std::optional<StringId> id;
    StringId label_string = 0;  // 0 for the root
    std::uint32_t label_begin = 0;
    std::uint32_t label_end = 0;
    Occurrence leaf_ptr{0, 0};
    bool has_slink = false;
    std::string slink_str;
    std::size_t child_count = 0;
  };

  SuffixTreeIndex();

  /// Online insertion of all suffixes of `content`; afterwards every
  /// suffix of the enlarged set is an explicit node and all counts,
  /// suffix links, prefix-tree membership and des handles are current.
  void insert(StringId id, std::string_view content);

  /// Deletes the string: suffix counts drop along the suffix-link chain
  /// of its suffix nodes, empty nodes are removed or merged, prefix
  /// counts drop along its root path, and every edge label or leaf
  /// pointer that cited the string is re-resolved to an alive occurrence.
  void erase(StringId id);

  /// F_i restricted to length >= ell, by climbing the suffix-link chain
  /// from the node of S_i and reporting at every prefix-tree node.
  OverlapList query_forward(StringId id, std::uint32_t ell);

  // --- introspection / audits ---------------------------------------

  std::size_t node_count() const { return live_count_; }
  CompactTrie& ctrie() { return ctrie_; }
  const CompactTrie& ctrie() const { return ctrie_; }

  /// Views of all live nodes (root included), ordered by node string.
  std::vector<NodeView> dump_nodes() const;
  /// View of the exact node spelling `s`, if explicit.
  std::optional<NodeView> find_node(std::string_view s) const;
  /// True when walking `s` from the root ends exactly at a node.
  bool is_explicit(std::string_view s) const;

 private:
  static constexpr std::uint32_t kOpenEnd = 0xffffffffu;

  struct Label {
    StringId j = 0;
    std::uint32_t b = 0;
    std::uint32_t e = 0;
  };

  struct StNode {
    StNode* parent = nullptr;
    std::map<char, StNode*> children;
    Label label;
    std::uint32_t depth = 0;
    StNode* slink = nullptr;
    std::set<Occurrence> occurrences;
    std::uint32_t prefix_count = 0;
    std::optional<StringId> id;
    CompactTrie::Handle des = CompactTrie::kNoHandle;
    Occurrence leaf_ptr{0, 0};
    bool leaf_ptr_set = false;
    bool dead = false;
  };

  StNode* new_node();
  const std::string& content_of(StringId j) const { return contents_.at(j); }
  char label_char(const StNode* v, std::uint32_t off) const;
  std::uint32_t edge_length(const StNode* v, std::uint32_t open_end) const;
  StNode* split_edge(StNode* child, std::uint32_t off,
                     std::vector<StNode*>& new_nodes);
  /// Walks `t` from the root; makes the landing position explicit by
  /// splitting if it sits mid-edge. All characters of `t` must be present.
  StNode* locate_explicit(std::string_view t, std::vector<StNode*>& new_nodes);
  /// Walks `t`; returns the exact node or nullptr when mid-edge/absent.
  StNode* locate_node(std::string_view t) const;
  std::string str_of(const StNode* v) const;
  void refresh_label(StNode* v);
  void detach_from_parent(StNode* v);

  std::deque<StNode> pool_;
  StNode* root_ = nullptr;
  std::size_t live_count_ = 0;
  std::map<StringId, std::string> contents_;
  std::set<std::string> content_set_;
  std::map<StringId, StNode*> terminal_of_;
  CompactTrie ctrie_;
};

/// Fully dynamic engine: forward and reversed suffix trees over the alive
/// set, feeding the shared ledger under insertions and deletions.
class StreeEngine {
 public:
  struct Added {
    StringId id = 0;
    OverlapList f;
    OverlapList b;
  };

  Added add(std::string_view content, std::uint32_t ell);
  void erase(StringId id);

  OverlapList snapshot() const { return ledger_.snapshot(); }

  const StringStore& store() const { return store_; }
  const OverlapLedger& ledger() const { return ledger_; }
  SuffixTreeIndex& forward_index() { return fwd_; }
  SuffixTreeIndex& reversed_index() { return rev_; }

 private:
  StringStore store_;
  OverlapLedger ledger_;
  SuffixTreeIndex fwd_;
  SuffixTreeIndex rev_;
};

}  // namespace apsp

#endif  // APSP_SUFFIX_TREE_HPP
