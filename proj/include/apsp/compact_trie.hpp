#ifndef APSP_COMPACT_TRIE_HPP
#define APSP_COMPACT_TRIE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/errors.hpp"
#include "apsp/types.hpp"

namespace apsp {

/// Compact prefix trie over the alive strings: keeps the root, every
/// branching node, and every node whose string equals a stored string.
/// Size stays <= 2k + 1 nodes for k alive strings.
///
/// Handles are stable for the lifetime of the trie. When a node is merged
/// or removed it leaves a forwarding entry pointing at the node that now
/// covers its position, so host structures can keep stale handles and
/// resolve them lazily.
///
/// Queries mutate mark state, so every operation needs exclusive access.
class CompactTrie {
 public:
  using Handle = std::uint32_t;
  static constexpr Handle kNoHandle = 0xffffffffu;

  struct InsertOutcome {
    Handle terminal = kNoHandle;   // node now carrying the id
    std::uint32_t matched_len = 0; // longest prefix present before insert
    bool did_split = false;
    Handle split_old_child = kNoHandle;  // lower end of the split edge
    Handle split_mid = kNoHandle;        // new node on the split edge
  };

  struct RemoveOutcome {
    std::vector<Handle> removed;
    std::vector<std::pair<Handle, Handle>> forwards;  // dead -> survivor
  };

  /// Cumulative traversal instrumentation. `expanded` counts entries into
  /// unmarked nodes (real work: reporting + descending), `touched` also
  /// counts entries that stop at a marked node.
  struct TraversalStats {
    std::uint64_t expanded = 0;
    std::uint64_t touched = 0;
  };

  CompactTrie();

  Handle root() const { return 0; }

  InsertOutcome insert(StringId id, std::string_view content);
  RemoveOutcome remove(StringId id);

  /// Depth-first reporting over the subtree of `u`, never descending below
  /// a marked node; every id found on an unmarked node (including u) emits
  /// (query_id, found_id, overlap_len). Finally marks u.
  void report_and_mark(Handle u, std::uint32_t overlap_len, StringId query_id,
                       OverlapList& out);

  /// Clears all marks in time proportional to the number of marked nodes.
  void unmark_all();

  /// Follows forwarding entries (with path compression) to the live node
  /// covering the position of `h`.
  Handle resolve(Handle h) const;

  // --- introspection -------------------------------------------------

  std::size_t node_count() const { return live_count_; }
  std::size_t alive_string_count() const { return terminal_of_.size(); }
  const TraversalStats& stats() const { return stats_; }

  bool is_live(Handle h) const { return nodes_[h].live; }
  std::uint32_t depth_of(Handle h) const { return nodes_[resolve(h)].depth; }
  const std::string& str_of(Handle h) const { return nodes_[resolve(h)].str; }
  std::optional<StringId> id_of(Handle h) const { return nodes_[resolve(h)].id; }
  bool marked(Handle h) const { return nodes_[resolve(h)].marked; }
  Handle parent_of(Handle h) const { return nodes_[resolve(h)].parent; }
  const std::map<char, Handle>& children_of(Handle h) const {
    return nodes_[resolve(h)].children;
  }

  /// Exact-node lookup by full string; kNoHandle when the string is not a
  /// node of the compact trie. Audit/test helper.
  Handle locate(std::string_view s) const;

  /// Checks the structural invariants (every node is root, branching, or
  /// id-bearing; child depths grow; stored strings prefix-consistent).
  /// Throws std::logic_error on violation. Test helper.
  void validate() const;

 private:
  struct Node {
    Handle parent = kNoHandle;
    std::map<char, Handle> children;
    std::uint32_t depth = 0;
    std::string str;
    std::optional<StringId> id;
    bool marked = false;
    bool live = true;
    Handle forward = kNoHandle;  // valid when !live
  };

  Handle new_node(Handle parent, std::string_view str);
  void kill_node(Handle h, Handle forward_to, RemoveOutcome& out);

  std::vector<Node> nodes_;
  std::map<StringId, Handle> terminal_of_;
  std::vector<Handle> marked_list_;
  std::size_t live_count_ = 0;
  TraversalStats stats_;
};

}  // namespace apsp

#endif  // APSP_COMPACT_TRIE_HPP
