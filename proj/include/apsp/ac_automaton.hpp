#ifndef APSP_AC_AUTOMATON_HPP
#define APSP_AC_AUTOMATON_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apsp/compact_trie.hpp"
#include "apsp/types.hpp"

namespace apsp {

/// Static-set engine: trie of all strings with failure links, plus the
/// compact trie used as the reporting structure. Children live in ordered
/// maps, so construction is O(n log sigma) for total length n.
///
/// Queries mutate the ctrie's mark state: exclusive access per query.
class AcAutomaton {
 public:
  /// Builds the automaton for a fixed set of (id, content) pairs.
  /// Contents must be non-empty and pairwise distinct.
  static AcAutomaton build(
      const std::vector<std::pair<StringId, std::string>>& strings);

  /// All overlaps lspo(i, j) with length >= ell, one record per alive j
  /// when ell == 0. The walk climbs failure links from the node of S_i in
  /// decreasing depth and stops before any node shallower than ell.
  OverlapList query(StringId i, std::uint32_t ell);

  // --- introspection / audits ---------------------------------------

  std::size_t node_count() const { return nodes_.size(); }
  CompactTrie& ctrie() { return ctrie_; }
  const CompactTrie& ctrie() const { return ctrie_; }

  /// Trie node index of an exact string, or -1. Test helper.
  int find_node(std::string_view s) const;
  int flink(int v) const { return nodes_[v].flink; }
  std::uint32_t depth(int v) const { return nodes_[v].depth; }
  /// String spelled from the root to v. Test helper.
  std::string node_str(int v) const;

 private:
  struct Node {
    int parent = -1;
    char in_ch = 0;  // edge character from parent
    std::map<char, int> children;
    std::uint32_t depth = 0;
    int flink = -1;
    std::optional<StringId> id;
    CompactTrie::Handle des = CompactTrie::kNoHandle;
  };

  void build_failure_links();
  void assign_des();

  std::vector<Node> nodes_;
  std::map<StringId, int> terminal_of_;
  CompactTrie ctrie_;
};

/// Problem-1/2 driver: builds once and unions query(i, ell) over all i.
/// For ell == 0 the output has exactly k^2 records. Sorted by (i, j).
OverlapList solve_static(
    const std::vector<std::pair<StringId, std::string>>& strings,
    std::uint32_t ell);

}  // namespace apsp

#endif  // APSP_AC_AUTOMATON_HPP
