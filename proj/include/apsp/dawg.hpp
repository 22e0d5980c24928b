#ifndef APSP_DAWG_HPP
#define APSP_DAWG_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/compact_trie.hpp"
#include "apsp/overlap_ledger.hpp"
#include "apsp/string_store.hpp"
#include "apsp/types.hpp"

namespace apsp {

/// Online multi-string DAWG (suffix automaton) over the inserted contents.
/// Nodes are end-position equivalence classes; a node is `trie_member` when
/// its longest string is a prefix of some inserted string, in which case it
/// also carries a compact-trie handle for reporting.
///
/// Exclusive access for all operations: queries mutate ctrie mark state.
class DawgIndex {
 public:
  DawgIndex();

  /// Extends the graph with all characters of `content`. Online: one
  /// character at a time from the source, cloning a target node whenever
  /// the transition to follow is secondary.
  void insert(StringId id, std::string_view content);

  /// Walks the path spelling the string of `id` from the source and flags
  /// every node on it as a trie member; the final node records the id.
  void mark_trie_path(StringId id);

  /// Inserts the string into the compact trie and refreshes the des
  /// handles of the path nodes affected by the edge split, if any.
  void update_ctrie_for(StringId id);

  /// insert + mark_trie_path + update_ctrie_for.
  void insert_string(StringId id, std::string_view content);

  /// F_i restricted to length >= ell: climbs the suffix-link chain from
  /// the node of S_i, reporting through the ctrie at every trie member.
  OverlapList query_forward(StringId id, std::uint32_t ell);

  // --- introspection / audits ---------------------------------------

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t transition_count() const;
  CompactTrie& ctrie() { return ctrie_; }
  const CompactTrie& ctrie() const { return ctrie_; }

  /// State reached by spelling `s` from the source, or -1.
  int state_of(std::string_view s) const;
  std::uint32_t len_of(int v) const { return nodes_[v].len; }
  int slink_of(int v) const { return nodes_[v].slink; }
  bool trie_member(int v) const { return nodes_[v].member; }
  std::optional<StringId> id_at(int v) const { return nodes_[v].id; }
  CompactTrie::Handle des_of(int v) const { return nodes_[v].des; }
  const std::map<char, int>& transitions_of(int v) const {
    return nodes_[v].next;
  }
  /// Longest string of every node, via the primary-edge spanning tree.
  std::map<int, std::string> all_longs() const;

 private:
  struct Node {
    std::uint32_t len = 0;
    int slink = -1;
    std::map<char, int> next;
    bool member = false;
    CompactTrie::Handle des = CompactTrie::kNoHandle;
    std::optional<StringId> id;
  };

  int extend(int active, char c);
  int clone_of(int q, std::uint32_t new_len);

  std::vector<Node> nodes_;  // index 0 is the source
  std::map<StringId, std::string> contents_;
  std::set<std::string> content_set_;
  std::map<StringId, int> terminal_of_;
  CompactTrie ctrie_;
};

/// Insert-only dynamic engine: a forward DAWG for the F side and a DAWG of
/// reversed contents for the B side, feeding the shared ledger.
class DawgEngine {
 public:
  struct Added {
    StringId id = 0;
    OverlapList f;
    OverlapList b;
  };

  /// Registers the new string, updates both instances, computes F_i and
  /// B_i at threshold `ell`, and writes them to the ledger.
  Added add(std::string_view content, std::uint32_t ell);

  OverlapList snapshot() const { return ledger_.snapshot(); }

  const StringStore& store() const { return store_; }
  const OverlapLedger& ledger() const { return ledger_; }
  DawgIndex& forward_index() { return fwd_; }
  DawgIndex& reversed_index() { return rev_; }

 private:
  StringStore store_;
  OverlapLedger ledger_;
  DawgIndex fwd_;
  DawgIndex rev_;
};

}  // namespace apsp

#endif  // APSP_DAWG_HPP
