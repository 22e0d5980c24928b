#include "apsp/compact_trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace apsp {

CompactTrie::CompactTrie() {
  nodes_.push_back(Node{});  // root: depth 0, empty string
  live_count_ = 1;
}

CompactTrie::Handle CompactTrie::new_node(Handle parent, std::string_view str) {
  Node n;
  n.parent = parent;
  n.str = std::string(str);
  n.depth = static_cast<std::uint32_t>(str.size());
  nodes_.push_back(std::move(n));
  live_count_++;
  return static_cast<Handle>(nodes_.size() - 1);
}

CompactTrie::InsertOutcome CompactTrie::insert(StringId id,
                                               std::string_view content) {
  if (content.empty()) throw EmptyStringError();
  InsertOutcome outcome;
  Handle cur = root();
  for (;;) {
    const Node& cn = nodes_[cur];
    std::size_t pos = cn.depth;
    if (pos == content.size()) {
      // Landed exactly on an existing node: it becomes the terminal.
      if (cn.id.has_value()) throw DuplicateStringError(std::string(content));
      nodes_[cur].id = id;
      terminal_of_[id] = cur;
      outcome.terminal = cur;
      outcome.matched_len = static_cast<std::uint32_t>(content.size());
      return outcome;
    }
    auto it = cn.children.find(content[pos]);
    if (it == cn.children.end()) {
      // No edge to follow: fresh terminal leaf under cur.
      Handle t = new_node(cur, content);
      nodes_[t].id = id;
      nodes_[cur].children[content[pos]] = t;
      terminal_of_[id] = t;
      outcome.terminal = t;
      outcome.matched_len = static_cast<std::uint32_t>(pos);
      return outcome;
    }
    Handle child = it->second;
    std::size_t edge_end = nodes_[child].depth;
    std::size_t m = pos;
    {
      const std::string& cs = nodes_[child].str;
      while (m < edge_end && m < content.size() && cs[m] == content[m]) ++m;
    }
    if (m == edge_end) {
      cur = child;
      continue;
    }
    // Divergence inside the edge: split at depth m. The fork character is
    // copied out first; new_node may reallocate the pool.
    char fork = nodes_[child].str[m];
    Handle mid = new_node(cur, content.substr(0, m));
    nodes_[cur].children[content[pos]] = mid;
    nodes_[mid].children[fork] = child;
    nodes_[child].parent = mid;
    outcome.did_split = true;
    outcome.split_old_child = child;
    outcome.split_mid = mid;
    outcome.matched_len = static_cast<std::uint32_t>(m);
    if (m == content.size()) {
      // Content ends on the split node: the mid node is the terminal.
      nodes_[mid].id = id;
      terminal_of_[id] = mid;
      outcome.terminal = mid;
    } else {
      Handle t = new_node(mid, content);
      nodes_[t].id = id;
      nodes_[mid].children[content[m]] = t;
      terminal_of_[id] = t;
      outcome.terminal = t;
    }
    return outcome;
  }
}

void CompactTrie::kill_node(Handle h, Handle forward_to, RemoveOutcome& out) {
  Node& n = nodes_[h];
  n.live = false;
  n.forward = forward_to;
  n.marked = false;
  n.children.clear();
  live_count_--;
  out.removed.push_back(h);
  out.forwards.emplace_back(h, forward_to);
}

CompactTrie::RemoveOutcome CompactTrie::remove(StringId id) {
  auto it = terminal_of_.find(id);
  if (it == terminal_of_.end()) throw UnknownIdError(id);
  Handle u = it->second;
  terminal_of_.erase(it);
  nodes_[u].id.reset();

  RemoveOutcome out;
  // Restore the node invariant at u, then possibly at its parent.
  Node& un = nodes_[u];
  if (u == root() || un.children.size() >= 2) return out;
  if (un.children.size() == 1) {
    // Non-branching, id-free: splice the single child up.
    Handle c = un.children.begin()->second;
    Handle p = un.parent;
    nodes_[c].parent = p;
    nodes_[p].children[un.str[nodes_[p].depth]] = c;
    kill_node(u, c, out);
    return out;
  }
  // Leaf without id: detach, then the parent may have become mergeable.
  Handle p = un.parent;
  nodes_[p].children.erase(un.str[nodes_[p].depth]);
  kill_node(u, p, out);
  Node& pn = nodes_[p];
  if (p != root() && !pn.id.has_value() && pn.children.size() == 1) {
    Handle c = pn.children.begin()->second;
    Handle pp = pn.parent;
    nodes_[c].parent = pp;
    nodes_[pp].children[pn.str[nodes_[pp].depth]] = c;
    kill_node(p, c, out);
  }
  return out;
}

CompactTrie::Handle CompactTrie::resolve(Handle h) const {
  if (h >= nodes_.size()) throw DeadHandleError();
  // Path compression: forward entries of dead nodes are collapsed as we go.
  Handle cur = h;
  while (!nodes_[cur].live) {
    cur = nodes_[cur].forward;
    if (cur >= nodes_.size()) throw DeadHandleError();
  }
  auto* self = const_cast<CompactTrie*>(this);
  while (!self->nodes_[h].live) {
    Handle next = self->nodes_[h].forward;
    self->nodes_[h].forward = cur;
    h = next;
  }
  return cur;
}

void CompactTrie::report_and_mark(Handle u, std::uint32_t overlap_len,
                                  StringId query_id, OverlapList& out) {
  Handle h = resolve(u);
  std::vector<Handle> stack{h};
  while (!stack.empty()) {
    Handle x = stack.back();
    stack.pop_back();
    Node& n = nodes_[x];
    stats_.touched++;
    if (n.marked) continue;  // subtree already reported at a longer overlap
    stats_.expanded++;
    if (n.id.has_value()) out.push_back({query_id, *n.id, overlap_len});
    for (const auto& [c, child] : n.children) stack.push_back(child);
  }
  if (!nodes_[h].marked) {
    nodes_[h].marked = true;
    marked_list_.push_back(h);
  }
}

void CompactTrie::unmark_all() {
  for (Handle h : marked_list_) nodes_[h].marked = false;
  marked_list_.clear();
}

CompactTrie::Handle CompactTrie::locate(std::string_view s) const {
  Handle cur = root();
  for (;;) {
    const Node& cn = nodes_[cur];
    if (cn.depth == s.size()) return cur;
    auto it = cn.children.find(s[cn.depth]);
    if (it == cn.children.end()) return kNoHandle;
    const Node& child = nodes_[it->second];
    std::size_t stop = std::min<std::size_t>(child.depth, s.size());
    for (std::size_t m = cn.depth; m < stop; ++m) {
      if (child.str[m] != s[m]) return kNoHandle;
    }
    if (s.size() < child.depth) return kNoHandle;  // ends mid-edge
    cur = it->second;
  }
}

void CompactTrie::validate() const {
  std::size_t seen = 0;
  std::vector<Handle> stack{root()};
  while (!stack.empty()) {
    Handle h = stack.back();
    stack.pop_back();
    const Node& n = nodes_[h];
    if (!n.live) throw std::logic_error("ctrie: dead node reachable");
    seen++;
    bool ok = h == root() || n.children.size() >= 2 || n.id.has_value();
    if (!ok) throw std::logic_error("ctrie: non-root, non-branching, id-free node");
    if (n.depth != n.str.size()) throw std::logic_error("ctrie: depth/str mismatch");
    for (const auto& [c, child] : n.children) {
      const Node& cn = nodes_[child];
      if (cn.parent != h) throw std::logic_error("ctrie: bad parent link");
      if (cn.depth <= n.depth) throw std::logic_error("ctrie: child not deeper");
      if (cn.str[n.depth] != c) throw std::logic_error("ctrie: bad child key");
      if (cn.str.compare(0, n.depth, n.str) != 0) {
        throw std::logic_error("ctrie: child string not an extension");
      }
      stack.push_back(child);
    }
  }
  if (seen != live_count_) throw std::logic_error("ctrie: live count drift");
  for (const auto& [id, h] : terminal_of_) {
    if (!nodes_[h].live || nodes_[h].id != id) {
      throw std::logic_error("ctrie: terminal map inconsistent");
    }
  }
}

}  // namespace apsp
