#include "apsp/dawg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "apsp/errors.hpp"

namespace apsp {

DawgIndex::DawgIndex() {
  nodes_.push_back(Node{});
  nodes_[0].member = true;  // the source is the trie root
  nodes_[0].des = ctrie_.root();
}

int DawgIndex::clone_of(int q, std::uint32_t new_len) {
  Node n;
  n.len = new_len;
  n.slink = nodes_[q].slink;
  n.next = nodes_[q].next;
  // The clone takes over the shorter strings of q's class; only the
  // longest string of a class can be a stored-string prefix, so the clone
  // starts as a non-member. The post-insert retrace re-marks it if its
  // longest string is a prefix of the new string.
  nodes_.push_back(std::move(n));
  int c = static_cast<int>(nodes_.size()) - 1;
  nodes_[q].slink = c;
  return c;
}

int DawgIndex::extend(int active, char c) {
  auto it = nodes_[active].next.find(c);
  if (it != nodes_[active].next.end()) {
    int q = it->second;
    if (nodes_[q].len == nodes_[active].len + 1) {
      return q;  // primary edge: the extended string already has its node
    }
    int nq = clone_of(q, nodes_[active].len + 1);
    for (int p = active; p != -1; p = nodes_[p].slink) {
      auto t = nodes_[p].next.find(c);
      if (t == nodes_[p].next.end() || t->second != q) break;
      t->second = nq;
    }
    return nq;
  }

  nodes_.push_back(Node{});
  int cur = static_cast<int>(nodes_.size()) - 1;
  nodes_[cur].len = nodes_[active].len + 1;
  int p = active;
  while (p != -1 && nodes_[p].next.count(c) == 0) {
    nodes_[p].next[c] = cur;
    p = nodes_[p].slink;
  }
  if (p == -1) {
    nodes_[cur].slink = 0;
    return cur;
  }
  int q = nodes_[p].next[c];
  if (nodes_[q].len == nodes_[p].len + 1) {
    nodes_[cur].slink = q;
    return cur;
  }
  int nq = clone_of(q, nodes_[p].len + 1);
  while (p != -1) {
    auto t = nodes_[p].next.find(c);
    if (t == nodes_[p].next.end() || t->second != q) break;
    t->second = nq;
    p = nodes_[p].slink;
  }
  nodes_[cur].slink = nq;
  return cur;
}

void DawgIndex::insert(StringId id, std::string_view content) {
  if (content.empty()) throw EmptyStringError();
  if (content_set_.count(std::string(content)) > 0) {
    throw DuplicateStringError(std::string(content));
  }
  int active = 0;
  for (char c : content) active = extend(active, c);
  contents_[id] = std::string(content);
  content_set_.insert(std::string(content));
}

void DawgIndex::mark_trie_path(StringId id) {
  auto it = contents_.find(id);
  if (it == contents_.end()) throw UnknownIdError(id);
  const std::string& s = it->second;
  int v = 0;
  std::uint32_t d = 0;
  for (char c : s) {
    v = nodes_[v].next.at(c);
    ++d;
    if (nodes_[v].len != d) {
      throw std::logic_error("dawg: stored-string path left the primary tree");
    }
    nodes_[v].member = true;
  }
  nodes_[v].id = id;
  terminal_of_[id] = v;
}

void DawgIndex::update_ctrie_for(StringId id) {
  const std::string& s = contents_.at(id);
  CompactTrie::InsertOutcome oc = ctrie_.insert(id, s);
  std::uint32_t keep_below;  // depths <= keep_below keep their des
  std::uint32_t mid_below = 0;  // depths in (keep_below, mid_below] take the mid
  if (oc.did_split) {
    keep_below = ctrie_.depth_of(ctrie_.parent_of(oc.split_mid));
    mid_below = ctrie_.depth_of(oc.split_mid);
  } else {
    keep_below = oc.matched_len;
  }
  int v = 0;
  std::uint32_t d = 0;
  for (char c : s) {
    v = nodes_[v].next.at(c);
    ++d;
    if (d <= keep_below) continue;
    if (oc.did_split && d <= mid_below) {
      nodes_[v].des = oc.split_mid;
    } else {
      nodes_[v].des = oc.terminal;
    }
  }
}

void DawgIndex::insert_string(StringId id, std::string_view content) {
  insert(id, content);
  mark_trie_path(id);
  update_ctrie_for(id);
}

OverlapList DawgIndex::query_forward(StringId id, std::uint32_t ell) {
  auto it = terminal_of_.find(id);
  if (it == terminal_of_.end()) throw UnknownIdError(id);
  OverlapList out;
  for (int v = it->second; v != -1; v = (v == 0 ? -1 : nodes_[v].slink)) {
    if (nodes_[v].len < ell) break;
    if (nodes_[v].member) {
      ctrie_.report_and_mark(nodes_[v].des, nodes_[v].len, id, out);
    }
  }
  ctrie_.unmark_all();
  return out;
}

std::size_t DawgIndex::transition_count() const {
  std::size_t total = 0;
  for (const Node& n : nodes_) total += n.next.size();
  return total;
}

int DawgIndex::state_of(std::string_view s) const {
  int v = 0;
  for (char c : s) {
    auto it = nodes_[v].next.find(c);
    if (it == nodes_[v].next.end()) return -1;
    v = it->second;
  }
  return v;
}

std::map<int, std::string> DawgIndex::all_longs() const {
  std::map<int, std::string> longs;
  longs[0] = "";
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& [c, w] : nodes_[v].next) {
      if (nodes_[w].len == nodes_[v].len + 1 && longs.count(w) == 0) {
        longs[w] = longs[v] + c;
        queue.push_back(w);
      }
    }
  }
  return longs;
}

DawgEngine::Added DawgEngine::add(std::string_view content, std::uint32_t ell) {
  StringId id = store_.register_string(content);
  fwd_.insert_string(id, content);
  std::string reversed(content.rbegin(), content.rend());
  rev_.insert_string(id, reversed);

  Added result;
  result.id = id;
  result.f = fwd_.query_forward(id, ell);
  OverlapList rev_f = rev_.query_forward(id, ell);
  result.b.reserve(rev_f.size());
  for (const OverlapRecord& r : rev_f) {
    result.b.push_back({r.j, r.i, r.len});  // prefixes and suffixes swap back
  }
  std::sort(result.f.begin(), result.f.end());
  std::sort(result.b.begin(), result.b.end());
  ledger_.ledger_set(id, result.f, result.b);
  return result;
}

}  // namespace apsp
