#include "apsp/ac_automaton.hpp"

#include <algorithm>
#include <deque>

#include "apsp/errors.hpp"

namespace apsp {

AcAutomaton AcAutomaton::build(
    const std::vector<std::pair<StringId, std::string>>& strings) {
  AcAutomaton ac;
  ac.nodes_.push_back(Node{});  // root

  for (const auto& [id, content] : strings) {
    if (content.empty()) throw EmptyStringError();
    int v = 0;
    for (char c : content) {
      auto it = ac.nodes_[v].children.find(c);
      if (it != ac.nodes_[v].children.end()) {
        v = it->second;
        continue;
      }
      Node n;
      n.parent = v;
      n.in_ch = c;
      n.depth = ac.nodes_[v].depth + 1;
      ac.nodes_.push_back(std::move(n));
      int w = static_cast<int>(ac.nodes_.size()) - 1;
      ac.nodes_[v].children[c] = w;
      v = w;
    }
    if (ac.nodes_[v].id.has_value()) throw DuplicateStringError(content);
    ac.nodes_[v].id = id;
    ac.terminal_of_[id] = v;
    ac.ctrie_.insert(id, content);
  }

  ac.build_failure_links();
  ac.assign_des();
  return ac;
}

void AcAutomaton::build_failure_links() {
  std::deque<int> queue;
  for (const auto& [c, child] : nodes_[0].children) {
    nodes_[child].flink = 0;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& [c, child] : nodes_[v].children) {
      int f = nodes_[v].flink;
      while (f != -1 && nodes_[f].children.count(c) == 0) {
        f = nodes_[f].flink;
      }
      nodes_[child].flink = (f == -1) ? 0 : nodes_[f].children.at(c);
      queue.push_back(child);
    }
  }
}

void AcAutomaton::assign_des() {
  // Lockstep walk of trie and ctrie: des(v) is the lower endpoint of the
  // ctrie edge v sits on (or v's own ctrie node when depths align).
  struct Frame {
    int trie_node;
    CompactTrie::Handle low;
  };
  std::vector<Frame> stack{{0, ctrie_.root()}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    nodes_[f.trie_node].des = f.low;
    for (const auto& [c, child] : nodes_[f.trie_node].children) {
      CompactTrie::Handle low = f.low;
      if (ctrie_.depth_of(low) == nodes_[f.trie_node].depth) {
        low = ctrie_.children_of(low).at(c);
      }
      stack.push_back({child, low});
    }
  }
}

OverlapList AcAutomaton::query(StringId i, std::uint32_t ell) {
  auto it = terminal_of_.find(i);
  if (it == terminal_of_.end()) throw UnknownIdError(i);
  OverlapList out;
  int v = it->second;
  for (;;) {
    if (nodes_[v].depth < ell) break;
    ctrie_.report_and_mark(nodes_[v].des, nodes_[v].depth, i, out);
    if (v == 0) break;
    v = nodes_[v].flink;
  }
  ctrie_.unmark_all();
  return out;
}

int AcAutomaton::find_node(std::string_view s) const {
  int v = 0;
  for (char c : s) {
    auto it = nodes_[v].children.find(c);
    if (it == nodes_[v].children.end()) return -1;
    v = it->second;
  }
  return v;
}

std::string AcAutomaton::node_str(int v) const {
  std::string s;
  while (v != 0) {
    s.push_back(nodes_[v].in_ch);
    v = nodes_[v].parent;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

OverlapList solve_static(
    const std::vector<std::pair<StringId, std::string>>& strings,
    std::uint32_t ell) {
  AcAutomaton ac = AcAutomaton::build(strings);
  OverlapList out;
  for (const auto& [id, content] : strings) {
    OverlapList part = ac.query(id, ell);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apsp
