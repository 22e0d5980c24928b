#include "apsp/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

#include "apsp/errors.hpp"

namespace apsp {

SuffixTreeIndex::SuffixTreeIndex() {
  root_ = new_node();
  root_->des = ctrie_.root();
}

SuffixTreeIndex::StNode* SuffixTreeIndex::new_node() {
  pool_.emplace_back();
  live_count_++;
  return &pool_.back();
}

char SuffixTreeIndex::label_char(const StNode* v, std::uint32_t off) const {
  return content_of(v->label.j)[v->label.b + off];
}

std::uint32_t SuffixTreeIndex::edge_length(const StNode* v,
                                           std::uint32_t open_end) const {
  return (v->label.e == kOpenEnd ? open_end : v->label.e) - v->label.b;
}

SuffixTreeIndex::StNode* SuffixTreeIndex::split_edge(
    StNode* child, std::uint32_t off, std::vector<StNode*>& new_nodes) {
  StNode* parent = child->parent;
  StNode* w = new_node();
  w->parent = parent;
  w->label = {child->label.j, child->label.b, child->label.b + off};
  w->depth = parent->depth + off;
  // The new node stands in for the child on every path from above, so it
  // inherits the child's prefix membership, reporting handle, and one
  // alive occurrence below it.
  w->prefix_count = child->prefix_count;
  w->des = child->des;
  w->leaf_ptr = child->leaf_ptr;
  w->leaf_ptr_set = child->leaf_ptr_set;
  const std::string& jc = content_of(child->label.j);
  parent->children[jc[w->label.b]] = w;
  child->label.b += off;
  w->children[jc[child->label.b]] = child;
  child->parent = w;
  new_nodes.push_back(w);
  return w;
}

SuffixTreeIndex::StNode* SuffixTreeIndex::locate_explicit(
    std::string_view t, std::vector<StNode*>& new_nodes) {
  StNode* cur = root_;
  std::size_t d = 0;
  while (d < t.size()) {
    StNode* child = cur->children.at(t[d]);
    std::uint32_t el = child->label.e - child->label.b;
    std::size_t rem = t.size() - d;
    if (rem < el) {
      return split_edge(child, static_cast<std::uint32_t>(rem), new_nodes);
    }
    cur = child;
    d += el;
  }
  return cur;
}

SuffixTreeIndex::StNode* SuffixTreeIndex::locate_node(
    std::string_view t) const {
  const StNode* cur = root_;
  std::size_t d = 0;
  while (d < t.size()) {
    auto it = cur->children.find(t[d]);
    if (it == cur->children.end()) return nullptr;
    const StNode* child = it->second;
    const std::string& jc = content_of(child->label.j);
    std::uint32_t el = child->label.e - child->label.b;
    std::size_t take = std::min<std::size_t>(el, t.size() - d);
    for (std::size_t x = 0; x < take; ++x) {
      if (jc[child->label.b + x] != t[d + x]) return nullptr;
    }
    if (t.size() - d < el) return nullptr;  // ends mid-edge
    cur = child;
    d += el;
  }
  return const_cast<StNode*>(cur);
}

std::string SuffixTreeIndex::str_of(const StNode* v) const {
  if (v->depth == 0) return "";
  return content_of(v->leaf_ptr.first).substr(v->leaf_ptr.second, v->depth);
}

void SuffixTreeIndex::refresh_label(StNode* v) {
  v->label = {v->leaf_ptr.first, v->leaf_ptr.second + v->parent->depth,
              v->leaf_ptr.second + v->depth};
}

void SuffixTreeIndex::detach_from_parent(StNode* v) {
  // By pointer, not by label char: mid-deletion the label of a spliced
  // child is stale until the final refresh pass.
  StNode* p = v->parent;
  for (auto it = p->children.begin(); it != p->children.end(); ++it) {
    if (it->second == v) {
      p->children.erase(it);
      return;
    }
  }
  throw std::logic_error("stree: node not found under its parent");
}

void SuffixTreeIndex::insert(StringId id, std::string_view content) {
  if (content.empty()) throw EmptyStringError();
  std::string s(content);
  if (content_set_.count(s) > 0) throw DuplicateStringError(s);
  contents_[id] = s;
  content_set_.insert(s);
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());

  std::vector<StNode*> new_nodes;
  std::vector<StNode*> new_leaves;

  // Online construction, one character per phase. Leaves of the string
  // being inserted carry an open end until the string completes.
  StNode* active_node = root_;
  std::uint32_t active_edge = 0;
  std::uint32_t active_len = 0;
  std::uint32_t remainder = 0;
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const std::uint32_t open_end = pos + 1;
    remainder++;
    StNode* last_new = nullptr;
    while (remainder > 0) {
      if (active_len == 0) active_edge = pos;
      auto it = active_node->children.find(s[active_edge]);
      if (it == active_node->children.end()) {
        StNode* leaf = new_node();
        leaf->parent = active_node;
        leaf->label = {id, pos, kOpenEnd};
        active_node->children[s[active_edge]] = leaf;
        new_nodes.push_back(leaf);
        new_leaves.push_back(leaf);
        if (last_new != nullptr) {
          last_new->slink = active_node;
          last_new = nullptr;
        }
      } else {
        StNode* nxt = it->second;
        std::uint32_t el = edge_length(nxt, open_end);
        if (active_len >= el) {
          if (nxt->label.e == kOpenEnd) {
            throw std::logic_error("stree: walked into an open leaf edge");
          }
          active_node = nxt;
          active_edge += el;
          active_len -= el;
          continue;
        }
        if (label_char(nxt, active_len) == s[pos]) {
          if (last_new != nullptr && active_node != root_) {
            last_new->slink = active_node;
            last_new = nullptr;
          }
          active_len++;
          break;  // the suffix is already present; stop this phase
        }
        StNode* split = split_edge(nxt, active_len, new_nodes);
        StNode* leaf = new_node();
        leaf->parent = split;
        leaf->label = {id, pos, kOpenEnd};
        split->children[s[pos]] = leaf;
        new_nodes.push_back(leaf);
        new_leaves.push_back(leaf);
        if (last_new != nullptr) last_new->slink = split;
        last_new = split;
      }
      remainder--;
      if (active_node == root_ && active_len > 0) {
        active_len--;
        active_edge = pos - remainder + 1;
      } else if (active_node != root_) {
        active_node = active_node->slink != nullptr ? active_node->slink : root_;
      }
    }
  }

  // Freeze this string's leaves.
  for (StNode* leaf : new_leaves) {
    leaf->label.e = n;
    leaf->depth = leaf->parent->depth + (leaf->label.e - leaf->label.b);
  }

  // Make every remaining implicit suffix explicit.
  std::vector<StNode*> sn(n);
  for (std::uint32_t q = 0; q < n; ++q) {
    sn[q] = locate_explicit(std::string_view(s).substr(q), new_nodes);
  }
  for (std::uint32_t q = 0; q < n; ++q) sn[q]->occurrences.insert({id, q});

  // Leaf pointers, then labels, deepest node first so children are done
  // before their parents.
  std::sort(new_nodes.begin(), new_nodes.end(),
            [](const StNode* a, const StNode* b) { return a->depth > b->depth; });
  for (StNode* w : new_nodes) {
    if (!w->leaf_ptr_set) {
      if (!w->occurrences.empty()) {
        w->leaf_ptr = *w->occurrences.begin();
      } else if (!w->children.empty() &&
                 w->children.begin()->second->leaf_ptr_set) {
        w->leaf_ptr = w->children.begin()->second->leaf_ptr;
      } else {
        throw std::logic_error("stree: new node without a leaf pointer");
      }
      w->leaf_ptr_set = true;
    }
    refresh_label(w);
  }

  // Suffix links: the chain of this string's suffix nodes, then a walk
  // for any remaining branching node the online phase did not link.
  for (std::uint32_t q = 0; q < n; ++q) {
    sn[q]->slink = (q + 1 < n) ? sn[q + 1] : root_;
  }
  for (StNode* w : new_nodes) {
    if (w->slink == nullptr) {
      std::string t = str_of(w);
      w->slink = locate_node(std::string_view(t).substr(1));
      if (w->slink == nullptr) {
        throw std::logic_error("stree: suffix link target not explicit");
      }
    }
  }

  // Prefix-tree membership along the root path.
  StNode* terminal = sn[0];
  terminal->id = id;
  terminal_of_[id] = terminal;
  for (StNode* w = terminal; w != nullptr; w = w->parent) w->prefix_count++;

  // Reporting structure.
  CompactTrie::InsertOutcome oc = ctrie_.insert(id, s);
  std::uint32_t keep_below = oc.matched_len;
  std::uint32_t mid_below = 0;
  if (oc.did_split) {
    keep_below = ctrie_.depth_of(ctrie_.parent_of(oc.split_mid));
    mid_below = ctrie_.depth_of(oc.split_mid);
  }
  for (StNode* w = terminal; w != root_; w = w->parent) {
    if (w->depth <= keep_below) break;
    w->des = (oc.did_split && w->depth <= mid_below) ? oc.split_mid : oc.terminal;
  }
}

void SuffixTreeIndex::erase(StringId id) {
  auto it = terminal_of_.find(id);
  if (it == terminal_of_.end()) throw UnknownIdError(id);
  const std::string s = contents_.at(id);
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  StNode* terminal = it->second;
  terminal_of_.erase(it);
  terminal->id.reset();

  std::vector<StNode*> chain(n);
  {
    StNode* v = terminal;
    for (std::uint32_t q = 0; q < n; ++q) {
      chain[q] = v;
      v = v->slink;
    }
  }

  for (StNode* w = terminal; w != nullptr; w = w->parent) w->prefix_count--;
  for (std::uint32_t q = 0; q < n; ++q) chain[q]->occurrences.erase({id, q});

  // Every node that can cite the dying string (as a leaf pointer or edge
  // label) is an ancestor of one of its suffix nodes.
  std::set<StNode*> affected;
  for (std::uint32_t q = 0; q < n; ++q) {
    for (StNode* w = chain[q]; w != nullptr && affected.insert(w).second;
         w = w->parent) {
    }
  }

  // Structural pass, longest suffix first. A node goes away once it has
  // no suffix occurrences left, carries no id, and is not branching.
  for (std::uint32_t q = 0; q < n; ++q) {
    StNode* x = chain[q];
    while (x != nullptr && x != root_ && !x->dead && !x->id.has_value() &&
           x->occurrences.empty()) {
      if (x->children.empty()) {
        StNode* p = x->parent;
        detach_from_parent(x);
        x->dead = true;
        live_count_--;
        x = p;  // the parent may have lost its last child or its branch
      } else if (x->children.size() == 1) {
        StNode* c = x->children.begin()->second;
        StNode* p = x->parent;
        for (auto& [key, slot] : p->children) {
          if (slot == x) {
            slot = c;
            break;
          }
        }
        c->parent = p;
        // Provisional label over the merged edge; the final refresh pass
        // re-derives it again once leaf pointers are repaired.
        refresh_label(c);
        x->children.clear();
        x->dead = true;
        live_count_--;
        affected.insert(c);
        break;
      } else {
        break;
      }
    }
  }

  // Repair leaf pointers deepest-first, then re-derive the labels of the
  // whole affected region from them.
  std::vector<StNode*> region;
  for (StNode* x : affected) {
    if (!x->dead) region.push_back(x);
  }
  std::sort(region.begin(), region.end(),
            [](const StNode* a, const StNode* b) { return a->depth > b->depth; });
  for (StNode* x : region) {
    if (!x->leaf_ptr_set || x->leaf_ptr.first != id) continue;
    if (!x->occurrences.empty()) {
      x->leaf_ptr = *x->occurrences.begin();
      continue;
    }
    bool repaired = false;
    for (const auto& [c, child] : x->children) {
      if (child->leaf_ptr_set && child->leaf_ptr.first != id) {
        x->leaf_ptr = child->leaf_ptr;
        repaired = true;
        break;
      }
    }
    if (!repaired) {
      if (x == root_) {
        x->leaf_ptr_set = false;  // tree may have gone empty
        x->leaf_ptr = {0, 0};
      } else {
        throw std::logic_error("stree: no alive occurrence below node");
      }
    }
  }
  for (StNode* x : region) {
    if (x != root_) refresh_label(x);
  }

  ctrie_.remove(id);
  contents_.erase(id);
  content_set_.erase(s);
}

OverlapList SuffixTreeIndex::query_forward(StringId id, std::uint32_t ell) {
  auto it = terminal_of_.find(id);
  if (it == terminal_of_.end()) throw UnknownIdError(id);
  OverlapList out;
  for (StNode* v = it->second; v != nullptr;
       v = (v == root_ ? nullptr : v->slink)) {
    if (v->depth < ell) break;
    if (v->prefix_count > 0) {
      ctrie_.report_and_mark(v->des, v->depth, id, out);
    }
  }
  ctrie_.unmark_all();
  return out;
}

std::vector<SuffixTreeIndex::NodeView> SuffixTreeIndex::dump_nodes() const {
  std::vector<NodeView> out;
  std::vector<const StNode*> stack{root_};
  while (!stack.empty()) {
    const StNode* v = stack.back();
    stack.pop_back();
    NodeView view;
    view.str = str_of(v);
    view.depth = v->depth;
    view.suffix_count = v->occurrences.size();
    view.prefix_count = v->prefix_count;
    view.id = v->id;
    view.label_string = v->label.j;
    view.label_begin = v->label.b;
    view.label_end = v->label.e;
    view.leaf_ptr = v->leaf_ptr;
    view.has_slink = v->slink != nullptr;
    if (v->slink != nullptr) view.slink_str = str_of(v->slink);
    view.child_count = v->children.size();
    out.push_back(std::move(view));
    for (const auto& [c, child] : v->children) stack.push_back(child);
  }
  std::sort(out.begin(), out.end(),
            [](const NodeView& a, const NodeView& b) { return a.str < b.str; });
  return out;
}

std::optional<SuffixTreeIndex::NodeView> SuffixTreeIndex::find_node(
    std::string_view s) const {
  const StNode* v = locate_node(s);
  if (v == nullptr) return std::nullopt;
  NodeView view;
  view.str = std::string(s);
  view.depth = v->depth;
  view.suffix_count = v->occurrences.size();
  view.prefix_count = v->prefix_count;
  view.id = v->id;
  view.label_string = v->label.j;
  view.label_begin = v->label.b;
  view.label_end = v->label.e;
  view.leaf_ptr = v->leaf_ptr;
  view.has_slink = v->slink != nullptr;
  if (v->slink != nullptr) view.slink_str = str_of(v->slink);
  view.child_count = v->children.size();
  return view;
}

bool SuffixTreeIndex::is_explicit(std::string_view s) const {
  return locate_node(s) != nullptr;
}

StreeEngine::Added StreeEngine::add(std::string_view content,
                                    std::uint32_t ell) {
  StringId id = store_.register_string(content);
  fwd_.insert(id, content);
  std::string reversed(content.rbegin(), content.rend());
  rev_.insert(id, reversed);

  Added result;
  result.id = id;
  result.f = fwd_.query_forward(id, ell);
  OverlapList rev_f = rev_.query_forward(id, ell);
  result.b.reserve(rev_f.size());
  for (const OverlapRecord& r : rev_f) {
    result.b.push_back({r.j, r.i, r.len});
  }
  std::sort(result.f.begin(), result.f.end());
  std::sort(result.b.begin(), result.b.end());
  ledger_.ledger_set(id, result.f, result.b);
  return result;
}

void StreeEngine::erase(StringId id) {
  if (!store_.is_alive(id)) throw UnknownIdError(id);
  fwd_.erase(id);
  rev_.erase(id);
  ledger_.ledger_remove(id);
  store_.release(id);
}

}  // namespace apsp
