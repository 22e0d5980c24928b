#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "apsp/compact_trie.hpp"
#include "apsp/errors.hpp"
#include "test_support.hpp"

using namespace apsp;

namespace {

/// str -> id of every live node, by DFS. Canonical form for rebuild
/// equality: two tries are isomorphic iff these maps are equal (parents
/// are the longest proper prefixes present).
std::map<std::string, std::optional<StringId>> dump(const CompactTrie& t) {
  std::map<std::string, std::optional<StringId>> out;
  std::vector<CompactTrie::Handle> stack{t.root()};
  while (!stack.empty()) {
    CompactTrie::Handle h = stack.back();
    stack.pop_back();
    out[t.str_of(h)] = t.id_of(h);
    for (const auto& [c, child] : t.children_of(h)) stack.push_back(child);
  }
  return out;
}

CompactTrie build_fresh(const std::map<StringId, std::string>& alive) {
  CompactTrie t;
  for (const auto& [id, s] : alive) t.insert(id, s);
  return t;
}

}  // namespace

TEST_CASE("insert into empty trie hangs a terminal off the root") {
  CompactTrie t;
  auto oc = t.insert(1, "ab");
  CHECK_FALSE(oc.did_split);
  CHECK(oc.matched_len == 0);
  CHECK(t.str_of(oc.terminal) == "ab");
  CHECK(t.parent_of(oc.terminal) == t.root());
  CHECK(t.node_count() == 2);
  t.validate();
}

TEST_CASE("divergence inside an edge creates one branching mid node") {
  CompactTrie t;
  t.insert(1, "abaa");
  auto oc = t.insert(2, "abb");
  REQUIRE(oc.did_split);
  CHECK(t.str_of(oc.split_mid) == "ab");
  CHECK(t.str_of(oc.split_old_child) == "abaa");
  CHECK(oc.matched_len == 2);
  CHECK(t.str_of(oc.terminal) == "abb");
  CHECK(t.node_count() == 4);  // root, mid, two terminals
  t.validate();
  CHECK(dump(t) == dump(build_fresh({{1, "abaa"}, {2, "abb"}})));
}

TEST_CASE("extension of a terminal needs no mid node") {
  CompactTrie t;
  t.insert(1, "ab");
  auto oc = t.insert(2, "abc");
  CHECK_FALSE(oc.did_split);
  CHECK(oc.matched_len == 2);
  CHECK(t.str_of(t.parent_of(oc.terminal)) == "ab");
  CHECK(t.node_count() == 3);
  t.validate();
}

TEST_CASE("string ending inside an edge becomes an id-bearing mid node") {
  CompactTrie t;
  t.insert(1, "abaa");
  auto oc = t.insert(2, "ab");
  REQUIRE(oc.did_split);
  CHECK(oc.terminal == oc.split_mid);
  CHECK(oc.matched_len == 2);
  CHECK(t.id_of(oc.terminal) == StringId(2));
  t.validate();
}

TEST_CASE("duplicate content is rejected") {
  CompactTrie t;
  t.insert(1, "abaa");
  CHECK_THROWS_AS(t.insert(2, "abaa"), DuplicateStringError);
  CHECK_THROWS_AS(t.insert(3, ""), EmptyStringError);
}

TEST_CASE("delete merges the mid node away and forwards its handle") {
  CompactTrie t;
  t.insert(1, "abaa");
  auto oc2 = t.insert(2, "abb");
  CompactTrie::Handle mid = oc2.split_mid;
  auto rm = t.remove(2);
  CHECK(rm.removed.size() == 2);  // the leaf "abb" and the mid "ab"
  CHECK(t.str_of(t.resolve(mid)) == "abaa");
  CHECK(t.node_count() == 2);
  t.validate();
  CHECK(dump(t) == dump(build_fresh({{1, "abaa"}})));
}

TEST_CASE("deleting the only string leaves a bare root") {
  CompactTrie t;
  t.insert(1, "ab");
  t.remove(1);
  CHECK(t.node_count() == 1);
  CHECK(t.children_of(t.root()).empty());
  t.validate();
  CHECK_THROWS_AS(t.remove(1), UnknownIdError);
  CHECK_THROWS_AS(t.remove(7), UnknownIdError);
}

TEST_CASE("deleting a prefix terminal splices it out") {
  CompactTrie t;
  t.insert(1, "ab");
  auto oc = t.insert(2, "abc");
  CompactTrie::Handle node_ab = t.parent_of(oc.terminal);
  t.remove(1);
  CHECK(t.node_count() == 2);
  CHECK(t.str_of(t.resolve(node_ab)) == "abc");
  t.validate();
}

TEST_CASE("report_and_mark on the fig. 1 set") {
  CompactTrie t;
  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) t.insert(next++, s);
  CHECK(t.node_count() <= 2 * 9 + 1);

  CompactTrie::Handle node_ab = t.locate("ab");
  REQUIRE(node_ab != CompactTrie::kNoHandle);
  OverlapList out;
  t.report_and_mark(node_ab, 2, 5, out);
  CHECK(testsupport::sorted(out) ==
        OverlapList{{5, 1, 2}, {5, 2, 2}, {5, 3, 2}, {5, 4, 2}});

  // a marked root reports nothing new and re-marks idempotently
  OverlapList again;
  t.report_and_mark(node_ab, 2, 5, again);
  CHECK(again.empty());

  t.unmark_all();
  OverlapList zeros;
  t.report_and_mark(t.root(), 0, 5, zeros);
  CHECK(zeros.size() == 9);  // fresh marks: every id shows up once
  for (const OverlapRecord& r : zeros) CHECK(r.len == 0);
  t.unmark_all();
  t.unmark_all();  // second call is a no-op
}

TEST_CASE("marked subtrees are skipped, deeper reports win") {
  CompactTrie t;
  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) t.insert(next++, s);

  OverlapList out;
  t.report_and_mark(t.locate("bab"), 3, 5, out);  // ids 5, 6
  t.report_and_mark(t.locate("ab"), 2, 5, out);   // ids 1..4
  t.report_and_mark(t.locate("b"), 1, 5, out);    // ids 7, 8, 9 remain
  t.report_and_mark(t.root(), 0, 5, out);         // fully covered: nothing
  t.unmark_all();
  CHECK(testsupport::sorted(out) == OverlapList{{5, 1, 2},
                                                {5, 2, 2},
                                                {5, 3, 2},
                                                {5, 4, 2},
                                                {5, 5, 3},
                                                {5, 6, 3},
                                                {5, 7, 1},
                                                {5, 8, 1},
                                                {5, 9, 1}});
  // each id reported exactly once with its maximum overlap length
  std::set<StringId> seen;
  for (const OverlapRecord& r : out) CHECK(seen.insert(r.j).second);
}

TEST_CASE("rebuild equality under random insert/delete churn") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    CompactTrie t;
    std::map<StringId, std::string> alive;
    std::set<std::string> contents;
    StringId next = 1;
    for (int step = 0; step < 50; ++step) {
      bool do_insert = alive.empty() || (rng() % 3 != 0);
      if (do_insert) {
        std::string s = testsupport::gen_string(rng, 2, 1, 10);
        if (contents.count(s) > 0) continue;
        StringId id = next++;
        t.insert(id, s);
        alive[id] = s;
        contents.insert(s);
      } else {
        auto it = alive.begin();
        std::advance(it, rng() % alive.size());
        t.remove(it->first);
        contents.erase(it->second);
        alive.erase(it);
      }
      t.validate();
      CHECK(t.node_count() <= 2 * alive.size() + 1);
      CHECK(dump(t) == dump(build_fresh(alive)));

      std::set<std::string> want = testsupport::expected_ctrie_strings(
          {contents.begin(), contents.end()});
      std::set<std::string> got;
      for (const auto& [s, id] : dump(t)) got.insert(s);
      CHECK(got == want);
    }
  }
}

TEST_CASE("handle forwarding survives long merge chains") {
  CompactTrie t;
  t.insert(1, "aaaa");
  auto oc2 = t.insert(2, "aab");
  auto oc3 = t.insert(3, "ab");
  CompactTrie::Handle mid_aa = oc2.split_mid;
  CompactTrie::Handle mid_a = oc3.split_mid;
  REQUIRE(mid_aa != CompactTrie::kNoHandle);
  REQUIRE(mid_a != CompactTrie::kNoHandle);
  t.remove(2);
  t.remove(3);
  // both mids are gone; stale handles resolve to the surviving terminal
  CHECK(t.str_of(t.resolve(mid_aa)) == "aaaa");
  CHECK(t.str_of(t.resolve(mid_a)) == "aaaa");
  t.validate();
}
