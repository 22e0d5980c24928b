#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <tuple>

#include "apsp/errors.hpp"
#include "apsp/oracle.hpp"
#include "apsp/suffix_tree.hpp"
#include "test_support.hpp"

using namespace apsp;
using Views = std::vector<SuffixTreeIndex::NodeView>;

namespace {

using Canon = std::vector<
    std::tuple<std::string, std::size_t, std::uint32_t, std::optional<StringId>,
               std::size_t>>;

Canon canonical(const SuffixTreeIndex& index) {
  Canon out;
  for (const auto& v : index.dump_nodes()) {
    out.emplace_back(v.str, v.suffix_count, v.prefix_count, v.id,
                     v.child_count);
  }
  return out;
}

SuffixTreeIndex build_fresh(const std::map<StringId, std::string>& alive) {
  SuffixTreeIndex index;
  for (const auto& [id, s] : alive) index.insert(id, s);
  return index;
}

/// Definition-level audit: node set and counts against the brute-force
/// expectation, explicitness of every suffix, label and leaf-pointer
/// liveness, and suffix-link targets.
void audit_stree(const SuffixTreeIndex& index,
                 const std::map<StringId, std::string>& alive) {
  auto expect = testsupport::expected_stree(alive);
  Views views = index.dump_nodes();
  REQUIRE(views.size() == expect.size());
  CHECK(index.node_count() == expect.size());
  for (const auto& v : views) {
    auto it = expect.find(v.str);
    REQUIRE(it != expect.end());
    CHECK(v.suffix_count == it->second.suffix_count);
    CHECK(v.prefix_count == it->second.prefix_count);
    CHECK(v.id == it->second.id);
    CHECK(v.depth == v.str.size());

    if (!v.str.empty()) {
      // label liveness and consistency with the node string
      REQUIRE(alive.count(v.label_string) == 1);
      const std::string& ls = alive.at(v.label_string);
      std::uint32_t el = v.label_end - v.label_begin;
      REQUIRE(v.label_end <= ls.size());
      REQUIRE(el <= v.str.size());
      CHECK(ls.substr(v.label_begin, el) == v.str.substr(v.str.size() - el));
      // leaf pointer liveness: an alive occurrence passing through
      REQUIRE(alive.count(v.leaf_ptr.first) == 1);
      const std::string& ps = alive.at(v.leaf_ptr.first);
      REQUIRE(v.leaf_ptr.second + v.depth <= ps.size());
      CHECK(ps.substr(v.leaf_ptr.second, v.depth) == v.str);
    }
    // suffix links exist on suffix nodes and branching nodes
    if (!v.str.empty() && (v.suffix_count > 0 || v.child_count >= 2)) {
      REQUIRE(v.has_slink);
      CHECK(v.slink_str == v.str.substr(1));
    }
  }
  for (const auto& [id, s] : alive) {
    for (std::size_t q = 0; q < s.size(); ++q) {
      CHECK(index.is_explicit(std::string_view(s).substr(q)));
    }
  }
  std::size_t n = 0;
  for (const auto& [id, s] : alive) n += s.size();
  CHECK(index.node_count() <= 2 * n + 1);
}

}  // namespace

TEST_CASE("inserting aa yields the two-node suffix chain") {
  SuffixTreeIndex index;
  index.insert(1, "aa");
  auto a = index.find_node("a");
  auto aa = index.find_node("aa");
  REQUIRE(a.has_value());
  REQUIRE(aa.has_value());
  CHECK(a->suffix_count == 1);
  CHECK(a->child_count == 1);  // non-branching internal suffix node
  CHECK(aa->suffix_count == 1);
  CHECK(aa->slink_str == "a");
  CHECK(aa->id == StringId(1));
  audit_stree(index, {{1, "aa"}});
}

TEST_CASE("bab is a non-branching internal suffix node of the fig. 1 tree") {
  SuffixTreeIndex index;
  std::map<StringId, std::string> alive;
  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) {
    alive[next] = s;
    index.insert(next, s);
    next++;
  }
  auto bab = index.find_node("bab");
  REQUIRE(bab.has_value());
  CHECK(bab->suffix_count == 1);   // a suffix of bab itself only
  CHECK(bab->child_count == 1);    // followed only by babaa's continuation
  CHECK(bab->id == StringId(5));
  audit_stree(index, alive);
}

TEST_CASE("prefix and suffix counts separate cleanly") {
  SuffixTreeIndex index;
  index.insert(1, "abaa");
  index.insert(2, "abb");
  auto ab = index.find_node("ab");
  REQUIRE(ab.has_value());
  CHECK(ab->prefix_count == 2);
  CHECK(ab->suffix_count == 0);
  audit_stree(index, {{1, "abaa"}, {2, "abb"}});
}

TEST_CASE("duplicate and empty insertions are rejected") {
  SuffixTreeIndex index;
  index.insert(1, "ab");
  CHECK_THROWS_AS(index.insert(2, "ab"), DuplicateStringError);
  CHECK_THROWS_AS(index.insert(2, ""), EmptyStringError);
  CHECK_THROWS_AS(index.erase(9), UnknownIdError);
  CHECK_THROWS_AS(index.query_forward(9, 0), UnknownIdError);
}

TEST_CASE("deleting the only string leaves a bare root") {
  SuffixTreeIndex index;
  index.insert(1, "ab");
  index.erase(1);
  CHECK(index.node_count() == 1);
  audit_stree(index, {});
  CHECK_THROWS_AS(index.erase(1), UnknownIdError);
}

TEST_CASE("shared suffixes survive the deletion of their first owner") {
  SuffixTreeIndex index;
  index.insert(1, "xab");
  index.insert(2, "cab");
  index.erase(1);
  auto ab = index.find_node("ab");
  auto b = index.find_node("b");
  REQUIRE(ab.has_value());
  REQUIRE(b.has_value());
  CHECK(ab->suffix_count == 1);
  CHECK(b->suffix_count == 1);
  CHECK_FALSE(index.is_explicit("xab"));
  audit_stree(index, {{2, "cab"}});
  CHECK(canonical(index) == canonical(build_fresh({{2, "cab"}})));
}

TEST_CASE("no surviving label cites a deleted string") {
  SuffixTreeIndex index;
  index.insert(1, "abaa");
  index.insert(2, "abb");
  index.erase(2);
  for (const auto& v : index.dump_nodes()) {
    if (!v.str.empty()) CHECK(v.label_string == StringId(1));
  }
  audit_stree(index, {{1, "abaa"}});
  CHECK(canonical(index) == canonical(build_fresh({{1, "abaa"}})));
}

TEST_CASE("query_forward on the fig. 1 set") {
  SuffixTreeIndex index;
  oracle::NaiveSet alive;
  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) {
    alive[next] = s;
    index.insert(next, s);
    next++;
  }
  OverlapList f9 = index.query_forward(9, 0);
  OverlapList expect;
  for (const auto& [j, sj] : alive) {
    expect.push_back({9, j, oracle::lspo_naive(alive.at(9), sj)});
  }
  CHECK(testsupport::sorted(f9) == testsupport::sorted(expect));
  for (const OverlapRecord& r : {OverlapRecord{9, 1, 1}, OverlapRecord{9, 2, 1},
                                 OverlapRecord{9, 3, 1}, OverlapRecord{9, 4, 1}}) {
    CHECK(std::count(f9.begin(), f9.end(), r) == 1);
  }
  // ell = 0 returns exactly one record per alive string
  CHECK(f9.size() == alive.size());
}

TEST_CASE("queries adapt after a deletion") {
  SuffixTreeIndex index;
  oracle::NaiveSet alive;
  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) {
    alive[next] = s;
    index.insert(next, s);
    next++;
  }
  index.erase(1);  // drop "abaa"
  alive.erase(1);
  OverlapList f6 = index.query_forward(6, 2);
  OverlapList expect;
  for (const auto& [j, sj] : alive) {
    std::uint32_t len = oracle::lspo_naive(alive.at(6), sj);
    if (len >= 2) expect.push_back({6, j, len});
  }
  CHECK(testsupport::sorted(f6) == testsupport::sorted(expect));
  CHECK(std::count(f6.begin(), f6.end(), OverlapRecord{6, 6, 5}) == 1);
  CHECK(std::count_if(f6.begin(), f6.end(), [](const OverlapRecord& r) {
          return r.j == 1;
        }) == 0);
  audit_stree(index, {alive.begin(), alive.end()});
}

TEST_CASE("engine stream add/del/add keeps the ledger on the oracle") {
  StreeEngine engine;
  engine.add("ab", 0);                 // id 1
  engine.add("ba", 0);                 // id 2
  engine.erase(1);
  StreeEngine::Added a3 = engine.add("ab", 0);  // fresh id
  CHECK(a3.id == 3);
  oracle::NaiveSet alive{{2, "ba"}, {3, "ab"}};
  CHECK(engine.snapshot() == oracle::apsp_naive(alive, 0));
}

TEST_CASE("deleting an unknown id leaves the ledger untouched") {
  StreeEngine engine;
  engine.add("ab", 0);
  OverlapList before = engine.snapshot();
  CHECK_THROWS_AS(engine.erase(42), UnknownIdError);
  CHECK_THROWS_AS(engine.erase(0), UnknownIdError);
  CHECK(engine.snapshot() == before);
}

TEST_CASE("an add/del pair is a no-op up to ids") {
  StreeEngine engine;
  engine.add("abab", 0);
  engine.add("bba", 0);
  OverlapList before = engine.snapshot();
  Canon tree_before = canonical(engine.forward_index());
  StreeEngine::Added a = engine.add("abba", 0);
  engine.erase(a.id);
  CHECK(engine.snapshot() == before);
  CHECK(canonical(engine.forward_index()) == tree_before);
}

TEST_CASE("random fully dynamic streams track the oracle") {
  std::mt19937_64 rng(601);
  for (int round = 0; round < 12; ++round) {
    std::uint32_t sigma = (round % 2 == 0) ? 2 : 4;
    StreeEngine engine;
    oracle::NaiveSet alive;
    std::set<std::string> contents;
    std::vector<StringId> ids;
    for (int step = 0; step < 60; ++step) {
      bool do_insert = ids.empty() || (rng() % 3 != 0);
      if (do_insert) {
        std::string s = testsupport::gen_string(rng, sigma, 1, 10);
        if (contents.count(s) > 0) continue;
        StreeEngine::Added a = engine.add(s, 0);
        alive[a.id] = s;
        contents.insert(s);
        ids.push_back(a.id);

        OverlapList expect_f, expect_b;
        for (const auto& [j, sj] : alive) {
          expect_f.push_back({a.id, j, oracle::lspo_naive(s, sj)});
          expect_b.push_back({j, a.id, oracle::lspo_naive(sj, s)});
        }
        CHECK(a.f == testsupport::sorted(expect_f));
        CHECK(a.b == testsupport::sorted(expect_b));
      } else {
        std::size_t pick = rng() % ids.size();
        StringId id = ids[pick];
        ids.erase(ids.begin() + pick);
        contents.erase(alive.at(id));
        engine.erase(id);
        alive.erase(id);
        // rebuild equality is the strongest deletion check
        std::map<StringId, std::string> amap{alive.begin(), alive.end()};
        CHECK(canonical(engine.forward_index()) ==
              canonical(build_fresh(amap)));
      }
      CHECK(engine.snapshot() == oracle::apsp_naive(alive, 0));
      if (step % 10 == 9) {
        std::map<StringId, std::string> amap{alive.begin(), alive.end()};
        audit_stree(engine.forward_index(), amap);
        std::map<StringId, std::string> rmap;
        for (const auto& [id, s] : amap) {
          rmap[id] = std::string(s.rbegin(), s.rend());
        }
        audit_stree(engine.reversed_index(), rmap);
      }
    }
  }
}

TEST_CASE("repetitive strings exercise splits and merges") {
  StreeEngine engine;
  std::vector<std::string> strings{"aaaa", "aaab", "abab", "baba",
                                   "bbbb", "ab",   "ba",   "aa"};
  std::map<StringId, std::string> alive;
  std::vector<StringId> ids;
  for (const std::string& s : strings) {
    StreeEngine::Added a = engine.add(s, 0);
    alive[a.id] = s;
    ids.push_back(a.id);
    audit_stree(engine.forward_index(), alive);
  }
  for (StringId id : {ids[0], ids[2], ids[7], ids[5]}) {
    engine.erase(id);
    alive.erase(id);
    audit_stree(engine.forward_index(), alive);
    CHECK(canonical(engine.forward_index()) == canonical(build_fresh(alive)));
    oracle::NaiveSet set{alive.begin(), alive.end()};
    CHECK(engine.snapshot() == oracle::apsp_naive(set, 0));
  }
}
