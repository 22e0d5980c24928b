#include <doctest.h>

#include "apsp/oracle.hpp"
#include "test_support.hpp"

using namespace apsp;
using oracle::apsp_naive;
using oracle::lspo_naive;

TEST_CASE("lspo_naive basic values") {
  CHECK(lspo_naive("bab", "abaa") == 2);
  CHECK(lspo_naive("abc", "abc") == 3);
  CHECK(lspo_naive("aaa", "bbb") == 0);
  CHECK(lspo_naive("babaa", "abaa") == 4);
  CHECK(lspo_naive("babaa", "bab") == 0);  // no suffix of babaa is a bab prefix
  CHECK(lspo_naive("bab", "babaa") == 3);
  CHECK(lspo_naive("bb", "bbaa") == 2);
  CHECK(lspo_naive("bbba", "abaa") == 1);
}

TEST_CASE("lspo_naive self overlap is the whole string, not symmetric") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::string x = testsupport::gen_string(rng, 3, 1, 15);
    CHECK(lspo_naive(x, x) == x.size());
  }
  CHECK(lspo_naive("ab", "ba") == 1);
  CHECK(lspo_naive("ba", "ab") == 1);
  CHECK(lspo_naive("aab", "abb") == 2);
  CHECK(lspo_naive("abb", "aab") == 0);
}

TEST_CASE("apsp_naive covers all ordered pairs") {
  oracle::NaiveSet set;
  CHECK(apsp_naive(set, 0).empty());

  StringId next = 1;
  for (const std::string& s : testsupport::fig1_strings()) set[next++] = s;
  OverlapList all = apsp_naive(set, 0);
  CHECK(all.size() == 81);  // k^2 for k = 9
  CHECK(std::count(all.begin(), all.end(), OverlapRecord{6, 1, 4}) == 1);
  CHECK(std::count(all.begin(), all.end(), OverlapRecord{7, 8, 2}) == 1);

  OverlapList bounded = apsp_naive(set, 6);
  for (const OverlapRecord& r : bounded) CHECK(r.len >= 6);
  // only self pairs of length >= 6 survive: none (max length is 5)
  CHECK(bounded.empty());
}
