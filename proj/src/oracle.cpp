#include "apsp/oracle.hpp"

#include <algorithm>

namespace apsp::oracle {

std::uint32_t lspo_naive(std::string_view x, std::string_view y) {
  std::size_t max_len = std::min(x.size(), y.size());
  for (std::size_t len = max_len; len > 0; --len) {
    if (x.substr(x.size() - len) == y.substr(0, len)) {
      return static_cast<std::uint32_t>(len);
    }
  }
  return 0;
}

OverlapList apsp_naive(const NaiveSet& set, std::uint32_t ell) {
  OverlapList out;
  for (const auto& [i, si] : set) {
    for (const auto& [j, sj] : set) {
      std::uint32_t len = lspo_naive(si, sj);
      if (len >= ell) {
        out.push_back({i, j, len});
      }
    }
  }
  return out;
}

}  // namespace apsp::oracle
