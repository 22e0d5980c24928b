#ifndef APSP_TYPES_HPP
#define APSP_TYPES_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace apsp {

/// External identifier of a stored string. Ids are assigned in insertion
/// order starting at 1 and are never reused, even after deletion.
using StringId = std::uint64_t;

/// One directed overlap: the longest suffix of string `i` that is a prefix
/// of string `j` has length `len`.
struct OverlapRecord {
  StringId i = 0;
  StringId j = 0;
  std::uint32_t len = 0;

  friend auto operator<=>(const OverlapRecord&, const OverlapRecord&) = default;
};

std::ostream& operator<<(std::ostream& os, const OverlapRecord& r);

using OverlapList = std::vector<OverlapRecord>;

}  // namespace apsp

#endif  // APSP_TYPES_HPP
