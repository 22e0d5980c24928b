#ifndef APSP_ORACLE_HPP
#define APSP_ORACLE_HPP

#include <map>
#include <string>
#include <string_view>

#include "apsp/types.hpp"

namespace apsp::oracle {

/// Alive strings by id, mirroring an engine's alive set.
using NaiveSet = std::map<StringId, std::string>;

/// Length of the longest suffix of `x` that is a prefix of `y`,
/// by direct character comparison, scanning lengths downward.
/// Deliberately simple: this is the reference everything else is
/// checked against.
std::uint32_t lspo_naive(std::string_view x, std::string_view y);

/// All ordered pairs (i, j) of alive strings with overlap length >= ell.
/// Zero-length records are included exactly when ell == 0. Output is
/// sorted by (i, j).
OverlapList apsp_naive(const NaiveSet& set, std::uint32_t ell);

}  // namespace apsp::oracle

#endif  // APSP_ORACLE_HPP
