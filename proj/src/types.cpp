#include "apsp/types.hpp"

#include <ostream>

namespace apsp {

std::ostream& operator<<(std::ostream& os, const OverlapRecord& r) {
  return os << "(" << r.i << "," << r.j << "," << r.len << ")";
}

}  // namespace apsp
