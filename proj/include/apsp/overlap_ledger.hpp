#ifndef APSP_OVERLAP_LEDGER_HPP
#define APSP_OVERLAP_LEDGER_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "apsp/types.hpp"

namespace apsp {

/// The output ledger: two growable arrays F and B indexed by internal slot.
/// Slot s of string i holds F[s] = { lspo(i, j) : j alive } keyed by j and
/// B[s] = { lspo(j, i) : j alive } keyed by j. Arrays are rebuilt at double
/// capacity when full and at half capacity when occupancy falls to a
/// quarter; external ids stay stable behind the id -> slot map.
///
/// Single-writer; snapshot() may run concurrently with other readers only.
class OverlapLedger {
 public:
  static constexpr std::size_t kMinCapacity = 4;

  OverlapLedger() : slots_(kMinCapacity) {}

  /// Installs the overlap sets of a newly inserted string and mirrors the
  /// cross entries into the other occupied slots.
  void ledger_set(StringId i, const OverlapList& f_records,
                  const OverlapList& b_records);

  /// Frees the slot of `i` and removes every record mentioning `i` from the
  /// other slots. O(k) for k occupied slots.
  void ledger_remove(StringId i);

  /// Deduplicated union of all F and B slot contents, sorted by (i, j).
  OverlapList snapshot() const;

  std::size_t capacity() const { return slots_.size(); }
  std::size_t occupied() const { return slot_of_.size(); }
  bool contains(StringId i) const { return slot_of_.count(i) > 0; }

  /// Internal slot of an occupied id; for slot audits in tests.
  std::size_t slot_of(StringId i) const { return slot_of_.at(i); }

  const std::map<StringId, std::uint32_t>& forward_of(StringId i) const {
    return slots_[slot_of_.at(i)].f;
  }
  const std::map<StringId, std::uint32_t>& backward_of(StringId i) const {
    return slots_[slot_of_.at(i)].b;
  }

 private:
  struct Slot {
    bool used = false;
    StringId id = 0;
    std::map<StringId, std::uint32_t> f;  // j -> |lspo(id, j)|
    std::map<StringId, std::uint32_t> b;  // j -> |lspo(j, id)|
  };

  std::size_t allocate_slot(StringId i);
  void rebuild(std::size_t new_capacity);

  std::vector<Slot> slots_;
  std::map<StringId, std::size_t> slot_of_;
};

}  // namespace apsp

#endif  // APSP_OVERLAP_LEDGER_HPP
