#include "apsp/overlap_ledger.hpp"

#include <algorithm>
#include <set>

#include "apsp/errors.hpp"

namespace apsp {

void OverlapLedger::ledger_set(StringId i, const OverlapList& f_records,
                               const OverlapList& b_records) {
  if (slot_of_.count(i) > 0) {
    throw std::logic_error("ledger_set: id already occupies a slot");
  }
  // Every referenced id must be alive, i.e. occupy a slot or be i itself.
  for (const OverlapRecord& r : f_records) {
    if (r.i != i) throw std::logic_error("ledger_set: F record not for i");
    if (r.j != i && slot_of_.count(r.j) == 0) throw UnknownIdError(r.j);
  }
  for (const OverlapRecord& r : b_records) {
    if (r.j != i) throw std::logic_error("ledger_set: B record not for i");
    if (r.i != i && slot_of_.count(r.i) == 0) throw UnknownIdError(r.i);
  }

  std::size_t s = allocate_slot(i);
  Slot& slot = slots_[s];
  for (const OverlapRecord& r : f_records) {
    slot.f[r.j] = r.len;
    if (r.j != i) slots_[slot_of_.at(r.j)].b[i] = r.len;
  }
  for (const OverlapRecord& r : b_records) {
    slot.b[r.i] = r.len;
    if (r.i != i) slots_[slot_of_.at(r.i)].f[i] = r.len;
  }
}

void OverlapLedger::ledger_remove(StringId i) {
  auto it = slot_of_.find(i);
  if (it == slot_of_.end()) throw UnknownIdError(i);
  std::size_t s = it->second;
  slots_[s] = Slot{};
  slot_of_.erase(it);
  for (auto& [id, t] : slot_of_) {
    slots_[t].f.erase(i);
    slots_[t].b.erase(i);
  }
  while (slots_.size() > kMinCapacity && 4 * slot_of_.size() <= slots_.size()) {
    rebuild(slots_.size() / 2);
  }
}

OverlapList OverlapLedger::snapshot() const {
  std::set<OverlapRecord> seen;
  for (const Slot& slot : slots_) {
    if (!slot.used) continue;
    for (const auto& [j, len] : slot.f) seen.insert({slot.id, j, len});
    for (const auto& [j, len] : slot.b) seen.insert({j, slot.id, len});
  }
  return OverlapList(seen.begin(), seen.end());
}

std::size_t OverlapLedger::allocate_slot(StringId i) {
  if (slot_of_.size() == slots_.size()) {
    rebuild(slots_.size() * 2);
  }
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (!slots_[s].used) {
      slots_[s].used = true;
      slots_[s].id = i;
      slot_of_[i] = s;
      return s;
    }
  }
  throw std::logic_error("ledger: no free slot after growth");
}

void OverlapLedger::rebuild(std::size_t new_capacity) {
  std::vector<Slot> fresh(new_capacity);
  std::size_t next = 0;
  for (auto& [id, s] : slot_of_) {
    fresh[next] = std::move(slots_[s]);
    s = next++;
  }
  slots_ = std::move(fresh);
}

}  // namespace apsp
