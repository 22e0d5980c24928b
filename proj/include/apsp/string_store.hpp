#ifndef APSP_STRING_STORE_HPP
#define APSP_STRING_STORE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/errors.hpp"
#include "apsp/types.hpp"

namespace apsp {

/// One stored string. Content is immutable after registration; the record
/// itself outlives deletion so that ids can keep resolving to contents.
struct StringRecord {
  StringId id = 0;
  std::string content;
  bool alive = false;
};

/// Owns string identities and the alive set. Ids are issued sequentially
/// from 1 and never reused. At most one alive record per distinct content.
///
/// Single-writer: mutations require exclusive access.
class StringStore {
 public:
  StringId register_string(std::string_view content) {
    if (content.empty()) throw EmptyStringError();
    if (alive_by_content_.count(std::string(content)) > 0) {
      throw DuplicateStringError(std::string(content));
    }
    StringId id = next_id_++;
    records_.push_back({id, std::string(content), true});
    alive_by_content_.emplace(std::string(content), id);
    alive_count_++;
    total_alive_length_ += content.size();
    return id;
  }

  /// Marks an alive id as deleted. The record (and its content) stays
  /// addressable; only the alive flag drops.
  void release(StringId id) {
    StringRecord& rec = alive_record(id);
    rec.alive = false;
    alive_by_content_.erase(rec.content);
    alive_count_--;
    total_alive_length_ -= rec.content.size();
  }

  bool is_alive(StringId id) const {
    const StringRecord* rec = find(id);
    return rec != nullptr && rec->alive;
  }

  /// Content lookup works for dead ids too; structures may still hold a
  /// reference mid-operation.
  const std::string& content(StringId id) const {
    const StringRecord* rec = find(id);
    if (rec == nullptr) throw UnknownIdError(id);
    return rec->content;
  }

  const std::string& alive_content(StringId id) const {
    return alive_record(id).content;
  }

  std::vector<StringId> alive_ids() const {
    std::vector<StringId> out;
    for (const StringRecord& rec : records_) {
      if (rec.alive) out.push_back(rec.id);
    }
    return out;
  }

  std::size_t alive_count() const { return alive_count_; }
  std::size_t total_alive_length() const { return total_alive_length_; }

 private:
  const StringRecord* find(StringId id) const {
    if (id == 0 || id >= next_id_) return nullptr;
    return &records_[id - 1];
  }

  StringRecord& alive_record(StringId id) {
    if (id == 0 || id >= next_id_ || !records_[id - 1].alive) {
      throw UnknownIdError(id);
    }
    return records_[id - 1];
  }
  const StringRecord& alive_record(StringId id) const {
    return const_cast<StringStore*>(this)->alive_record(id);
  }

  std::vector<StringRecord> records_;  // index id-1
  std::map<std::string, StringId> alive_by_content_;
  StringId next_id_ = 1;
  std::size_t alive_count_ = 0;
  std::size_t total_alive_length_ = 0;
};

}  // namespace apsp

#endif  // APSP_STRING_STORE_HPP
