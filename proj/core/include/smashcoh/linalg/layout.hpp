#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace smashcoh {

/// Direct sum of mixed-radix index blocks. Within a slot the first digit is slowest.
class SlotLayout {
 public:
  int add_slot(std::vector<std::int64_t> radices);
  int slots() const { return static_cast<int>(radices_.size()); }
  std::int64_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::int64_t offset(int slot) const { return offsets_[static_cast<std::size_t>(slot)]; }
  std::int64_t slot_size(int slot) const { return offset(slot + 1) - offset(slot); }
  const std::vector<std::int64_t>& radices(int slot) const { return radices_[static_cast<std::size_t>(slot)]; }

  std::int64_t encode(int slot, std::initializer_list<std::int64_t> digits) const;
  std::int64_t encode(int slot, const std::vector<std::int64_t>& digits) const;
  /// Slot id and digits of a global index.
  std::pair<int, std::vector<std::int64_t>> decode(std::int64_t idx) const;

 private:
  std::vector<std::vector<std::int64_t>> radices_;
  std::vector<std::int64_t> offsets_{0};
};

}  // namespace smashcoh
