#include "smashcoh/linalg/layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace smashcoh {

int SlotLayout::add_slot(std::vector<std::int64_t> radices) {
  std::int64_t n = 1;
  for (auto r : radices) n *= r;
  radices_.push_back(std::move(radices));
  offsets_.push_back(offsets_.back() + n);
  return slots() - 1;
}

std::int64_t SlotLayout::encode(int slot, std::initializer_list<std::int64_t> digits) const {
  const auto& r = radices(slot);
  std::int64_t idx = 0;
  std::size_t i = 0;
  for (auto d : digits) idx = idx * r[i++] + d;
  return offset(slot) + idx;
}

std::int64_t SlotLayout::encode(int slot, const std::vector<std::int64_t>& digits) const {
  const auto& r = radices(slot);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) idx = idx * r[i] + digits[i];
  return offset(slot) + idx;
}

std::pair<int, std::vector<std::int64_t>> SlotLayout::decode(std::int64_t idx) const {
  if (idx < 0 || idx >= size()) throw std::out_of_range("SlotLayout::decode: index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), idx);
  int slot = static_cast<int>(it - offsets_.begin()) - 1;
  const auto& r = radices(slot);
  std::vector<std::int64_t> digits(r.size());
  std::int64_t rest = idx - offset(slot);
  for (std::size_t i = r.size(); i-- > 0;) {
    digits[i] = rest % r[i];
    rest /= r[i];
  }
  return {slot, digits};
}

}  // namespace smashcoh
