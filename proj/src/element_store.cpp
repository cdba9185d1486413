#include "smallcox/element_store.hpp"

#include <cstring>
#include <stdexcept>

namespace smallcox {

  ElementStore::ElementStore(std::size_t element_bytes)
      : _width(element_bytes), _slots(64, empty) {}

  std::uint64_t ElementStore::hash(std::uint8_t const* element) const {
    // FNV-1a followed by a murmur finaliser.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < _width; ++i) {
      h ^= element[i];
      h *= 0x100000001b3ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
  }

  void ElementStore::grow() {
    std::vector<std::uint32_t> slots(_slots.size() * 2, empty);
    std::size_t const          mask = slots.size() - 1;
    for (std::uint32_t i = 0; i < _size; ++i) {
      std::size_t s = hash((*this)[i]) & mask;
      while (slots[s] != empty) {
        s = (s + 1) & mask;
      }
      slots[s] = i;
    }
    _slots = std::move(slots);
  }

  std::pair<std::uint32_t, bool>
  ElementStore::insert(std::uint8_t const* element) {
    if (2 * (_size + 1) > _slots.size()) {
      grow();
    }
    std::size_t const mask = _slots.size() - 1;
    std::size_t       s    = hash(element) & mask;
    while (_slots[s] != empty) {
      if (std::memcmp((*this)[_slots[s]], element, _width) == 0) {
        return {_slots[s], false};
      }
      s = (s + 1) & mask;
    }
    if (_size >= empty) {
      throw std::length_error("element store is full");
    }
    auto index = static_cast<std::uint32_t>(_size);
    _arena.insert(_arena.end(), element, element + _width);
    _slots[s] = index;
    ++_size;
    return {index, true};
  }

  std::optional<std::uint32_t>
  ElementStore::find(std::uint8_t const* element) const {
    std::size_t const mask = _slots.size() - 1;
    std::size_t       s    = hash(element) & mask;
    while (_slots[s] != empty) {
      if (std::memcmp((*this)[_slots[s]], element, _width) == 0) {
        return _slots[s];
      }
      s = (s + 1) & mask;
    }
    return std::nullopt;
  }

}  // namespace smallcox
