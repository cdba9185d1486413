// Insertion-ordered set of fixed-width byte strings, used for every
// enumeration of a finite group or orbit.  Elements live contiguously in one
// arena; lookup goes through an open-addressing table of indices.

#ifndef SMALLCOX_ELEMENT_STORE_HPP_
#define SMALLCOX_ELEMENT_STORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace smallcox {

  class ElementStore {
   public:
    explicit ElementStore(std::size_t element_bytes);

    // Index of the element and whether it was newly inserted.
    std::pair<std::uint32_t, bool> insert(std::uint8_t const* element);
    std::optional<std::uint32_t>   find(std::uint8_t const* element) const;

    std::uint8_t const* operator[](std::uint32_t index) const {
      return _arena.data() + static_cast<std::size_t>(index) * _width;
    }
    std::span<std::uint8_t const> bytes(std::uint32_t index) const {
      return {(*this)[index], _width};
    }

    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t element_bytes() const noexcept {
      return _width;
    }

   private:
    static constexpr std::uint32_t empty = 0xffffffffu;

    std::uint64_t hash(std::uint8_t const* element) const;
    void          grow();

    std::size_t                _width;
    std::size_t                _size = 0;
    std::vector<std::uint8_t>  _arena;
    std::vector<std::uint32_t> _slots;
  };

}  // namespace smallcox

#endif  // SMALLCOX_ELEMENT_STORE_HPP_
