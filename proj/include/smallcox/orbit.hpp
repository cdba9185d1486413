// Breadth-first enumeration of the right Cayley graph of a finite image.

#ifndef SMALLCOX_ORBIT_HPP_
#define SMALLCOX_ORBIT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "smallcox/coxeter.hpp"
#include "smallcox/element_store.hpp"

namespace smallcox {

  inline constexpr std::size_t default_budget = 10'000'000;

  // Right action of the generators on fixed-width encoded elements.
  struct Action {
    std::size_t               element_bytes   = 0;
    std::size_t               generator_count = 0;
    std::vector<std::uint8_t> identity;
    // apply(in, g, out) writes in * generator(g), g 0-based.
    std::function<void(std::uint8_t const*, std::size_t, std::uint8_t*)> apply;
  };

  // Pairs elements of two actions over the same generators.
  Action product_action(Action const& first, Action const& second);

  struct Orbit {
    explicit Orbit(std::size_t element_bytes) : elements(element_bytes) {}

    ElementStore               elements;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint8_t>  parent_generator;
    // element * generator, indexed element * generator_count + g; filled only
    // when requested.
    std::vector<std::uint32_t> table;
    std::size_t                generator_count = 0;

    std::size_t size() const noexcept {
      return elements.size();
    }
    // Shortlex-least word (1-based letters) reaching the element.
    Word word(std::uint32_t index) const;
  };

  inline constexpr std::uint32_t no_parent = 0xffffffffu;

  // Elements are discovered in shortlex order of their least words.  Throws
  // BudgetExceeded once more than cap elements appear.
  Orbit enumerate_orbit(Action const& action, std::size_t cap,
                        bool record_table = false);

}  // namespace smallcox

#endif  // SMALLCOX_ORBIT_HPP_
