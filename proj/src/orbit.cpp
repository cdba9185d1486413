#include "smallcox/orbit.hpp"

#include <algorithm>
#include <cstring>

#include "smallcox/errors.hpp"

namespace smallcox {

  Action product_action(Action const& first, Action const& second) {
    if (first.generator_count != second.generator_count) {
      throw PreconditionError("paired actions need the same generators");
    }
    Action      a;
    std::size_t split = first.element_bytes;
    a.element_bytes   = first.element_bytes + second.element_bytes;
    a.generator_count = first.generator_count;
    a.identity        = first.identity;
    a.identity.insert(a.identity.end(), second.identity.begin(),
                      second.identity.end());
    a.apply = [first, second, split](std::uint8_t const* in, std::size_t g,
                                     std::uint8_t* out) {
      first.apply(in, g, out);
      second.apply(in + split, g, out + split);
    };
    return a;
  }

  Word Orbit::word(std::uint32_t index) const {
    Word w;
    while (parent[index] != no_parent) {
      w.push_back(static_cast<std::size_t>(parent_generator[index]) + 1);
      index = parent[index];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  Orbit enumerate_orbit(Action const& action, std::size_t cap,
                        bool record_table) {
    if (action.identity.size() != action.element_bytes) {
      throw PreconditionError("identity has the wrong width");
    }
    Orbit orbit(action.element_bytes);
    orbit.generator_count = action.generator_count;
    orbit.elements.insert(action.identity.data());
    orbit.parent.push_back(no_parent);
    orbit.parent_generator.push_back(0);

    std::vector<std::uint8_t> current(action.element_bytes);
    std::vector<std::uint8_t> next(action.element_bytes);
    for (std::uint32_t i = 0; i < orbit.elements.size(); ++i) {
      // Copy first: inserting may reallocate the arena.
      std::memcpy(current.data(), orbit.elements[i], action.element_bytes);
      for (std::size_t g = 0; g < action.generator_count; ++g) {
        action.apply(current.data(), g, next.data());
        auto [index, inserted] = orbit.elements.insert(next.data());
        if (inserted) {
          if (orbit.elements.size() > cap) {
            throw BudgetExceeded(cap, orbit.elements.size());
          }
          orbit.parent.push_back(i);
          orbit.parent_generator.push_back(static_cast<std::uint8_t>(g));
        }
        if (record_table) {
          orbit.table.push_back(index);
        }
      }
    }
    return orbit;
  }

}  // namespace smallcox
