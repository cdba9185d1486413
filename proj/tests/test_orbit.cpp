#include <doctest.h>

#include <algorithm>
#include <cstring>
#include <numeric>
#include <random>
#include <set>

#include "smallcox/errors.hpp"
#include "smallcox/orbit.hpp"
#include "smallcox/quotient_map.hpp"

using namespace smallcox;

TEST_CASE("ElementStore behaves like an insertion-ordered set") {
  ElementStore                         store(5);
  std::vector<std::array<std::uint8_t, 5>> order;
  std::set<std::array<std::uint8_t, 5>>    oracle;
  std::mt19937                             rng(1);
  for (int t = 0; t < 20000; ++t) {
    std::array<std::uint8_t, 5> key{};
    for (auto& b : key) {
      b = static_cast<std::uint8_t>(rng() % 6);
    }
    auto [index, inserted] = store.insert(key.data());
    CHECK(inserted == oracle.insert(key).second);
    if (inserted) {
      CHECK(index == order.size());
      order.push_back(key);
    } else {
      CHECK(std::memcmp(store[index], key.data(), 5) == 0);
    }
  }
  CHECK(store.size() == oracle.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    CHECK(store.find(order[i].data()) == i);
    CHECK(std::equal(store.bytes(i).begin(), store.bytes(i).end(), order[i].begin()));
  }
  std::array<std::uint8_t, 5> absent{9, 9, 9, 9, 9};
  CHECK_FALSE(store.find(absent.data()).has_value());
}

TEST_CASE("permutation orbit has n! elements reached by shortlex words") {
  for (std::size_t n = 2; n <= 6; ++n) {
    Action a     = permutation_action(n - 1);
    Orbit  orbit = enumerate_orbit(a, default_budget, true);
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      f *= i;
    }
    CHECK(orbit.size() == f);
    std::size_t previous = 0;
    for (std::uint32_t i = 0; i < orbit.size(); ++i) {
      Word w = orbit.word(i);
      // Replaying the word from the identity lands on the element.
      std::vector<std::uint8_t> cur = a.identity, next(a.element_bytes);
      for (std::size_t letter : w) {
        a.apply(cur.data(), letter - 1, next.data());
        cur.swap(next);
      }
      CHECK(std::equal(cur.begin(), cur.end(), orbit.elements[i]));
      // Breadth-first: word lengths never decrease, and lengths match the
      // inversion count of the permutation.
      CHECK(w.size() >= previous);
      previous = w.size();
      std::size_t inversions = 0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          inversions += cur[x] > cur[y];
        }
      }
      CHECK(w.size() == inversions);
    }
    // The table is the right action.
    for (std::uint32_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g = 0; g + 1 < n; ++g) {
        std::vector<std::uint8_t> next(a.element_bytes);
        a.apply(orbit.elements[i], g, next.data());
        CHECK(orbit.table[i * (n - 1) + g] == *orbit.elements.find(next.data()));
      }
    }
  }
}

TEST_CASE("budget overflow is reported with the size reached") {
  try {
    enumerate_orbit(permutation_action(4), 100);
    FAIL("expected BudgetExceeded");
  } catch (BudgetExceeded const& e) {
    CHECK(e.cap() == 100);
    CHECK(e.reached() == 101);
  }
  CHECK_NOTHROW(enumerate_orbit(permutation_action(4), 120));
}

TEST_CASE("product of actions enumerates the generated subgroup of the product") {
  // S_3 paired with the sign: the diagonal is isomorphic to S_3.
  Orbit o = enumerate_orbit(product_action(permutation_action(2), parity_action(2)),
                            default_budget);
  CHECK(o.size() == 6);
  // S_3 with Z_2^2: the image is {(g, v) : sign g = parity of v}, so half
  // of the 24 pairs.
  Orbit p = enumerate_orbit(product_action(permutation_action(2), mod2_vector_action(2)),
                            default_budget);
  CHECK(p.size() == 12);
  CHECK_THROWS_AS(product_action(permutation_action(2), parity_action(3)), PreconditionError);
}
