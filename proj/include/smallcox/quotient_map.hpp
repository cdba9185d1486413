// Homomorphisms from a Coxeter group onto explicit finite groups: the
// natural map to S_n, reduction of the Tits representation mod m, the mod-2
// abelianisation, the length parity and the trivial map.

#ifndef SMALLCOX_QUOTIENT_MAP_HPP_
#define SMALLCOX_QUOTIENT_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smallcox/coxeter.hpp"
#include "smallcox/orbit.hpp"

namespace smallcox {

  enum class QuotientKind { symmetric, modular, mod2_abelian, parity, trivial };

  QuotientKind parse_quotient_kind(std::string const& name);
  std::string  quotient_kind_name(QuotientKind kind);

  // s_i acts on permutation arrays by swapping positions i and i+1.
  Action permutation_action(std::size_t generators);
  // s_i flips coordinate i of a vector in Z_2^r (one byte per coordinate).
  Action mod2_vector_action(std::size_t generators);
  // every generator flips a single bit.
  Action parity_action(std::size_t generators);
  Action trivial_action(std::size_t generators);

  class FiniteQuotientMap {
   public:
    // Throws ValidationError when the images fail a Coxeter relation.
    FiniteQuotientMap(CoxeterSystem system, QuotientKind kind,
                      std::uint32_t modulus = 0);

    CoxeterSystem const& system() const noexcept {
      return _system;
    }
    QuotientKind kind() const noexcept {
      return _kind;
    }
    std::uint32_t modulus() const noexcept {
      return _modulus;
    }
    Action const& action() const noexcept {
      return _action;
    }

    std::vector<std::uint8_t> image(Word const& word) const;
    // Human-readable image of each generator.
    std::vector<std::string> generator_images() const;

   private:
    CoxeterSystem _system;
    QuotientKind  _kind;
    std::uint32_t _modulus;
    Action        _action;
  };

  FiniteQuotientMap quotient_map(CoxeterSystem const& system, QuotientKind kind,
                                 std::uint32_t modulus = 0);

  // Sign of a permutation given as an array of 0-based images.
  bool is_even_permutation(std::span<std::uint8_t const> perm);

}  // namespace smallcox

#endif  // SMALLCOX_QUOTIENT_MAP_HPP_
