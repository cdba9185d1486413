// Finite images rho_m(W) of small Coxeter groups, principal congruence
// membership, and image-level certificates for the quotient theorems about
// congruence subgroups of twin groups.

#ifndef SMALLCOX_CONGRUENCE_HPP_
#define SMALLCOX_CONGRUENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcox/coxeter.hpp"
#include "smallcox/matrix.hpp"
#include "smallcox/orbit.hpp"

namespace smallcox {

  // Modular matrix action of a small system's generators.
  Action modular_action(CoxeterSystem const& system, std::uint32_t modulus);

  class FiniteMatrixGroup {
   public:
    // Elements are given in enumeration order and must start with the
    // identity.
    FiniteMatrixGroup(std::uint32_t modulus, std::size_t dimension,
                      std::vector<ModMatrix> generators, ElementStore elements);

    std::uint32_t modulus() const noexcept {
      return _modulus;
    }
    std::size_t dimension() const noexcept {
      return _dim;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<ModMatrix> const& generators() const noexcept {
      return _generators;
    }

    ModMatrix element(std::size_t index) const;
    bool      contains(ModMatrix const& m) const;

    // Multiplies random pairs and inverts random elements, checking the
    // results stay inside the set.
    bool spot_check_closure(std::size_t samples, std::uint64_t seed) const;

   private:
    std::uint32_t          _modulus;
    std::size_t            _dim;
    std::vector<ModMatrix> _generators;
    ElementStore           _elements;
  };

  // Breadth-first closure of rho_m(W) under right multiplication by the
  // generators, in shortlex order.  Throws BudgetExceeded beyond cap.
  FiniteMatrixGroup enumerate_image(CoxeterSystem const& system,
                                    std::uint32_t        modulus,
                                    std::size_t          cap = default_budget);

  bool congruence_member(CoxeterSystem const& system, Word const& word,
                         std::uint32_t modulus);

  // Elements of the group congruent to the identity modulo a divisor of its
  // modulus.  The result carries a small generating set found greedily.
  FiniteMatrixGroup reduction_kernel(FiniteMatrixGroup const& group,
                                     std::uint32_t            divisor);

  // Subgroup generated by the given elements, as a set.
  FiniteMatrixGroup generated_subgroup(std::uint32_t modulus, std::size_t dim,
                                       std::vector<ModMatrix> const& generators,
                                       std::size_t cap = default_budget);

  struct QuotientCheck {
    bool        passed       = false;
    std::size_t kernel_order = 0;  // |T_n[m] / T_n[km]|
    std::size_t image_order  = 0;  // size of the paired enumeration
    std::string detail;
  };

  // T_n[m]/T_n[3m] maps isomorphically onto A_n under the natural map to S_n.
  QuotientCheck check_quotient_alternating(std::size_t n, unsigned m,
                                           std::size_t cap = default_budget);

  // T_n[m]/T_n[4m] maps isomorphically onto the even-weight vectors of
  // Z_2^{n-1} under abelianisation.
  QuotientCheck check_quotient_even_vectors(std::size_t n, unsigned m,
                                            std::size_t cap = default_budget);

  // |T_n[m]/T_n[12m]| equals the product of the two component orders, the
  // 12m-image enumerated as pairs (mod 12, mod m).
  QuotientCheck check_quotient_product(std::size_t n, unsigned m,
                                       std::size_t cap = default_budget);

  struct ProductGenerationCheck {
    bool        passed          = false;
    std::size_t group_order     = 0;
    std::size_t even_order      = 0;
    std::size_t generated_order = 0;
  };

  // Inside rho_{mk}(T_n), the kernels of reduction mod m and mod k generate
  // exactly the determinant-one elements.
  ProductGenerationCheck product_generation_check(std::size_t n, unsigned m,
                                                  unsigned    k,
                                                  std::size_t cap
                                                  = default_budget);

  // Least k >= 1 with rho((s_1 s_2)^k) = I mod m.
  std::size_t minimal_congruence_power(unsigned m);

  // Header "modulus m, dimension d, order N" followed by the elements in
  // matrix text format, each preceded by a blank line.
  std::string format_group_dump(FiniteMatrixGroup const& group);

  struct GroupDump {
    std::uint32_t          modulus   = 0;
    std::size_t            dimension = 0;
    std::vector<ModMatrix> elements;
  };
  GroupDump parse_group_dump(std::string const& text);

}  // namespace smallcox

#endif  // SMALLCOX_CONGRUENCE_HPP_
