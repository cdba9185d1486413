// Holonomy representations of crystallographic quotients.  A kernel K of a
// finite quotient H of a Coxeter group is abelianized, and H acts on K/K' by
// conjugation; the quotient by K' is crystallographic exactly when this
// action is faithful on a torsion-free K/K'.

#ifndef SMALLCOX_CRYSTALLO_HPP_
#define SMALLCOX_CRYSTALLO_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "smallcox/coxeter.hpp"
#include "smallcox/matrix.hpp"
#include "smallcox/orbit.hpp"
#include "smallcox/quotient_map.hpp"

namespace smallcox {

  struct HolonomyReport {
    std::string       quotient;
    std::size_t       dimension      = 0;
    std::size_t       holonomy_order = 0;
    bool              faithful       = false;
    // Non-identity elements acting trivially, as words.
    std::vector<Word> kernel_witnesses;
  };

  // Action of a_k on Z^{2n-5} in the basis
  // (b0(1), b0(2), b1(2), ..., b0(n-2), b1(n-2)); column c is the image of
  // basis vector c.
  IntMatrix theta_generator_matrix(std::size_t n, std::size_t k);

  // Index of b_p(j) in the basis above (p = 0 for j = 1).
  std::size_t beta_index(std::size_t p, std::size_t j);
  // b_0(j) = s_{j+1} s_j s_{j+1} s_j and b_1(j) = s_{j-1} b_0(j) s_{j-1}.
  Word beta_word(std::size_t p, std::size_t j);

  // Enumerates all 2^{n-1} products of the generator matrices; the words in
  // the report list the a_k involved.
  HolonomyReport theta_faithfulness(std::size_t n);

  // Conjugation action of every element of the image on the free
  // abelianization of the kernel of the map.  Throws TorsionError if the
  // abelianization has torsion.
  HolonomyReport holonomy_via_conjugation(CoxeterSystem const&     system,
                                          FiniteQuotientMap const& map,
                                          std::size_t cap = default_budget);

  struct CrossCheck {
    bool        passed = false;
    bool        spans  = false;  // the beta words form a basis
    std::size_t mismatches = 0;  // generators whose matrices disagree
    std::string detail;
  };

  // Compares theta_generator_matrix with the conjugation action of s_k on
  // the abelianized commutator subgroup of T_n, written in the beta basis.
  CrossCheck theta_cross_check(std::size_t n);

}  // namespace smallcox

#endif  // SMALLCOX_CRYSTALLO_HPP_
