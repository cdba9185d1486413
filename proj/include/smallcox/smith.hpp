// Abelian groups given by generators and integer relations: Smith normal
// form invariants together with explicit coordinates on the quotient.

#ifndef SMALLCOX_SMITH_HPP_
#define SMALLCOX_SMITH_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "smallcox/matrix.hpp"

namespace smallcox {

  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;  // d_1 | d_2 | ..., each >= 2

    bool operator==(AbelianInvariants const&) const = default;
  };

  // "Z^r + Z_d1 + ...", or "0" for the trivial group.
  std::string format_invariants(AbelianInvariants const& inv);

  using SparseRow = std::map<std::size_t, BigInt>;

  // Diagonal of the Smith normal form of a dense matrix, computed with
  // pivots of least absolute value.  Optionally tracks Q and Q^{-1} with
  // P * A * Q = D.
  struct SmithResult {
    std::vector<BigInt>              diagonal;  // nonzero entries, in order
    std::vector<std::vector<BigInt>> q;
    std::vector<std::vector<BigInt>> q_inverse;
  };
  SmithResult smith_normal_form(std::vector<std::vector<BigInt>> a,
                                std::size_t columns, bool track = false);

  // Z^g modulo the row space of the relation rows.  Relations with a unit
  // coefficient are used to eliminate generators first; what remains goes
  // through a dense Smith normal form.
  class AbelianQuotient {
   public:
    AbelianQuotient(std::size_t generators, std::vector<SparseRow> relations);

    std::size_t generators() const noexcept {
      return _generators;
    }
    AbelianInvariants const& invariants() const noexcept {
      return _invariants;
    }

    // Coordinates of the class of x on the free part, Z^free_rank.
    std::vector<BigInt> free_coordinates(std::vector<BigInt> const& x) const;
    // Residues of the class of x on each torsion factor.
    std::vector<BigInt> torsion_coordinates(std::vector<BigInt> const& x) const;
    // A vector of Z^g whose class is the i-th free basis vector.
    std::vector<BigInt> free_basis_preimage(std::size_t i) const;

    // Free coordinates of each generator, one row per generator.
    std::vector<std::vector<BigInt>> const& generator_images() const noexcept {
      return _images;
    }

   private:
    std::vector<BigInt> survivor_coordinates(std::vector<BigInt> const& x) const;

    std::size_t _generators;
    // Generator eliminated at each step and its expression in the
    // generators alive at that step.
    std::vector<std::pair<std::size_t, SparseRow>> _eliminations;
    std::vector<std::size_t>                       _survivors;
    std::vector<BigInt>                            _diagonal;
    std::vector<std::vector<BigInt>>               _q;
    std::vector<std::vector<BigInt>>               _q_inverse;
    AbelianInvariants                              _invariants;
    // Survivor coordinates times Q, one row per generator.
    std::vector<std::vector<BigInt>>               _coordinates;
    std::vector<std::vector<BigInt>>               _images;
  };

}  // namespace smallcox

#endif  // SMALLCOX_SMITH_HPP_
