// Subgroup presentations of finite-index kernels.  Coset tables come from
// the Cayley graph of a finite image, relators are rewritten into Schreier
// generators, and abelianizations are computed over the integers.

#ifndef SMALLCOX_REWRITING_HPP_
#define SMALLCOX_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcox/coxeter.hpp"
#include "smallcox/matrix.hpp"
#include "smallcox/orbit.hpp"
#include "smallcox/quotient_map.hpp"
#include "smallcox/smith.hpp"

namespace smallcox {

  // Letters are signed 1-based generator indices; -i is the inverse of i.
  using Relator = std::vector<int>;

  struct Presentation {
    std::size_t          generators = 0;
    std::vector<Relator> relators;

    bool operator==(Presentation const&) const = default;
  };

  void validate_presentation(Presentation const& pres);

  Relator free_reduce(Relator const& r);
  Relator cyclic_reduce(Relator const& r);
  Relator invert(Relator const& r);
  Relator to_relator(Word const& word);

  // One generator per Coxeter generator; the squares w_i^2 followed by
  // (w_i w_j)^m for i < j and finite m.
  Presentation coxeter_presentation(CoxeterSystem const& system);

  // "gens g" followed by one relator per line.
  std::string  format_presentation(Presentation const& pres);
  Presentation parse_presentation(std::string const& text);

  class CosetTable {
   public:
    // Cosets are 0-based, coset 0 holds the subgroup.
    CosetTable(std::size_t generators, std::vector<std::uint32_t> action,
               std::vector<Word> transversal);

    std::size_t cosets() const noexcept {
      return _transversal.size();
    }
    std::size_t generators() const noexcept {
      return _generators;
    }
    Word const& transversal(std::size_t coset) const {
      return _transversal.at(coset);
    }
    // Image of a coset under a signed letter.
    std::size_t act(std::size_t coset, int letter) const;
    std::size_t act(std::size_t coset, Relator const& word) const;
    // True when coset * g is reached through the spanning tree, so that the
    // Schreier generator of (coset, g) is the empty word.
    bool tree_edge(std::size_t coset, std::size_t g) const;

   private:
    std::size_t                _generators;
    std::vector<std::uint32_t> _forward;
    std::vector<std::uint32_t> _backward;
    std::vector<Word>          _transversal;
    std::vector<std::uint32_t> _parent;
    std::vector<std::uint8_t>  _parent_generator;
  };

  CosetTable coset_table(Action const& action, std::size_t cap = default_budget);
  CosetTable coset_table(FiniteQuotientMap const& map,
                         std::size_t              cap = default_budget);

  // Numbering of the Schreier generators attached to a coset table, with the
  // rewriting of words into them.
  class SchreierRewriter {
   public:
    explicit SchreierRewriter(CosetTable table);

    CosetTable const& table() const noexcept {
      return _table;
    }
    std::size_t generator_count() const noexcept {
      return _edges.size();
    }
    // (coset, generator) of each Schreier generator.
    std::pair<std::size_t, std::size_t> edge(std::size_t index) const {
      return _edges.at(index);
    }
    // Schreier generator of an edge as a word in the ambient generators.
    Relator schreier_word(std::size_t index) const;

    // Rewrites a word read from the given coset; writes the final coset.
    Relator rewrite(Relator const& word, std::size_t start,
                    std::size_t* end = nullptr) const;
    // Exponent sums, with a check that the word lies in the subgroup.
    std::vector<BigInt> exponent_sums(Relator const& word) const;

   private:
    CosetTable               _table;
    std::vector<std::int64_t> _number;  // coset * g + (g-1), or -1 on tree edges
    std::vector<std::pair<std::size_t, std::size_t>> _edges;
  };

  // The subgroup presented on the non-tree Schreier generators; each relator
  // is rewritten from every coset, freely reduced, and kept when nonempty.
  Presentation reidemeister_schreier(Presentation const& pres,
                                     CosetTable const&   table);

  // Single-occurrence Tietze eliminations until none applies.
  Presentation tietze_simplify(Presentation pres);

  AbelianInvariants abelian_invariants(Presentation const& pres);

  // Abelianization of a kernel together with its free coordinates and the
  // conjugation action of the ambient group on the free part.
  class KernelAbelianization {
   public:
    KernelAbelianization(Presentation const& ambient, CosetTable table);

    SchreierRewriter const& rewriter() const noexcept {
      return _rewriter;
    }
    Presentation const& presentation() const noexcept {
      return _presentation;
    }
    AbelianQuotient const& quotient() const noexcept {
      return _quotient;
    }
    std::size_t rank() const noexcept {
      return _quotient.invariants().free_rank;
    }
    AbelianInvariants const& invariants() const noexcept {
      return _quotient.invariants();
    }

    // Free coordinates of a word of the kernel.
    std::vector<BigInt> coordinates(Word const& word) const;
    std::vector<BigInt> coordinates(Relator const& word) const;
    std::vector<BigInt> torsion_coordinates(Word const& word) const;

    // Columns are the coordinates of u x u^{-1} for the free basis vectors x.
    IntMatrix conjugation_matrix(Word const& ambient) const;

   private:
    SchreierRewriter _rewriter;
    Presentation     _presentation;
    AbelianQuotient  _quotient;
  };

  IntMatrix kernel_conjugation_matrix(Presentation const& pres,
                                      CosetTable const& table,
                                      Word const&       ambient);

}  // namespace smallcox

#endif  // SMALLCOX_REWRITING_HPP_
