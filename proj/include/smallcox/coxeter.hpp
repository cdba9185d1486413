// Coxeter systems, words over their generators, the named families used
// throughout the library, and the virtually-abelian test for right-angled
// Coxeter groups.

#ifndef SMALLCOX_COXETER_HPP_
#define SMALLCOX_COXETER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smallcox/errors.hpp"

namespace smallcox {

  // An exponent m_{i,j}; std::nullopt stands for infinity.
  using Exponent = std::optional<unsigned>;

  inline constexpr Exponent infinity = std::nullopt;

  // A group word: 1-based generator indices, not necessarily reduced.
  using Word = std::vector<std::size_t>;

  class CoxeterMatrixError : public ValidationError {
   public:
    enum class Kind { not_square, not_symmetric, bad_diagonal, bad_off_diagonal };

    CoxeterMatrixError(Kind kind, std::string const& what)
        : ValidationError(what), _kind(kind) {}

    Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

  class CoxeterSystem {
   public:
    // Validates and takes ownership of a square exponent matrix (0-based rows).
    explicit CoxeterSystem(std::vector<std::vector<Exponent>> exponents);

    std::size_t rank() const noexcept {
      return _rank;
    }

    // 1-based access, matching s_1, ..., s_r.
    Exponent exponent(std::size_t i, std::size_t j) const;

    std::vector<std::vector<Exponent>> const& exponents() const noexcept {
      return _exponents;
    }

    bool operator==(CoxeterSystem const&) const = default;

   private:
    std::size_t                         _rank;
    std::vector<std::vector<Exponent>> _exponents;
  };

  class SimpleGraph {
   public:
    explicit SimpleGraph(std::size_t vertices) : _vertices(vertices) {}
    SimpleGraph(std::size_t                                          vertices,
                std::vector<std::pair<std::size_t, std::size_t>> const& edges);

    // 1-based endpoints; loops and duplicate edges throw ValidationError.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept {
      return _vertices;
    }
    std::vector<std::pair<std::size_t, std::size_t>> const&
    edges() const noexcept {
      return _edges;
    }
    bool adjacent(std::size_t u, std::size_t v) const;

   private:
    std::size_t                                      _vertices;
    std::vector<std::pair<std::size_t, std::size_t>> _edges;
  };

  enum class Family { twin, triplet, symmetric, universal, w_nm, racg };

  Family      parse_family(std::string const& name);
  std::string family_name(Family family);

  CoxeterSystem build_system(std::vector<std::vector<Exponent>> exponents);

  // Rank n-1 system of the family; racg uses the graph and has rank equal to
  // its vertex count.
  CoxeterSystem named_system(Family                     family,
                             std::size_t                n,
                             std::optional<unsigned>    m     = std::nullopt,
                             std::optional<SimpleGraph> graph = std::nullopt);

  CoxeterSystem twin(std::size_t n);
  CoxeterSystem triplet(std::size_t n);
  CoxeterSystem symmetric(std::size_t n);

  // Every exponent lies in {1, 2, 3, infinity}.
  bool is_small(CoxeterSystem const& system);

  // Whether all off-diagonal exponents lie in {2, infinity}.
  bool is_right_angled(CoxeterSystem const& system);

  bool        valid_word(CoxeterSystem const& system, Word const& word);
  void        validate_word(CoxeterSystem const& system, Word const& word);
  Word        free_reduce(Word const& word);
  Word        concat(Word const& a, Word const& b);
  Word        repeat(Word const& w, std::size_t times);

  // (m, k) when the graph is the join of K_m with k edgeless 2-vertex graphs,
  // that is when the complement has maximum degree at most one.
  std::optional<std::pair<std::size_t, std::size_t>>
  racg_join_decomposition(SimpleGraph const& graph);

  // Text formats: a rank line followed by rank rows of integers or "inf";
  // words are whitespace-separated indices.
  CoxeterSystem parse_coxeter_matrix(std::string const& text);
  std::string   format_coxeter_matrix(CoxeterSystem const& system);
  Word          parse_word(std::string const& text);
  std::string   format_word(Word const& word);

}  // namespace smallcox

#endif  // SMALLCOX_COXETER_HPP_
