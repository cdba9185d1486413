// The 1-skeleton of the permutahedron and the rank of the pure triplet group
// from the Euler characteristic of the hexagonal 2-complex.

#ifndef SMALLCOX_COMPLEXES_HPP_
#define SMALLCOX_COMPLEXES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "smallcox/matrix.hpp"

namespace smallcox {

  class PermutahedronSkeleton {
   public:
    // 3 <= n <= 8.
    explicit PermutahedronSkeleton(std::size_t n);

    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t vertex_count() const noexcept {
      return _neighbours.size() / (_n - 1);
    }
    std::size_t edge_count() const noexcept {
      return _neighbours.size() / 2;
    }
    // Vertex v as a permutation of 1..n; vertices are in lexicographic order.
    std::vector<std::uint8_t> vertex(std::size_t v) const;
    // Vertex reached by swapping positions k and k+1 (0-based k).
    std::size_t neighbour(std::size_t v, std::size_t k) const {
      return _neighbours[v * (_n - 1) + k];
    }
    std::size_t index_of(std::vector<std::uint8_t> const& perm) const;

    bool is_regular() const;
    bool is_connected() const;

   private:
    std::size_t              _n;
    std::vector<std::uint32_t> _neighbours;
  };

  struct FaceCensus {
    std::size_t n  = 0;
    BigInt      vertices;
    BigInt      edges;
    BigInt      hexagons;
    BigInt      squares;
    // Faces through each vertex, when every vertex lies on the same number
    // of them; -1 otherwise.  Only filled by enumeration.
    long long hexagons_per_vertex = -1;
    long long squares_per_vertex  = -1;

    BigInt chi() const {
      return vertices - edges + hexagons;
    }
  };

  // Enumerates hexagons and squares on the skeleton, each counted once from
  // its lexicographically least vertex.
  FaceCensus face_census(PermutahedronSkeleton const& skeleton);
  FaceCensus face_census(std::size_t n);
  // Counts from the closed formulas, for any n >= 3.
  FaceCensus face_census_formula(std::size_t n);

  // 1 - chi of the complex; enumerated up to n = 8, closed forms beyond.
  BigInt pl_rank(std::size_t n);

}  // namespace smallcox

#endif  // SMALLCOX_COMPLEXES_HPP_
