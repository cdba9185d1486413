#include "smallcox/complexes.hpp"

#include <algorithm>
#include <numeric>

#include "smallcox/errors.hpp"

namespace smallcox {

  namespace {

    BigInt factorial(std::size_t n) {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), n);
      return f;
    }

    // Lexicographic rank of a permutation of 1..n.
    std::size_t lex_rank(std::vector<std::uint8_t> const& perm) {
      std::size_t const n    = perm.size();
      std::size_t       rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j) {
          smaller += perm[j] < perm[i];
        }
        rank = rank * (n - i) + smaller;
      }
      return rank;
    }

  }  // namespace

  PermutahedronSkeleton::PermutahedronSkeleton(std::size_t n) : _n(n) {
    if (n < 3 || n > 8) {
      throw PreconditionError("permutahedron skeleton needs 3 <= n <= 8");
    }
    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint8_t{1});
    std::size_t v = 0;
    do {
      if (lex_rank(perm) != v) {
        throw std::logic_error("lexicographic ranking out of step");
      }
      for (std::size_t k = 0; k + 1 < n; ++k) {
        std::swap(perm[k], perm[k + 1]);
        _neighbours.push_back(static_cast<std::uint32_t>(lex_rank(perm)));
        std::swap(perm[k], perm[k + 1]);
      }
      ++v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<std::uint8_t> PermutahedronSkeleton::vertex(std::size_t v) const {
    if (v >= vertex_count()) {
      throw std::out_of_range("vertex out of range");
    }
    // Unrank through the factorial number system.
    std::vector<std::uint8_t> pool(_n);
    std::iota(pool.begin(), pool.end(), std::uint8_t{1});
    std::vector<std::size_t> digits(_n);
    for (std::size_t i = _n; i-- > 0;) {
      std::size_t base = _n - i;
      digits[i]        = v % base;
      v /= base;
    }
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < _n; ++i) {
      out.push_back(pool[digits[i]]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
    }
    return out;
  }

  std::size_t PermutahedronSkeleton::index_of(std::vector<std::uint8_t> const& perm) const {
    std::vector<std::uint8_t> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i + 1) {
        throw ValidationError("not a permutation of 1..n");
      }
    }
    if (perm.size() != _n) {
      throw ValidationError("permutation of the wrong length");
    }
    return lex_rank(perm);
  }

  bool PermutahedronSkeleton::is_regular() const {
    // Every listed neighbour is distinct from the vertex and from the other
    // neighbours, and adjacency is symmetric.
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      std::vector<std::uint32_t> seen;
      for (std::size_t k = 0; k + 1 < _n; ++k) {
        std::size_t u = neighbour(v, k);
        if (u == v || neighbour(u, k) != v) {
          return false;
        }
        seen.push_back(static_cast<std::uint32_t>(u));
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        return false;
      }
    }
    return true;
  }

  bool PermutahedronSkeleton::is_connected() const {
    std::vector<bool>        seen(vertex_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0]           = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k + 1 < _n; ++k) {
        std::size_t u = neighbour(v, k);
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == vertex_count();
  }

  FaceCensus face_census(PermutahedronSkeleton const& skeleton) {
    std::size_t const n = skeleton.n();
    std::size_t const V = skeleton.vertex_count();
    FaceCensus        out;
    out.n        = n;
    out.vertices = static_cast<unsigned long>(V);
    out.edges    = static_cast<unsigned long>(skeleton.edge_count());

    std::vector<long long> hex_at(V, 0), square_at(V, 0);
    unsigned long          hexagons = 0, squares = 0;
    std::vector<std::size_t> cycle;
    for (std::size_t v = 0; v < V; ++v) {
      // Alternating moves at k and k+1 close up after six steps.
      for (std::size_t k = 0; k + 2 < n; ++k) {
        cycle.clear();
        std::size_t u = v;
        for (std::size_t step = 0; step < 6; ++step) {
          cycle.push_back(u);
          u = skeleton.neighbour(u, k + step % 2);
        }
        if (u != v) {
          throw std::logic_error("braid moves do not close a hexagon");
        }
        if (*std::min_element(cycle.begin(), cycle.end()) == v) {
          ++hexagons;
          for (std::size_t w : cycle) {
            ++hex_at[w];
          }
        }
      }
      // Commuting moves at i and j >= i + 2 close up after four steps.
      for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
          cycle = {v, skeleton.neighbour(v, i),
                   skeleton.neighbour(skeleton.neighbour(v, i), j),
                   skeleton.neighbour(v, j)};
          if (skeleton.neighbour(cycle[3], i) != cycle[2]) {
            throw std::logic_error("commuting moves do not close a square");
          }
          if (*std::min_element(cycle.begin(), cycle.end()) == v) {
            ++squares;
            for (std::size_t w : cycle) {
              ++square_at[w];
            }
          }
        }
      }
    }
    out.hexagons = hexagons;
    out.squares  = squares;
    auto uniform = [](std::vector<long long> const& c) {
      return std::all_of(c.begin(), c.end(), [&](long long x) { return x == c[0]; })
                 ? c[0]
                 : -1;
    };
    out.hexagons_per_vertex = uniform(hex_at);
    out.squares_per_vertex  = uniform(square_at);
    return out;
  }

  FaceCensus face_census(std::size_t n) {
    return face_census(PermutahedronSkeleton(n));
  }

  FaceCensus face_census_formula(std::size_t n) {
    if (n < 3) {
      throw PreconditionError("face census needs n >= 3");
    }
    BigInt const f = factorial(n);
    FaceCensus   out;
    out.n        = n;
    out.vertices = f;
    out.edges    = f * static_cast<unsigned long>(n - 1) / 2;
    out.hexagons = f * static_cast<unsigned long>(n - 2) / 6;
    out.squares  = f * static_cast<unsigned long>((n - 2) * (n - 3)) / 8;
    return out;
  }

  BigInt pl_rank(std::size_t n) {
    FaceCensus c = n <= 8 ? face_census(n) : face_census_formula(n);
    return 1 - c.chi();
  }

}  // namespace smallcox
