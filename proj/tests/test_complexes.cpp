#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "smallcox/complexes.hpp"
#include "smallcox/rewriting.hpp"

using namespace smallcox;

namespace {

  std::vector<std::vector<std::uint8_t>> all_permutations(std::size_t n) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<std::uint8_t>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // A hexagon is the orbit of positions k..k+2; it is counted at the vertex
  // where those three entries increase.
  std::size_t hexagon_oracle(std::size_t n) {
    std::size_t count = 0;
    for (auto const& p : all_permutations(n)) {
      for (std::size_t k = 0; k + 2 < n; ++k) {
        count += p[k] < p[k + 1] && p[k + 1] < p[k + 2];
      }
    }
    return count;
  }

  // Four-cycles of the Cayley graph by brute force over closed walks.
  std::size_t square_oracle(PermutahedronSkeleton const& s) {
    std::size_t walks = 0, d = s.n() - 1;
    for (std::size_t v = 0; v < s.vertex_count(); ++v) {
      for (std::size_t a = 0; a < d; ++a) {
        std::size_t x = s.neighbour(v, a);
        for (std::size_t b = 0; b < d; ++b) {
          std::size_t y = s.neighbour(x, b);
          if (y == v) {
            continue;
          }
          for (std::size_t c = 0; c < d; ++c) {
            std::size_t z = s.neighbour(y, c);
            if (z == x || z == v) {
              continue;
            }
            for (std::size_t e = 0; e < d; ++e) {
              walks += s.neighbour(z, e) == v;
            }
          }
        }
      }
    }
    return walks / 8;
  }

  BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      f *= static_cast<unsigned long>(i);
    }
    return f;
  }

}  // namespace

TEST_CASE("skeleton structure") {
  for (std::size_t n = 3; n <= 6; ++n) {
    PermutahedronSkeleton s(n);
    auto                  perms = all_permutations(n);
    REQUIRE(s.vertex_count() == perms.size());
    CHECK(s.edge_count() == perms.size() * (n - 1) / 2);
    CHECK(s.is_regular());
    CHECK(s.is_connected());
    for (std::size_t v = 0; v < perms.size(); ++v) {
      CHECK(s.vertex(v) == perms[v]);
      CHECK(s.index_of(perms[v]) == v);
      for (std::size_t k = 0; k + 1 < n; ++k) {
        auto q = perms[v];
        std::swap(q[k], q[k + 1]);
        CHECK(s.neighbour(v, k) == s.index_of(q));
        CHECK(s.neighbour(s.neighbour(v, k), k) == v);
      }
    }
  }
  CHECK(PermutahedronSkeleton(3).edge_count() == 6);
  CHECK(PermutahedronSkeleton(4).edge_count() == 36);
  CHECK(PermutahedronSkeleton(5).edge_count() == 240);
  CHECK_THROWS(PermutahedronSkeleton(2));
  CHECK_THROWS(PermutahedronSkeleton(9));
  CHECK_THROWS(PermutahedronSkeleton(4).index_of({1, 1, 2, 3}));
}

TEST_CASE("face census examples") {
  FaceCensus c4 = face_census(4);
  CHECK(c4.vertices == 24);
  CHECK(c4.edges == 36);
  CHECK(c4.hexagons == 8);
  CHECK(c4.squares == 6);
  FaceCensus c3 = face_census(3);
  CHECK(c3.vertices == 6);
  CHECK(c3.edges == 6);
  CHECK(c3.hexagons == 1);
  CHECK(c3.squares == 0);
  FaceCensus c5 = face_census(5);
  CHECK(c5.vertices == 120);
  CHECK(c5.edges == 240);
  CHECK(c5.hexagons == 60);
  CHECK(c5.squares == 90);
  CHECK(c5.chi() == -60);
}

TEST_CASE("face counts against oracles and closed forms") {
  for (std::size_t n = 3; n <= 8; ++n) {
    FaceCensus c = face_census(n);
    FaceCensus f = face_census_formula(n);
    BigInt     nf = factorial(n);
    CHECK(c.vertices == nf);
    CHECK(c.edges == nf * static_cast<unsigned long>(n - 1) / 2);
    CHECK(c.hexagons == nf * static_cast<unsigned long>(n - 2) / 6);
    CHECK(c.edges - c.hexagons == nf * static_cast<unsigned long>(2 * n - 1) / 6);
    CHECK(c.chi() == -(nf * static_cast<long>(2 * n - 7)) / 6);
    CHECK(c.vertices == f.vertices);
    CHECK(c.edges == f.edges);
    CHECK(c.hexagons == f.hexagons);
    CHECK(c.squares == f.squares);
    if (n <= 6) {
      CHECK(c.hexagons == hexagon_oracle(n));
      CHECK(c.squares == square_oracle(PermutahedronSkeleton(n)));
      CHECK(c.hexagons_per_vertex == static_cast<long long>(n - 2));
      CHECK(c.squares_per_vertex == static_cast<long long>((n - 2) * (n - 3) / 2));
    }
  }
}

TEST_CASE("pure triplet ranks") {
  std::vector<long> expected{0, 5, 61, 601, 5881};
  for (std::size_t n = 3; n <= 7; ++n) {
    CHECK(pl_rank(n) == expected[n - 3]);
  }
  // Closed form beyond the enumerated range: 1 + n!(2n-7)/6.
  CHECK(pl_rank(9) == 1 + factorial(9) * 11 / 6);
  CHECK(pl_rank(8) == 1 + factorial(8) * 9 / 6);
  CHECK_THROWS(pl_rank(2));
}

TEST_CASE("rank agrees with the abelianized kernel") {
  for (std::size_t n : {4u, 5u}) {
    AbelianInvariants inv = abelian_invariants(reidemeister_schreier(
        coxeter_presentation(triplet(n)), coset_table(quotient_map(triplet(n), QuotientKind::symmetric))));
    CHECK(inv.torsion.empty());
    CHECK(pl_rank(n) == static_cast<unsigned long>(inv.free_rank));
  }
}
