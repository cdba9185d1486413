#include <doctest.h>

#include <random>

#include "smallcox/matrix.hpp"

using namespace smallcox;

namespace {

  using Dense = std::vector<std::vector<long long>>;

  Dense random_dense(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Dense                              a(n, std::vector<long long>(n));
    for (auto& row : a) {
      for (auto& x : row) {
        x = d(rng);
      }
    }
    return a;
  }

  IntMatrix to_int(Dense const& a) {
    IntMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        m(i, j) = static_cast<long>(a[i][j]);
      }
    }
    return m;
  }

  // Laplace expansion along the first row.
  long long laplace(Dense const& a) {
    std::size_t n = a.size();
    if (n == 1) {
      return a[0][0];
    }
    long long det = 0;
    for (std::size_t c = 0; c < n; ++c) {
      Dense minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<long long> row;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != c) {
            row.push_back(a[i][j]);
          }
        }
        minor.push_back(row);
      }
      det += (c % 2 ? -1 : 1) * a[0][c] * laplace(minor);
    }
    return det;
  }

}  // namespace

TEST_CASE("integer products agree with schoolbook multiplication") {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 5;
    Dense       a = random_dense(rng, n, -9, 9), b = random_dense(rng, n, -9, 9);
    Dense       c(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          c[i][j] += a[i][k] * b[k][j];
        }
      }
    }
    CHECK(to_int(a) * to_int(b) == to_int(c));
  }
}

TEST_CASE("Bareiss determinant matches Laplace expansion") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Dense a = random_dense(rng, 1 + t % 6, -4, 4);
    CHECK(to_int(a).determinant() == static_cast<long>(laplace(a)));
  }
  CHECK(IntMatrix(0).determinant() == 1);
}

TEST_CASE("powers and identity") {
  IntMatrix a{{1, 1}, {0, 1}};
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(10) == IntMatrix{{1, 10}, {0, 1}});
  // Entries beyond 64 bits stay exact.
  IntMatrix f = IntMatrix{{1, 1}, {1, 0}}.pow(100);
  CHECK(f(0, 1).get_str() == "354224848179261915075");
}

TEST_CASE("modular arithmetic agrees with reducing integer results") {
  std::mt19937 rng(8);
  for (std::uint32_t m : {2u, 3u, 12u, 255u, 256u, 1000u, 65537u}) {
    for (int t = 0; t < 20; ++t) {
      std::size_t n = 1 + t % 4;
      IntMatrix   a = to_int(random_dense(rng, n, -50, 50));
      IntMatrix   b = to_int(random_dense(rng, n, -50, 50));
      CHECK(a.reduce(m) * b.reduce(m) == (a * b).reduce(m));
      CHECK(a.reduce(m).pow(7) == a.pow(7).reduce(m));
      BigInt d = a.determinant() % m;
      if (d < 0) {
        d += m;
      }
      CHECK(a.reduce(m).determinant() == d.get_ui());
      if (m % 4 == 0) {
        CHECK(a.reduce(m).reduce(4) == a.reduce(4));
      }
    }
  }
}

TEST_CASE("ModMatrix set reduces negative values and encoding round trips") {
  ModMatrix a(2, 7);
  a.set(0, 0, -1);
  a.set(0, 1, 15);
  CHECK(a(0, 0) == 6);
  CHECK(a(0, 1) == 1);
  for (std::uint32_t m : {5u, 300u, 70000u}) {
    ModMatrix b(3, m);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        b.set(i, j, static_cast<long long>(i * 977 + j * 131 + 1));
      }
    }
    std::vector<std::uint8_t> bytes(ModMatrix::encoded_size(3, m));
    b.encode(bytes.data());
    CHECK(ModMatrix::decode(bytes.data(), 3, m) == b);
    CHECK(bytes.size() == 9 * residue_width(m));
  }
  CHECK(residue_width(256) == 1);
  CHECK(residue_width(257) == 2);
  CHECK(residue_width(70000) == 4);
}

TEST_CASE("matrix text formats round trip") {
  IntMatrix a{{3, -2, 4}, {2, -1, 2}, {0, 0, 1}};
  CHECK(format_matrix(a) == "3 -2 4\n2 -1 2\n0 0 1\n");
  CHECK(parse_int_matrix(format_matrix(a)) == a);
  ModMatrix m = a.reduce(6);
  CHECK(format_matrix(m).rfind("mod 6\n", 0) == 0);
  CHECK(parse_mod_matrix(format_matrix(m)) == m);
  CHECK_THROWS(parse_int_matrix("1 2\n3\n"));
  CHECK_THROWS(parse_mod_matrix("1 0\n0 1\n"));
}
