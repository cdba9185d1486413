#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "smallcox/congruence.hpp"
#include "smallcox/errors.hpp"
#include "smallcox/tits.hpp"

using namespace smallcox;

namespace {

  using Key = std::vector<std::uint32_t>;

  Key key_of(ModMatrix const& m) {
    return {m.entries().begin(), m.entries().end()};
  }

  // Plain set-based closure of the generator images, independent of the
  // byte-encoded store used by the library.
  std::map<Key, ModMatrix> closure(CoxeterSystem const& s, std::uint32_t mod) {
    std::vector<ModMatrix> gens;
    for (std::size_t i = 1; i <= s.rank(); ++i) {
      gens.push_back(evaluate_mod(s, Word{i}, mod));
    }
    std::map<Key, ModMatrix> seen;
    ModMatrix                id = ModMatrix::identity(s.rank(), mod);
    seen.emplace(key_of(id), id);
    std::vector<ModMatrix> frontier{id};
    while (!frontier.empty()) {
      std::vector<ModMatrix> next;
      for (auto const& g : frontier) {
        for (auto const& x : gens) {
          ModMatrix h = g * x;
          if (seen.emplace(key_of(h), h).second) {
            next.push_back(h);
          }
        }
      }
      frontier.swap(next);
    }
    return seen;
  }

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  std::size_t gl_order(std::size_t d, std::size_t q) {
    std::size_t qd = 1;
    for (std::size_t i = 0; i < d; ++i) {
      qd *= q;
    }
    std::size_t order = 1, qi = 1;
    for (std::size_t i = 0; i < d; ++i) {
      order *= qd - qi;
      qi *= q;
    }
    return order;
  }

  Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> letter(1, rank), len(0, max_len);
    Word                                       w(len(rng));
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

}  // namespace

TEST_CASE("image orders") {
  CHECK(enumerate_image(twin(4), 2).order() == 1);
  CHECK(enumerate_image(twin(4), 3).order() == 24);
  CHECK(enumerate_image(twin(5), 4).order() == 16);
  CHECK(enumerate_image(triplet(4), 2).order() == 24);
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK(enumerate_image(twin(n), 4).order() == (std::size_t{1} << (n - 1)));
    CHECK(enumerate_image(twin(n), 6).order() == factorial(n));
    CHECK(enumerate_image(triplet(n), 2).order() == factorial(n));
  }
  CHECK(enumerate_image(twin(4), 3).order() < gl_order(3, 3));
  CHECK(enumerate_image(twin(5), 3).order() < gl_order(4, 3));
  CHECK(gl_order(3, 3) == 11232);
}

TEST_CASE("image enumeration matches a set-based closure") {
  for (auto const& [s, mod] : std::vector<std::pair<CoxeterSystem, std::uint32_t>>{
           {twin(4), 5}, {twin(4), 12}, {triplet(4), 4}, {symmetric(5), 7},
           {named_system(Family::universal, 3), 5}, {twin(5), 3}}) {
    FiniteMatrixGroup g      = enumerate_image(s, mod);
    auto              oracle = closure(s, mod);
    REQUIRE(g.order() == oracle.size());
    CHECK(g.element(0).is_identity());
    for (std::size_t i = 0; i < g.order(); ++i) {
      CHECK(oracle.count(key_of(g.element(i))) == 1);
    }
    for (auto const& [k, m] : oracle) {
      CHECK(g.contains(m));
    }
    CHECK(g.spot_check_closure(200, 3));
  }
}

TEST_CASE("enumeration order is deterministic") {
  FiniteMatrixGroup a = enumerate_image(twin(5), 6), b = enumerate_image(twin(5), 6);
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    CHECK(a.element(i) == b.element(i));
  }
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_image(twin(6), 5, 1000), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_image(twin(4), 1), PreconditionError);
  CHECK_THROWS_AS(enumerate_image(twin(4), 3, 0), PreconditionError);
  CHECK_THROWS_AS(enumerate_image(named_system(Family::w_nm, 4, 4u), 3), PreconditionError);
}

TEST_CASE("right-angled images modulo 4 are elementary abelian of order 2^rank") {
  // Every graph on up to 5 vertices, by edge mask.
  for (std::size_t v = 1; v <= 5; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 1; a <= v; ++a) {
      for (std::size_t b = a + 1; b <= v; ++b) {
        pairs.emplace_back(a, b);
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); mask += (v == 5 ? 7 : 1)) {
      SimpleGraph graph(v);
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (mask >> e & 1) {
          graph.add_edge(pairs[e].first, pairs[e].second);
        }
      }
      CoxeterSystem     s = named_system(Family::racg, v, std::nullopt, graph);
      FiniteMatrixGroup g = enumerate_image(s, 4);
      CHECK(g.order() == (std::size_t{1} << v));
      for (std::size_t i = 0; i < g.order(); ++i) {
        CHECK(g.element(i).pow(2).is_identity());
        for (auto const& x : g.generators()) {
          CHECK(g.element(i) * x == x * g.element(i));
        }
      }
    }
  }
}

TEST_CASE("congruence membership") {
  CHECK(congruence_member(twin(4), Word{1, 2, 1, 2, 1, 2}, 6));
  CHECK_FALSE(congruence_member(twin(4), Word{1}, 3));
  CHECK(congruence_member(twin(4), Word{}, 12));
  CHECK_THROWS(congruence_member(twin(4), Word{5}, 3));

  std::mt19937 rng(2024);
  for (std::size_t n : {3u, 4u, 5u}) {
    CoxeterSystem s = twin(n);
    for (int t = 0; t < 500; ++t) {
      // Bias toward members by appending a power of a pair product.
      Word w = random_word(rng, s.rank(), 30);
      if (t % 2 == 0) {
        std::size_t i = 1 + rng() % (s.rank() - 1);
        w             = repeat(Word{i, i + 1}, 6 * (1 + rng() % 3));
      }
      for (auto [m, k] : {std::pair{3u, 4u}, {4u, 5u}, {2u, 3u}, {5u, 6u}}) {
        CHECK(congruence_member(s, w, m * k)
              == (congruence_member(s, w, m) && congruence_member(s, w, k)));
      }
      for (std::uint32_t m : {12u, 30u, 36u}) {
        if (congruence_member(s, w, m)) {
          for (std::uint32_t d = 2; d <= m; ++d) {
            if (m % d == 0) {
              CHECK(congruence_member(s, w, d));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("reduction kernels") {
  FiniteMatrixGroup g6 = enumerate_image(twin(4), 6);
  CHECK(reduction_kernel(g6, 6).order() == 1);
  // rho_2 of a twin group is trivial, so the whole image mod 6 reduces to
  // the identity mod 2 and the kernel is all 24 elements.
  CHECK(enumerate_image(twin(4), 2).order() == 1);
  CHECK(reduction_kernel(g6, 2).order() == g6.order());
  CHECK(reduction_kernel(g6, 2).order() == 24);
  FiniteMatrixGroup g12 = enumerate_image(twin(4), 12);
  CHECK(reduction_kernel(g12, 4).order() == 12);
  CHECK_THROWS_AS(reduction_kernel(g6, 4), PreconditionError);

  for (auto [mod, d] : {std::pair{12u, 3u}, {12u, 4u}, {12u, 2u}, {15u, 5u}, {20u, 4u}}) {
    FiniteMatrixGroup g      = enumerate_image(twin(4), mod);
    FiniteMatrixGroup kernel = reduction_kernel(g, d);
    std::size_t       count  = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      count += g.element(i).reduce(d).is_identity();
    }
    CHECK(kernel.order() == count);
    // Orbit-stabiliser: |G| = |kernel| |image mod d|.
    CHECK(g.order() == kernel.order() * enumerate_image(twin(4), d).order());
    for (std::size_t i = 0; i < kernel.order(); ++i) {
      CHECK(kernel.element(i).reduce(d).is_identity());
    }
    CHECK(generated_subgroup(mod, 3, kernel.generators()).order() == kernel.order());
  }
}

TEST_CASE("group dump round trip") {
  FiniteMatrixGroup g    = enumerate_image(twin(4), 3);
  std::string       text = format_group_dump(g);
  CHECK(text.rfind("modulus 3, dimension 3, order 24", 0) == 0);
  GroupDump dump = parse_group_dump(text);
  CHECK(dump.modulus == 3);
  CHECK(dump.dimension == 3);
  REQUIRE(dump.elements.size() == 24);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(dump.elements[i] == g.element(i));
  }
  CHECK_THROWS(parse_group_dump("modulus 3, dimension 3, order 2\n\n1 0 0\n0 1 0\n0 0 1\n"));
}

TEST_CASE("quotient by the alternating group") {
  QuotientCheck a44 = check_quotient_alternating(4, 4);
  CHECK(a44.passed);
  CHECK(a44.kernel_order == 12);
  QuotientCheck a45 = check_quotient_alternating(4, 5);
  CHECK(a45.passed);
  CHECK(a45.kernel_order == 12);
  // With m = 2 the image mod 2 is trivial, so T_n[2] is all of T_n and the
  // quotient T_n/T_n[6] is the full symmetric group.
  QuotientCheck a42 = check_quotient_alternating(4, 2);
  CHECK(a42.kernel_order == 24);
  CHECK_FALSE(a42.passed);
  CHECK_THROWS_AS(check_quotient_alternating(4, 3), PreconditionError);
}

TEST_CASE("quotient by even-weight vectors") {
  for (auto [n, m, k] : {std::tuple{4u, 3u, 4u}, {5u, 3u, 8u}, {4u, 5u, 4u}}) {
    QuotientCheck q = check_quotient_even_vectors(n, m);
    CHECK(q.passed);
    CHECK(q.kernel_order == k);
  }
  CHECK_THROWS_AS(check_quotient_even_vectors(4, 4), PreconditionError);
}

TEST_CASE("product quotient") {
  QuotientCheck q = check_quotient_product(4, 5);
  CHECK(q.passed);
  CHECK(q.kernel_order == 48);
  QuotientCheck r = check_quotient_product(5, 5);
  CHECK(r.passed);
  CHECK(r.kernel_order == 480);
  CHECK_THROWS_AS(check_quotient_product(4, 1), PreconditionError);
  CHECK_THROWS_AS(check_quotient_product(4, 3), PreconditionError);
}

TEST_CASE("product generation") {
  ProductGenerationCheck p = product_generation_check(4, 3, 4);
  CHECK(p.passed);
  CHECK(p.group_order == 96);
  CHECK(p.even_order == 48);
  CHECK(p.generated_order == 48);
  CHECK(product_generation_check(4, 3, 5).passed);
  // The even half of the image mod 12, counted directly.
  FiniteMatrixGroup g    = enumerate_image(twin(4), 12);
  std::size_t       even = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    even += g.element(i).determinant() == 1;
  }
  CHECK(even == 48);
  CHECK_THROWS_AS(product_generation_check(4, 2, 3), PreconditionError);
  CHECK_THROWS_AS(product_generation_check(4, 3, 6), PreconditionError);
}

TEST_CASE("minimal congruence power") {
  CHECK(minimal_congruence_power(3) == 3);
  CHECK(minimal_congruence_power(8) == 4);
  CHECK(minimal_congruence_power(5) == 5);
  for (unsigned m = 3; m <= 24; ++m) {
    std::size_t k = 1;
    while (!twin_power_matrix(k).reduce(m).is_identity()) {
      ++k;
    }
    CHECK(minimal_congruence_power(m) == k);
    CHECK(k == (m % 2 ? m : m / 2));
  }
  CHECK_THROWS(minimal_congruence_power(2));
}

TEST_CASE("sampled elements of T_n[3] have no small torsion") {
  std::mt19937 rng(99);
  for (std::size_t n : {3u, 4u, 5u}) {
    CoxeterSystem s     = twin(n);
    int           found = 0;
    while (found < 100) {
      Word w = free_reduce(random_word(rng, s.rank(), 20));
      if (w.empty() || !congruence_member(s, w, 3)) {
        // Conjugate a pair-product cube into T_n[3].
        std::size_t i = 1 + rng() % (s.rank() - 1);
        Word        u = random_word(rng, s.rank(), 6);
        Word        r(u.rbegin(), u.rend());
        w = free_reduce(concat(concat(u, repeat(Word{i, i + 1}, 3)), r));
      }
      IntMatrix m = evaluate(s, w);
      if (m.is_identity()) {
        continue;
      }
      REQUIRE(congruence_member(s, w, 3));
      ++found;
      IntMatrix p = m;
      for (int j = 1; j <= 12; ++j) {
        CHECK_FALSE(p.is_identity());
        p = p * m;
      }
    }
  }
}
