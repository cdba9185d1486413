// Acceptance gate: one line per criterion, exit status 1 if any fails.
// Every check is exact; the time limits below are the only tolerances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smallcox/complexes.hpp"
#include "smallcox/congruence.hpp"
#include "smallcox/crystallo.hpp"
#include "smallcox/rewriting.hpp"
#include "smallcox/tits.hpp"

using namespace smallcox;

namespace {

  using Clock = std::chrono::steady_clock;

  struct Outcome {
    bool        exact = true;
    std::string notes;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        exact = false;
        notes += (notes.empty() ? "" : "; ") + what;
      }
    }
  };

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> letter(1, rank), len(0, max_len);
    Word                                       w(len(rng));
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

  IntMatrix multiply_out(CoxeterSystem const& s, Word const& w) {
    IntMatrix m = IntMatrix::identity(s.rank());
    for (std::size_t x : w) {
      m = m * generator_matrix(s, x);
    }
    return m;
  }

  // Each image order is timed on its own against the per-case limit.
  void criterion_1(Outcome& o) {
    constexpr double per_case_limit = 30.0;
    auto check = [&](std::string const& label, CoxeterSystem const& s, std::uint32_t m,
                     std::size_t expected) {
      auto        start = Clock::now();
      std::size_t order = 0;
      try {
        order = enumerate_image(s, m).order();
      } catch (std::exception const& e) {
        o.require(false, label + ": " + e.what());
        return;
      }
      double t = seconds_since(start);
      o.require(order == expected,
                label + " = " + std::to_string(order) + ", expected " + std::to_string(expected));
      o.require(t < per_case_limit, label + " took " + std::to_string(t) + " s");
    };
    for (std::size_t n = 3; n <= 6; ++n) {
      std::string tn = "|rho_";
      check(tn + "2(T_" + std::to_string(n) + ")|", twin(n), 2, 1);
      check(tn + "3(T_" + std::to_string(n) + ")|", twin(n), 3, factorial(n));
      check(tn + "4(T_" + std::to_string(n) + ")|", twin(n), 4, std::size_t{1} << (n - 1));
      check(tn + "6(T_" + std::to_string(n) + ")|", twin(n), 6, factorial(n));
      check(tn + "2(L_" + std::to_string(n) + ")|", triplet(n), 2, factorial(n));
    }
  }

  void criterion_2(Outcome& o) {
    struct Case {
      std::string  check;
      std::size_t  n;
      unsigned     m;
      std::size_t  kernel;
    };
    std::vector<Case> cases{{"alternating", 4, 2, 12},  {"alternating", 5, 2, 60},
                            {"alternating", 4, 4, 12},  {"alternating", 4, 5, 12},
                            {"even-vectors", 4, 3, 4},  {"even-vectors", 5, 3, 8},
                            {"even-vectors", 4, 5, 4},  {"product", 4, 5, 48}};
    for (auto const& c : cases) {
      std::string label = c.check + "(" + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
      try {
        QuotientCheck q = c.check == "alternating"    ? check_quotient_alternating(c.n, c.m)
                          : c.check == "even-vectors" ? check_quotient_even_vectors(c.n, c.m)
                                                      : check_quotient_product(c.n, c.m);
        o.require(q.passed && q.kernel_order == c.kernel,
                  label + ": " + (q.passed ? "passed" : "failed") + ", kernel "
                      + std::to_string(q.kernel_order) + " (expected "
                      + std::to_string(c.kernel) + ")");
      } catch (std::exception const& e) {
        o.require(false, label + ": " + e.what());
      }
    }
  }

  void criterion_3(Outcome& o) {
    for (unsigned m = 3; m <= 24; ++m) {
      std::size_t k = minimal_congruence_power(m);
      o.require(k == (m % 2 ? m : m / 2), "m = " + std::to_string(m) + " gives " + std::to_string(k));
    }
  }

  void criterion_4(Outcome& o) {
    auto ranks = [](CoxeterSystem const& s, FiniteQuotientMap const& map) {
      return abelian_invariants(reidemeister_schreier(coxeter_presentation(s), coset_table(map)));
    };
    AbelianInvariants pt4 = ranks(twin(4), quotient_map(twin(4), QuotientKind::modular, 6));
    o.require(pt4 == AbelianInvariants{7, {}}, "PT_4 gives " + format_invariants(pt4));
    constexpr double pt5_limit = 300.0;
    auto              start    = Clock::now();
    AbelianInvariants pt5      = ranks(twin(5), quotient_map(twin(5), QuotientKind::modular, 6));
    double            t        = seconds_since(start);
    o.require(pt5 == AbelianInvariants{31, {}}, "PT_5 gives " + format_invariants(pt5));
    o.require(t < pt5_limit, "PT_5 took " + std::to_string(t) + " s");
    for (std::size_t n = 3; n <= 6; ++n) {
      AbelianInvariants d = ranks(twin(n), quotient_map(twin(n), QuotientKind::mod2_abelian));
      o.require(d == AbelianInvariants{2 * n - 5, {}},
                "T_" + std::to_string(n) + "' gives " + format_invariants(d));
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      AbelianInvariants d = ranks(triplet(n), quotient_map(triplet(n), QuotientKind::parity));
      o.require(d == AbelianInvariants{0, std::vector<BigInt>(n - 2, 3)},
                "L_" + std::to_string(n) + "' gives " + format_invariants(d));
    }
    Presentation pl4 = tietze_simplify(reidemeister_schreier(
        coxeter_presentation(triplet(4)),
        coset_table(quotient_map(triplet(4), QuotientKind::symmetric))));
    o.require(pl4.generators == 5 && pl4.relators.empty(),
              "PL_4 simplifies to " + std::to_string(pl4.generators) + " generators, "
                  + std::to_string(pl4.relators.size()) + " relators");
  }

  void criterion_5(Outcome& o) {
    std::vector<long> table{0, 5, 61, 601, 5881};
    for (std::size_t n = 3; n <= 7; ++n) {
      BigInt r = pl_rank(n);
      o.require(r == table[n - 3], "pl_rank(" + std::to_string(n) + ") = " + r.get_str());
    }
    for (std::size_t n = 3; n <= 8; ++n) {
      FaceCensus c = face_census(n);
      BigInt     f = static_cast<unsigned long>(factorial(n));
      o.require(c.hexagons == f * static_cast<unsigned long>(n - 2) / 6,
                "F6 at n = " + std::to_string(n) + " is " + c.hexagons.get_str());
      o.require(c.edges == f * static_cast<unsigned long>(n - 1) / 2,
                "E at n = " + std::to_string(n) + " is " + c.edges.get_str());
    }
  }

  void criterion_6(Outcome& o) {
    struct Case {
      std::string       label;
      CoxeterSystem     system;
      FiniteQuotientMap map;
      std::size_t       order, dim;
    };
    std::vector<Case> cases{
        {"T_4/PT_4'", twin(4), quotient_map(twin(4), QuotientKind::modular, 6), 24, 7},
        {"T_5/PT_5'", twin(5), quotient_map(twin(5), QuotientKind::modular, 6), 120, 31},
        {"L_4/PL_4'", triplet(4), quotient_map(triplet(4), QuotientKind::symmetric), 24, 5}};
    for (auto const& c : cases) {
      HolonomyReport r = holonomy_via_conjugation(c.system, c.map);
      o.require(r.faithful && r.holonomy_order == c.order && r.dimension == c.dim,
                c.label + ": faithful " + std::to_string(r.faithful) + ", order "
                    + std::to_string(r.holonomy_order) + ", dimension " + std::to_string(r.dimension));
    }
    for (std::size_t n = 4; n <= 8; ++n) {
      HolonomyReport r = theta_faithfulness(n);
      o.require(r.faithful && r.dimension == 2 * n - 5
                    && r.holonomy_order == (std::size_t{1} << (n - 1)),
                "T_" + std::to_string(n) + "/T_" + std::to_string(n) + "'' not faithful");
    }
    HolonomyReport t3 = holonomy_via_conjugation(twin(3), quotient_map(twin(3), QuotientKind::symmetric));
    // The kernel must be exactly A_3: two non-identity elements, both 3-cycles.
    bool a3 = !t3.faithful && t3.kernel_witnesses.size() == 2;
    for (Word const& w : t3.kernel_witnesses) {
      a3 = a3 && w.size() % 2 == 0;
    }
    o.require(a3, "T_3 over S_3: kernel of size " + std::to_string(t3.kernel_witnesses.size() + 1));
  }

  void criterion_7(Outcome& o) {
    std::mt19937 rng(20261014);
    for (std::size_t n : {4u, 6u}) {
      for (auto const& s : {twin(n), triplet(n), symmetric(n)}) {
        for (int t = 0; t < 1000; ++t) {
          Word w = random_word(rng, s.rank(), 30);
          if (evaluate(s, w).determinant() != (w.size() % 2 ? -1 : 1)) {
            o.require(false, "determinant parity fails on " + format_word(w));
          }
        }
      }
    }
    for (std::size_t n = 3; n <= 7; ++n) {
      for (auto const& s : {twin(n), triplet(n), symmetric(n), named_system(Family::universal, n)}) {
        for (std::size_t k = 1; k <= s.rank(); ++k) {
          for (std::size_t l = 1; l <= s.rank(); ++l) {
            if (k == l) {
              continue;
            }
            IntMatrix p = multiply_out(s, Word{k, l});
            if (pair_product_formula(s, k, l) != p || pair_product_square_formula(s, k, l) != p * p) {
              o.require(false, "pair product formula at (" + std::to_string(k) + ","
                                   + std::to_string(l) + ")");
            }
          }
        }
      }
    }
    for (unsigned m = 3; m <= 50; ++m) {
      o.require(cube_divides(m, pm_coefficients(m)), "p_m identity at m = " + std::to_string(m));
    }
    for (std::size_t n = 3; n <= 7; ++n) {
      for (unsigned m = 2; m <= 12; ++m) {
        for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
          o.require(order_check_2m(n, m, i), "(X_i X_{i+1})^m at n = " + std::to_string(n)
                                                 + ", m = " + std::to_string(m));
        }
      }
    }
    for (std::size_t n : {3u, 4u, 5u}) {
      CoxeterSystem s = twin(n);
      for (int t = 0; t < 500; ++t) {
        Word w = random_word(rng, s.rank(), 30);
        if (t % 2 == 0) {
          std::size_t i = 1 + rng() % (s.rank() - 1);
          w = concat(w, concat(repeat(Word{i, i + 1}, 6), Word(w.rbegin(), w.rend())));
        }
        for (auto [m, k] : {std::pair{3u, 4u}, {4u, 5u}, {5u, 6u}}) {
          bool lhs = congruence_member(s, w, m * k);
          bool rhs = congruence_member(s, w, m) && congruence_member(s, w, k);
          if (lhs != rhs) {
            o.require(false, "CRT membership fails on " + format_word(w));
          }
        }
      }
    }
  }

  void criterion_8(Outcome& o) {
    for (std::size_t n : {4u, 5u, 6u}) {
      CrossCheck c = theta_cross_check(n);
      o.require(c.passed, "n = " + std::to_string(n) + ": " + c.detail);
    }
  }

  struct Criterion {
    int                           id;
    std::string                   title;
    double                        limit_seconds;
    std::function<void(Outcome&)> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      // Twenty image orders, each also held to its own 30 s limit.
      {1, "image orders of rho_m on twin and triplet groups", 20 * 30.0, criterion_1},
      {2, "quotient theorems at image level", 300.0, criterion_2},
      {3, "congruence generators of T_3", 1.0, criterion_3},
      {4, "abelianized kernel ranks and PL_4 freeness", 300.0, criterion_4},
      {5, "permutahedron counts and pure triplet ranks", 60.0, criterion_5},
      {6, "holonomy faithfulness", 600.0, criterion_6},
      {7, "formula-versus-oracle property suites", 120.0, criterion_7},
      {8, "theta formulas against the conjugation action", 120.0, criterion_8},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    Outcome o;
    auto    start = Clock::now();
    try {
      c.run(o);
    } catch (std::exception const& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double t    = seconds_since(start);
    bool   pass = o.exact && t < c.limit_seconds;
    failures += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ["
         << std::fixed;
    line.precision(2);
    line << t << " s, limit " << c.limit_seconds << " s]";
    if (!o.exact) {
      line << ": " << o.notes;
    } else if (t >= c.limit_seconds) {
      line << ": time limit exceeded";
    }
    std::printf("%s\n", line.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
