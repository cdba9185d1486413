#include "smallcox/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "smallcox/complexes.hpp"
#include "smallcox/congruence.hpp"
#include "smallcox/crystallo.hpp"
#include "smallcox/errors.hpp"
#include "smallcox/rewriting.hpp"
#include "smallcox/tits.hpp"

namespace smallcox {

  namespace {

    using Check = std::function<std::string()>;

    void run(VerificationReport& report, std::string id, std::string statement,
             std::string expected, Check const& check) {
      Claim c;
      c.id        = std::move(id);
      c.statement = std::move(statement);
      c.expected  = std::move(expected);
      auto start  = std::chrono::steady_clock::now();
      try {
        c.computed = check();
      } catch (std::exception const& e) {
        c.computed = std::string("error: ") + e.what();
      }
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
      c.pass = c.computed == c.expected;
      report.claims.push_back(std::move(c));
    }

    // Space-separated values of f over a range.
    template <class F>
    std::string table(std::size_t lo, std::size_t hi, F f) {
      std::ostringstream out;
      for (std::size_t i = lo; i <= hi; ++i) {
        out << (i == lo ? "" : " ") << f(i);
      }
      return out.str();
    }

    BigInt factorial(std::size_t n) {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), n);
      return f;
    }

    Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      std::uniform_int_distribution<std::size_t> letter(1, rank);
      Word                                       w(len(rng));
      for (auto& x : w) {
        x = letter(rng);
      }
      return w;
    }

    std::vector<CoxeterSystem> small_families(std::size_t max_rank) {
      std::vector<CoxeterSystem> out;
      for (std::size_t n = 3; n <= max_rank + 1; ++n) {
        out.push_back(twin(n));
        out.push_back(triplet(n));
        out.push_back(symmetric(n));
      }
      return out;
    }

    void tits_suite(VerificationReport& r) {
      run(r, "tits.involution", "each generator matrix squares to the identity, rank <= 8",
          "true", [] {
            for (auto const& s : small_families(8)) {
              for (std::size_t k = 1; k <= s.rank(); ++k) {
                if (!generator_matrix(s, k).pow(2).is_identity()) {
                  return std::string("false");
                }
              }
            }
            return std::string("true");
          });
      run(r, "tits.relations", "(X_i X_j)^{m_ij} = I for finite exponents, rank <= 6",
          "true", [] {
            for (auto const& s : small_families(6)) {
              for (std::size_t i = 1; i <= s.rank(); ++i) {
                for (std::size_t j = i + 1; j <= s.rank(); ++j) {
                  if (auto m = s.exponent(i, j);
                      m && !(generator_matrix(s, i) * generator_matrix(s, j)).pow(*m).is_identity()) {
                    return std::string("false");
                  }
                }
              }
            }
            return std::string("true");
          });
      run(r, "tits.determinant-parity",
          "det rho(w) = (-1)^|w| on 1000 random words per family", "true", [] {
            std::mt19937_64 rng(20240601);
            for (auto const& s : {twin(5), triplet(5), symmetric(5)}) {
              for (int t = 0; t < 1000; ++t) {
                Word w = random_word(rng, s.rank(), 30);
                if (evaluate(s, w).determinant() != (w.size() % 2 ? -1 : 1)) {
                  return std::string("false");
                }
              }
            }
            return std::string("true");
          });
      run(r, "tits.pair-products",
          "closed forms of X_k X_l and (X_k X_l)^2 match multiplication, k != l, rank <= 6",
          "true", [] {
            for (auto const& s : small_families(6)) {
              for (std::size_t k = 1; k <= s.rank(); ++k) {
                for (std::size_t l = 1; l <= s.rank(); ++l) {
                  if (k == l) {
                    continue;
                  }
                  IntMatrix p = generator_matrix(s, k) * generator_matrix(s, l);
                  if (pair_product_formula(s, k, l) != p
                      || pair_product_square_formula(s, k, l) != p * p) {
                    return std::string("false");
                  }
                }
              }
            }
            return std::string("true");
          });
      run(r, "tits.pm-identity",
          "Y^m - 1 = m(m-1)/2 Y^2 - m(m-2) Y + m(m-3)/2 mod (Y-1)^3, m = 3..50", "true", [] {
            for (unsigned m = 3; m <= 50; ++m) {
              long long  mm = m;
              PolyCoeffs p  = pm_coefficients(m);
              if (!(p == PolyCoeffs{mm * (mm - 1) / 2, -mm * (mm - 2), mm * (mm - 3) / 2})
                  || !cube_divides(m, p)) {
                return std::string("false");
              }
            }
            return std::string("true");
          });
      run(r, "tits.order-2m", "(X_i X_{i+1})^m = I mod 2m in T_n, n <= 7, 2 <= m <= 12", "true",
          [] {
            for (std::size_t n = 3; n <= 7; ++n) {
              for (unsigned m = 2; m <= 12; ++m) {
                for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
                  if (!order_check_2m(n, m, i)) {
                    return std::string("false");
                  }
                }
              }
            }
            return std::string("true");
          });
      run(r, "tits.twin-power", "rho((s_1 s_2)^k) = [[2k+1, -2k], [2k, 1-2k]], k = 0..200",
          "true", [] {
            for (std::size_t k = 0; k <= 200; ++k) {
              if (twin_power_matrix(k) != evaluate(twin(3), repeat(Word{1, 2}, k))) {
                return std::string("false");
              }
            }
            return std::string("true");
          });
      run(r, "tits.non-identity", "rho_m(s_1 s_2) != I for m = 3..24, n = 3..6", "true", [] {
        for (std::size_t n = 3; n <= 6; ++n) {
          for (unsigned m = 3; m <= 24; ++m) {
            if (evaluate_mod(twin(n), Word{1, 2}, m).is_identity()) {
              return std::string("false");
            }
          }
        }
        return std::string("true");
      });
    }

    void congruence_suite(VerificationReport& r) {
      auto order = [](CoxeterSystem const& s, unsigned m) {
        return enumerate_image(s, m).order();
      };
      run(r, "congruence.rho2-twin", "|rho_2(T_n)| = 1, n = 3..6", "1 1 1 1",
          [&] { return table(3, 6, [&](std::size_t n) { return order(twin(n), 2); }); });
      run(r, "congruence.rho3-twin", "|rho_3(T_n)| = n!, n = 3..6", "6 24 120 720",
          [&] { return table(3, 6, [&](std::size_t n) { return order(twin(n), 3); }); });
      run(r, "congruence.rho4-twin", "|rho_4(T_n)| = 2^{n-1}, n = 3..6", "4 8 16 32",
          [&] { return table(3, 6, [&](std::size_t n) { return order(twin(n), 4); }); });
      run(r, "congruence.rho6-twin", "|rho_6(T_n)| = n!, n = 3..6", "6 24 120 720",
          [&] { return table(3, 6, [&](std::size_t n) { return order(twin(n), 6); }); });
      run(r, "congruence.rho2-triplet", "|rho_2(L_n)| = n!, n = 3..6", "6 24 120 720",
          [&] { return table(3, 6, [&](std::size_t n) { return order(triplet(n), 2); }); });

      auto quotient = [](QuotientCheck const& q) {
        return std::string(q.passed ? "pass " : "fail ") + std::to_string(q.kernel_order);
      };
      run(r, "congruence.quotient-alternating",
          "T_n[m]/T_n[3m] = A_n for (4,2), (5,2), (4,4), (4,5)",
          "pass 12, pass 60, pass 12, pass 12", [&] {
            std::string out;
            for (auto [n, m] : {std::pair{4, 2}, {5, 2}, {4, 4}, {4, 5}}) {
              out += (out.empty() ? "" : ", ") + quotient(check_quotient_alternating(n, m));
            }
            return out;
          });
      run(r, "congruence.quotient-even-vectors",
          "T_n[m]/T_n[4m] = even vectors of Z_2^{n-1} for (4,3), (5,3), (4,5)",
          "pass 4, pass 8, pass 4", [&] {
            std::string out;
            for (auto [n, m] : {std::pair{4, 3}, {5, 3}, {4, 5}}) {
              out += (out.empty() ? "" : ", ") + quotient(check_quotient_even_vectors(n, m));
            }
            return out;
          });
      run(r, "congruence.quotient-product", "|T_4[5]/T_4[60]| = 12 * 4", "pass 48",
          [&] { return quotient(check_quotient_product(4, 5)); });
      run(r, "congruence.minimal-power",
          "least k with (s_1 s_2)^k in T_3[m] is m for odd m, m/2 for even m, m = 3..24",
          table(3, 24, [](std::size_t m) { return m % 2 ? m : m / 2; }),
          [] { return table(3, 24, [](std::size_t m) { return minimal_congruence_power(m); }); });
      run(r, "congruence.crt",
          "T_n[mk] = T_n[m] and T_n[k] for coprime m, k on 500 words", "true", [] {
            std::mt19937_64 rng(777);
            for (int t = 0; t < 500; ++t) {
              std::size_t n = 3 + static_cast<std::size_t>(t % 3);
              auto        s = twin(n);
              Word        w = random_word(rng, s.rank(), 30);
              if (t % 2) {
                // Conjugate a power of s_i s_{i+1}, which often lands in a
                // congruence subgroup.
                std::size_t i = 1 + static_cast<std::size_t>(rng() % (s.rank() - 1));
                Word        u = random_word(rng, s.rank(), 6);
                w             = u;
                auto p = repeat(Word{i, i + 1}, 1 + rng() % 30);
                w.insert(w.end(), p.begin(), p.end());
                w.insert(w.end(), u.rbegin(), u.rend());
              }
              for (auto [m, k] : {std::pair{3u, 4u}, {4u, 5u}, {3u, 5u}, {2u, 9u}}) {
                if (congruence_member(s, w, m * k)
                    != (congruence_member(s, w, m) && congruence_member(s, w, k))) {
                  return std::string("false");
                }
              }
            }
            return std::string("true");
          });
      run(r, "congruence.rightangled-w4",
          "rho_4(W) is elementary abelian of order 2^rank for right-angled W, rank <= 5",
          "true", [] {
            for (std::size_t rank = 1; rank <= 5; ++rank) {
              std::size_t pairs = rank * (rank - 1) / 2;
              for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
                std::vector<std::vector<Exponent>> e(rank);
                std::size_t                        bit = 0;
                for (std::size_t i = 0; i < rank; ++i) {
                  for (std::size_t j = 0; j < rank; ++j) {
                    e[i].push_back(i == j ? Exponent{1u} : Exponent{});
                  }
                }
                for (std::size_t i = 0; i < rank; ++i) {
                  for (std::size_t j = i + 1; j < rank; ++j, ++bit) {
                    e[i][j] = e[j][i] = (mask >> bit & 1u) ? Exponent{2u} : infinity;
                  }
                }
                auto g = enumerate_image(build_system(e), 4);
                if (g.order() != (std::size_t{1} << rank)) {
                  return std::string("false");
                }
                for (std::size_t a = 0; a < g.order(); ++a) {
                  if (!(g.element(a) * g.element(a)).is_identity()) {
                    return std::string("false");
                  }
                }
              }
            }
            return std::string("true");
          });
      run(r, "congruence.rho3-not-onto", "|rho_3(T_n)| < |GL(n-1, Z_3)| for n = 4, 5",
          "24 < 11232, 120 < 24261120", [] {
            std::string out;
            for (std::size_t n : {4u, 5u}) {
              BigInt gl = 1, q = 1;
              for (std::size_t i = 0; i < n - 1; ++i, q *= 3) {
                BigInt full;
                mpz_ui_pow_ui(full.get_mpz_t(), 3, n - 1);
                gl *= full - q;
              }
              auto ord = enumerate_image(twin(n), 3).order();
              out += (out.empty() ? "" : ", ") + std::to_string(ord)
                     + (BigInt(static_cast<unsigned long>(ord)) < gl ? " < " : " >= ")
                     + gl.get_str();
            }
            return out;
          });
    }

    std::string invariants_of(Presentation const& pres, FiniteQuotientMap const& map) {
      return format_invariants(abelian_invariants(
          reidemeister_schreier(pres, coset_table(map))));
    }

    void rewriting_suite(VerificationReport& r) {
      run(r, "rewriting.pt4", "PT_4^ab = Z^{2^{n-3}(n^2-5n+8)-1} = Z^7", "Z^7", [] {
        return invariants_of(coxeter_presentation(twin(4)),
                             quotient_map(twin(4), QuotientKind::modular, 6));
      });
      run(r, "rewriting.pt5", "PT_5^ab = Z^31", "Z^31", [] {
        return invariants_of(coxeter_presentation(twin(5)),
                             quotient_map(twin(5), QuotientKind::modular, 6));
      });
      run(r, "rewriting.tn-prime", "T_n'^ab = Z^{2n-5}, n = 3..6", "Z^1 Z^3 Z^5 Z^7", [] {
        return table(3, 6, [](std::size_t n) {
          return invariants_of(coxeter_presentation(twin(n)),
                               quotient_map(twin(n), QuotientKind::mod2_abelian));
        });
      });
      run(r, "rewriting.ln-prime", "L_n'^ab = Z_3^{n-2}, n = 3..5",
          "Z_3 Z_3 + Z_3 Z_3 + Z_3 + Z_3", [] {
            std::string out;
            for (std::size_t n = 3; n <= 5; ++n) {
              out += (n == 3 ? "" : " ")
                     + invariants_of(coxeter_presentation(triplet(n)),
                                     quotient_map(triplet(n), QuotientKind::parity));
            }
            return out;
          });
      run(r, "rewriting.pl4-free", "PL_4 is free of rank 5 after Tietze moves",
          "5 generators, 0 relators", [] {
            auto pres = tietze_simplify(reidemeister_schreier(
                coxeter_presentation(triplet(4)),
                coset_table(quotient_map(triplet(4), QuotientKind::symmetric))));
            return std::to_string(pres.generators) + " generators, "
                   + std::to_string(pres.relators.size()) + " relators";
          });
      run(r, "rewriting.schreier-count",
          "N g - (N - 1) Schreier generators for PT_4, PT_5, PL_4, T_4'", "49 361 49 17", [] {
            std::string out;
            std::vector<FiniteQuotientMap> maps{
                quotient_map(twin(4), QuotientKind::modular, 6),
                quotient_map(twin(5), QuotientKind::modular, 6),
                quotient_map(triplet(4), QuotientKind::symmetric),
                quotient_map(twin(4), QuotientKind::mod2_abelian)};
            for (auto const& m : maps) {
              out += (out.empty() ? "" : " ")
                     + std::to_string(SchreierRewriter(coset_table(m)).generator_count());
            }
            return out;
          });
    }

    void crystallo_suite(VerificationReport& r) {
      auto faithful = [](HolonomyReport const& h) {
        return std::string(h.faithful ? "faithful" : "not faithful") + ", order "
               + std::to_string(h.holonomy_order) + ", dimension "
               + std::to_string(h.dimension);
      };
      run(r, "crystallo.theta", "T_n/T_n'' faithful of dimension 2n-5, n = 4..8",
          "faithful, order 8, dimension 3; faithful, order 16, dimension 5; "
          "faithful, order 32, dimension 7; faithful, order 64, dimension 9; "
          "faithful, order 128, dimension 11",
          [&] {
            std::string out;
            for (std::size_t n = 4; n <= 8; ++n) {
              out += (n == 4 ? "" : "; ") + faithful(theta_faithfulness(n));
            }
            return out;
          });
      run(r, "crystallo.pt4", "S_4 acts faithfully on PT_4/PT_4' = Z^7",
          "faithful, order 24, dimension 7", [&] {
            return faithful(holonomy_via_conjugation(
                twin(4), quotient_map(twin(4), QuotientKind::modular, 6)));
          });
      run(r, "crystallo.pt5", "S_5 acts faithfully on PT_5/PT_5' = Z^31",
          "faithful, order 120, dimension 31", [&] {
            return faithful(holonomy_via_conjugation(
                twin(5), quotient_map(twin(5), QuotientKind::modular, 6)));
          });
      run(r, "crystallo.pl4", "S_4 acts faithfully on PL_4/PL_4' = Z^{1+n!(2n-7)/6} = Z^5",
          "faithful, order 24, dimension 5", [&] {
            return faithful(holonomy_via_conjugation(
                triplet(4), quotient_map(triplet(4), QuotientKind::symmetric)));
          });
      run(r, "crystallo.pt3", "T_3/PT_3' is not crystallographic: A_3 acts trivially",
          "not faithful, kernel 3", [] {
            auto h = holonomy_via_conjugation(
                twin(3), quotient_map(twin(3), QuotientKind::symmetric));
            return std::string(h.faithful ? "faithful" : "not faithful") + ", kernel "
                   + std::to_string(h.kernel_witnesses.size() + 1);
          });
      run(r, "crystallo.cross-check",
          "action of a_k on the beta basis matches conjugation, n = 4, 5, 6",
          "true true true", [] {
            return table(4, 6, [](std::size_t n) {
              return theta_cross_check(n).passed ? "true" : "false";
            });
          });
    }

    void complexes_suite(VerificationReport& r) {
      run(r, "complexes.pl-rank", "rank PL_n = 0, 5, 61, 601, 5881 for n = 3..7",
          "0 5 61 601 5881", [] { return table(3, 7, [](std::size_t n) { return pl_rank(n); }); });
      run(r, "complexes.edges", "E = n!(n-1)/2, n = 3..8", "true", [] {
        for (std::size_t n = 3; n <= 8; ++n) {
          auto c = face_census(n);
          if (c.vertices != factorial(n) || c.edges != factorial(n) * (n - 1) / 2) {
            return std::string("false");
          }
        }
        return std::string("true");
      });
      run(r, "complexes.hexagons", "F6 = n!(n-2)/6, n = 3..8", "true", [] {
        for (std::size_t n = 3; n <= 8; ++n) {
          if (face_census(n).hexagons != factorial(n) * (n - 2) / 6) {
            return std::string("false");
          }
        }
        return std::string("true");
      });
      run(r, "complexes.euler", "chi = -n!(2n-7)/6 and rank = 1 + n!(2n-7)/6, n = 3..8",
          "true", [] {
            for (std::size_t n = 3; n <= 8; ++n) {
              BigInt expect = factorial(n) * (2 * static_cast<long>(n) - 7) / 6;
              if (face_census(n).chi() != -expect || pl_rank(n) != 1 + expect) {
                return std::string("false");
              }
            }
            return std::string("true");
          });
    }

    using Suite = void (*)(VerificationReport&);
    std::vector<std::pair<std::string, Suite>> const& suites() {
      static std::vector<std::pair<std::string, Suite>> const s{
          {"tits", tits_suite},
          {"congruence", congruence_suite},
          {"rewriting", rewriting_suite},
          {"crystallo", crystallo_suite},
          {"complexes", complexes_suite}};
      return s;
    }

  }  // namespace

  bool VerificationReport::passed() const {
    return std::all_of(claims.begin(), claims.end(), [](Claim const& c) { return c.pass; });
  }

  std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (auto const& [name, f] : suites()) {
      out.push_back(name);
    }
    out.push_back("all");
    return out;
  }

  VerificationReport verify(std::string const& suite) {
    VerificationReport report;
    report.suite = suite;
    bool found   = false;
    for (auto const& [name, f] : suites()) {
      if (suite == name || suite == "all") {
        f(report);
        found = true;
      }
    }
    if (!found) {
      throw PreconditionError("unknown suite \"" + suite + "\"");
    }
    return report;
  }

}  // namespace smallcox
