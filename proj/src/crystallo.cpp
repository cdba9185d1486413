#include "smallcox/crystallo.hpp"

#include <sstream>

#include "smallcox/errors.hpp"
#include "smallcox/rewriting.hpp"

namespace smallcox {

  std::size_t beta_index(std::size_t p, std::size_t j) {
    if (p > 1 || j < 1 || (p == 1 && j < 2)) {
      throw PreconditionError("no such beta generator");
    }
    if (j == 1) {
      return 0;
    }
    return 2 * j - 3 + p;
  }

  Word beta_word(std::size_t p, std::size_t j) {
    beta_index(p, j);
    Word b0{j + 1, j, j + 1, j};
    if (p == 0) {
      return b0;
    }
    Word w{j - 1};
    w.insert(w.end(), b0.begin(), b0.end());
    w.push_back(j - 1);
    return w;
  }

  IntMatrix theta_generator_matrix(std::size_t n, std::size_t k) {
    if (n < 3) {
      throw PreconditionError("theta needs n >= 3");
    }
    if (k < 1 || k > n - 1) {
      throw PreconditionError("generator index outside 1..n-1");
    }
    std::size_t const dim = 2 * n - 5;
    IntMatrix         m(dim);
    for (std::size_t j = 1; j <= n - 2; ++j) {
      for (std::size_t p = 0; p <= (j == 1 ? 0u : 1u); ++p) {
        std::size_t const col   = beta_index(p, j);
        std::size_t const other = 1 - p;
        if (j + 2 == k) {
          // b_p(j) -> b_0(j+1) + b_p(j) - b_1(j+1)
          m(beta_index(0, j + 1), col) += 1;
          m(col, col) += 1;
          m(beta_index(1, j + 1), col) -= 1;
        } else if (j + 1 == k || j == k) {
          m(col, col) = -1;
        } else if (j == k + 1) {
          m(beta_index(other, j), col) = 1;
        } else {
          m(col, col) = 1;
        }
      }
    }
    return m;
  }

  HolonomyReport theta_faithfulness(std::size_t n) {
    if (n < 3 || n > 12) {
      throw PreconditionError("theta_faithfulness needs 3 <= n <= 12");
    }
    std::size_t const      g = n - 1;
    std::vector<IntMatrix> gens;
    for (std::size_t k = 1; k <= g; ++k) {
      gens.push_back(theta_generator_matrix(n, k));
    }
    for (std::size_t a = 0; a < g; ++a) {
      if (!(gens[a] * gens[a]).is_identity()) {
        throw ValidationError("theta generator is not an involution");
      }
      for (std::size_t b = a + 1; b < g; ++b) {
        if (gens[a] * gens[b] != gens[b] * gens[a]) {
          throw ValidationError("theta generators do not commute");
        }
      }
    }
    HolonomyReport report;
    report.quotient       = "T_" + std::to_string(n) + "/T_" + std::to_string(n) + "''";
    report.dimension      = 2 * n - 5;
    report.holonomy_order = std::size_t{1} << g;
    std::vector<IntMatrix> product(report.holonomy_order);
    product[0] = IntMatrix::identity(report.dimension);
    for (std::size_t mask = 1; mask < product.size(); ++mask) {
      std::size_t low = 0;
      while (!(mask >> low & 1u)) {
        ++low;
      }
      product[mask] = product[mask & (mask - 1)] * gens[low];
      if (product[mask].is_identity()) {
        Word w;
        for (std::size_t k = 0; k < g; ++k) {
          if (mask >> k & 1u) {
            w.push_back(k + 1);
          }
        }
        report.kernel_witnesses.push_back(std::move(w));
      }
    }
    report.faithful = report.kernel_witnesses.empty();
    return report;
  }

  HolonomyReport holonomy_via_conjugation(CoxeterSystem const&     system,
                                          FiniteQuotientMap const& map,
                                          std::size_t              cap) {
    if (map.system() != system) {
      throw PreconditionError("quotient map is defined on another system");
    }
    CosetTable           table = coset_table(map, cap);
    KernelAbelianization kernel(coxeter_presentation(system), table);
    if (!kernel.invariants().torsion.empty()) {
      throw TorsionError("kernel abelianization " + format_invariants(kernel.invariants())
                         + " has torsion");
    }
    HolonomyReport report;
    std::string    label = quotient_kind_name(map.kind());
    if (map.kind() == QuotientKind::modular) {
      label += " " + std::to_string(map.modulus());
    }
    report.quotient       = "W/K' with K the kernel of the " + label + " map";
    report.dimension      = kernel.rank();
    report.holonomy_order = table.cosets();

    std::size_t const      r = kernel.rank();
    std::vector<IntMatrix> gens;
    for (std::size_t y = 1; y <= system.rank(); ++y) {
      gens.push_back(kernel.conjugation_matrix(Word{y}));
    }
    std::vector<IntMatrix> element(table.cosets());
    element[0] = IntMatrix::identity(r);
    for (std::size_t c = 1; c < table.cosets(); ++c) {
      Word const& w = table.transversal(c);
      std::size_t y = w.back();
      std::size_t p = table.act(c, -static_cast<int>(y));
      element[c]    = element[p] * gens[y - 1];
      if (element[c].is_identity()) {
        report.kernel_witnesses.push_back(w);
      }
    }
    report.faithful = report.kernel_witnesses.empty();
    return report;
  }

  CrossCheck theta_cross_check(std::size_t n) {
    if (n < 3 || n > 8) {
      throw PreconditionError("theta_cross_check needs 3 <= n <= 8");
    }
    CoxeterSystem const  system = twin(n);
    CosetTable           table  = coset_table(quotient_map(system, QuotientKind::mod2_abelian));
    KernelAbelianization kernel(coxeter_presentation(system), table);
    CrossCheck           out;
    std::size_t const    dim = 2 * n - 5;
    if (kernel.rank() != dim || !kernel.invariants().torsion.empty()) {
      out.detail = "abelianized commutator subgroup is "
                   + format_invariants(kernel.invariants());
      return out;
    }
    IntMatrix b(dim);
    for (std::size_t j = 1; j <= n - 2; ++j) {
      for (std::size_t p = 0; p <= (j == 1 ? 0u : 1u); ++p) {
        auto coords = kernel.coordinates(beta_word(p, j));
        for (std::size_t i = 0; i < dim; ++i) {
          b(i, beta_index(p, j)) = coords[i];
        }
      }
    }
    BigInt det = b.determinant();
    out.spans  = det == 1 || det == -1;
    if (!out.spans) {
      out.detail = "beta words fail to span: determinant " + det.get_str();
      return out;
    }
    std::ostringstream detail;
    for (std::size_t k = 1; k <= n - 1; ++k) {
      IntMatrix c = kernel.conjugation_matrix(Word{k});
      if (c * b != b * theta_generator_matrix(n, k)) {
        ++out.mismatches;
        detail << (out.mismatches > 1 ? ", " : "disagreement at k = ") << k;
      }
    }
    out.passed = out.mismatches == 0;
    out.detail = out.passed ? "formulas agree for all " + std::to_string(n - 1)
                                  + " generators"
                            : detail.str();
    return out;
  }

}  // namespace smallcox
