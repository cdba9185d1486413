// Integral Tits representation of small Coxeter systems, exactly over Z and
// reduced modulo m, together with the closed forms for products and squares
// of generator pairs.

#ifndef SMALLCOX_TITS_HPP_
#define SMALLCOX_TITS_HPP_

#include <cstddef>
#include <cstdint>

#include "smallcox/coxeter.hpp"
#include "smallcox/matrix.hpp"

namespace smallcox {

  // 1 for m=3, 0 for m=2, 2 for m=infinity and -1 on the diagonal.  Throws
  // PreconditionError on non-small systems.
  int alpha(CoxeterSystem const& system, std::size_t k, std::size_t j);

  // Identity except row k, which holds alpha(k, .).
  IntMatrix generator_matrix(CoxeterSystem const& system, std::size_t k);
  ModMatrix generator_matrix_mod(CoxeterSystem const& system, std::size_t k,
                                 std::uint32_t modulus);

  // Product of generator matrices in word order.
  IntMatrix evaluate(CoxeterSystem const& system, Word const& word);
  // Same product, reduced after every step.
  ModMatrix evaluate_mod(CoxeterSystem const& system, Word const& word,
                         std::uint32_t modulus);

  // sigma_k sigma_l assembled entrywise from the alpha table.
  IntMatrix pair_product_formula(CoxeterSystem const& system, std::size_t k,
                                 std::size_t l);
  // (sigma_k sigma_l)^2 assembled entrywise from the alpha table.
  IntMatrix pair_product_square_formula(CoxeterSystem const& system,
                                        std::size_t k, std::size_t l);

  // Coefficients of A Y^2 + B Y + C.
  struct PolyCoeffs {
    long long a;
    long long b;
    long long c;
    bool      operator==(PolyCoeffs const&) const = default;
  };

  // The quadratic remainder of Y^m - 1 on division by (Y-1)^3.
  PolyCoeffs pm_coefficients(unsigned m);

  // Whether (Y-1)^3 divides Y^m - 1 - (A Y^2 + B Y + C), by three rounds of
  // synthetic division at Y = 1.
  bool cube_divides(unsigned m, PolyCoeffs const& p);

  // (X_i X_{i+1})^m == I modulo 2m in the twin group T_n.
  bool order_check_2m(std::size_t n, unsigned m, std::size_t i);

  // [[2k+1, -2k], [2k, 1-2k]].
  IntMatrix twin_power_matrix(std::size_t k);

}  // namespace smallcox

#endif  // SMALLCOX_TITS_HPP_
