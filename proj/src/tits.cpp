#include "smallcox/tits.hpp"

#include <algorithm>
#include <vector>

#include "smallcox/errors.hpp"

namespace smallcox {

  namespace {
    void require_small(CoxeterSystem const& system) {
      if (!is_small(system)) {
        throw PreconditionError(
            "the Tits representation is integral only for small systems");
      }
    }

    void require_index(CoxeterSystem const& system, std::size_t k) {
      if (k < 1 || k > system.rank()) {
        throw PreconditionError("generator index out of range");
      }
    }

    // Right multiplication A <- A * X_k without forming X_k:
    // A X_k = A + (A e_k)(r_k - e_k)^T where r_k is row k of X_k.
    void right_multiply(IntMatrix& a, std::vector<int> const& row,
                        std::size_t k) {
      std::size_t const d = a.dimension();
      for (std::size_t i = 0; i < d; ++i) {
        BigInt const col = a(i, k);
        if (col == 0) {
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
          int delta = row[j] - (j == k ? 1 : 0);
          if (delta != 0) {
            a(i, j) += col * delta;
          }
        }
      }
    }

    std::vector<std::vector<int>> alpha_table(CoxeterSystem const& system) {
      std::size_t const             r = system.rank();
      std::vector<std::vector<int>> t(r, std::vector<int>(r));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          t[i][j] = alpha(system, i + 1, j + 1);
        }
      }
      return t;
    }
  }  // namespace

  int alpha(CoxeterSystem const& system, std::size_t k, std::size_t j) {
    require_small(system);
    require_index(system, k);
    require_index(system, j);
    if (k == j) {
      return -1;
    }
    Exponent m = system.exponent(k, j);
    if (!m) {
      return 2;
    }
    return *m == 3 ? 1 : 0;
  }

  IntMatrix generator_matrix(CoxeterSystem const& system, std::size_t k) {
    require_small(system);
    require_index(system, k);
    IntMatrix x = IntMatrix::identity(system.rank());
    for (std::size_t j = 1; j <= system.rank(); ++j) {
      x(k - 1, j - 1) = alpha(system, k, j);
    }
    return x;
  }

  ModMatrix generator_matrix_mod(CoxeterSystem const& system, std::size_t k,
                                 std::uint32_t modulus) {
    require_small(system);
    require_index(system, k);
    ModMatrix x = ModMatrix::identity(system.rank(), modulus);
    for (std::size_t j = 1; j <= system.rank(); ++j) {
      x.set(k - 1, j - 1, alpha(system, k, j));
    }
    return x;
  }

  IntMatrix evaluate(CoxeterSystem const& system, Word const& word) {
    require_small(system);
    validate_word(system, word);
    auto      table = alpha_table(system);
    IntMatrix a     = IntMatrix::identity(system.rank());
    for (std::size_t x : word) {
      right_multiply(a, table[x - 1], x - 1);
    }
    return a;
  }

  ModMatrix evaluate_mod(CoxeterSystem const& system, Word const& word,
                         std::uint32_t modulus) {
    if (modulus < 2) {
      throw PreconditionError("modulus must be at least 2");
    }
    require_small(system);
    validate_word(system, word);
    std::size_t const d     = system.rank();
    auto              table = alpha_table(system);
    std::vector<std::uint64_t> a(d * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      a[i * d + i] = 1;
    }
    // Row k of X_k reduced: entries alpha(k, j) mod m, minus 1 on the
    // diagonal for the rank-one update.
    std::vector<std::vector<std::uint64_t>> delta(d,
                                                  std::vector<std::uint64_t>(d));
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        long long v = table[k][j] - (j == k ? 1 : 0);
        v %= static_cast<long long>(modulus);
        delta[k][j] = static_cast<std::uint64_t>(v < 0 ? v + modulus : v);
      }
    }
    for (std::size_t x : word) {
      std::size_t const k = x - 1;
      for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t col = a[i * d + k];
        if (col == 0) {
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
          a[i * d + j] = (a[i * d + j] + col * delta[k][j]) % modulus;
        }
      }
    }
    std::vector<std::uint32_t> entries(a.begin(), a.end());
    return ModMatrix(d, modulus, std::move(entries));
  }

  IntMatrix pair_product_formula(CoxeterSystem const& system, std::size_t k,
                                 std::size_t l) {
    require_small(system);
    require_index(system, k);
    require_index(system, l);
    if (k == l) {
      throw PreconditionError("pair product needs distinct generators");
    }
    std::size_t const r   = system.rank();
    int const         akl = alpha(system, k, l);
    IntMatrix         c(r);
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = 1; j <= r; ++j) {
        long v;
        if (i != k && i != l) {
          v = i == j ? 1 : 0;
        } else if (i == l) {
          v = alpha(system, l, j);
        } else if (j == l) {
          v = -akl;
        } else {
          v = alpha(system, k, j) + alpha(system, l, j) * akl;
        }
        c(i - 1, j - 1) = v;
      }
    }
    return c;
  }

  IntMatrix pair_product_square_formula(CoxeterSystem const& system,
                                        std::size_t k, std::size_t l) {
    require_small(system);
    require_index(system, k);
    require_index(system, l);
    if (k == l) {
      throw PreconditionError("pair product needs distinct generators");
    }
    std::size_t const r = system.rank();
    long const        a = alpha(system, k, l);
    // gamma_j is row k of sigma_k sigma_l away from column l.
    auto gamma = [&](std::size_t j) -> long {
      if (j == k) {
        return a * a - 1;
      }
      return alpha(system, k, j) + alpha(system, l, j) * a;
    };
    IntMatrix d(r);
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = 1; j <= r; ++j) {
        long v;
        if (i != k && i != l) {
          v = i == j ? 1 : 0;
        } else if (i == k) {
          if (j == k) {
            v = a * a * a * a - 3 * a * a + 1;
          } else if (j == l) {
            v = -a * a * a + 2 * a;
          } else {
            v = gamma(j) * a * a - a * alpha(system, l, j);
          }
        } else {
          if (j == k) {
            v = a * a * a - 2 * a;
          } else if (j == l) {
            v = -a * a + 1;
          } else {
            v = a * gamma(j);
          }
        }
        d(i - 1, j - 1) = v;
      }
    }
    return d;
  }

  PolyCoeffs pm_coefficients(unsigned m) {
    if (m < 3) {
      throw PreconditionError("p_m is defined for m >= 3");
    }
    long long const mm = m;
    PolyCoeffs p{mm * (mm - 1) / 2, -mm * (mm - 2), mm * (mm - 3) / 2};
    if (!cube_divides(m, p)) {
      throw std::logic_error("p_m fails the divisibility check");
    }
    return p;
  }

  bool cube_divides(unsigned m, PolyCoeffs const& p) {
    // Coefficients of Y^m - 1 - p(Y), lowest degree first.
    std::vector<BigInt> f(std::max<std::size_t>(m, 2) + 1, 0);
    f[m] += 1;
    f[0] -= 1;
    f[0] -= static_cast<long>(p.c);
    f[1] -= static_cast<long>(p.b);
    f[2] -= static_cast<long>(p.a);
    for (int round = 0; round < 3; ++round) {
      // Synthetic division by (Y - 1): the remainder is f(1).
      std::size_t const   deg = f.size() - 1;
      std::vector<BigInt> q(deg);
      BigInt              carry = 0;
      for (std::size_t i = deg + 1; i-- > 0;) {
        carry += f[i];
        if (i > 0) {
          q[i - 1] = carry;
        }
      }
      if (carry != 0) {
        return false;
      }
      if (q.empty()) {
        return true;
      }
      f = std::move(q);
    }
    return true;
  }

  bool order_check_2m(std::size_t n, unsigned m, std::size_t i) {
    if (n < 3 || i < 1 || i + 2 > n) {
      throw PreconditionError("order check needs 1 <= i <= n-2");
    }
    if (m < 2) {
      throw PreconditionError("order check needs m >= 2");
    }
    CoxeterSystem t = twin(n);
    return evaluate_mod(t, repeat(Word{i, i + 1}, m), 2 * m).is_identity();
  }

  IntMatrix twin_power_matrix(std::size_t k) {
    BigInt    kk(static_cast<unsigned long>(k));
    IntMatrix m(2);
    m(0, 0) = 2 * kk + 1;
    m(0, 1) = -2 * kk;
    m(1, 0) = 2 * kk;
    m(1, 1) = 1 - 2 * kk;
    return m;
  }

}  // namespace smallcox
