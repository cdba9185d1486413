// Square matrices over the integers (arbitrary precision) and over Z_m.

#ifndef SMALLCOX_MATRIX_HPP_
#define SMALLCOX_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace smallcox {

  using BigInt = mpz_class;

  class ModMatrix;

  class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim) {}
    IntMatrix(std::size_t dim, std::vector<BigInt> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t dim);

    std::size_t dimension() const noexcept {
      return _dim;
    }

    // 0-based row-major access.
    BigInt& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _dim + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _dim + j];
    }

    bool is_identity() const;
    bool operator==(IntMatrix const&) const = default;

    IntMatrix operator*(IntMatrix const& that) const;
    IntMatrix pow(std::size_t k) const;
    BigInt    determinant() const;
    ModMatrix reduce(std::uint32_t modulus) const;

   private:
    std::size_t         _dim = 0;
    std::vector<BigInt> _entries;
  };

  // Entries are always canonical residues 0..m-1.
  class ModMatrix {
   public:
    ModMatrix() = default;
    ModMatrix(std::size_t dim, std::uint32_t modulus);
    ModMatrix(std::size_t dim, std::uint32_t modulus,
              std::vector<std::uint32_t> entries);

    static ModMatrix identity(std::size_t dim, std::uint32_t modulus);

    std::size_t dimension() const noexcept {
      return _dim;
    }
    std::uint32_t modulus() const noexcept {
      return _modulus;
    }
    std::uint32_t operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _dim + j];
    }
    void set(std::size_t i, std::size_t j, long long value);

    std::span<std::uint32_t const> entries() const noexcept {
      return _entries;
    }

    bool is_identity() const;
    bool operator==(ModMatrix const&) const = default;

    ModMatrix operator*(ModMatrix const& that) const;
    ModMatrix pow(std::size_t k) const;
    // Reduction to a divisor d of the modulus.
    ModMatrix reduce(std::uint32_t divisor) const;
    std::uint32_t determinant() const;

    // Residues packed row-major with the narrowest width that holds m-1.
    static std::size_t encoded_size(std::size_t dim, std::uint32_t modulus);
    void               encode(std::uint8_t* out) const;
    static ModMatrix   decode(std::uint8_t const* in, std::size_t dim,
                              std::uint32_t modulus);

   private:
    std::size_t                _dim     = 0;
    std::uint32_t              _modulus = 2;
    std::vector<std::uint32_t> _entries;
  };

  // Width in bytes used per residue by ModMatrix::encode.
  std::size_t residue_width(std::uint32_t modulus);

  // Matrix text format: one row per line; modular matrices get a leading
  // "mod m" line.
  std::string format_matrix(IntMatrix const& m);
  std::string format_matrix(ModMatrix const& m);
  IntMatrix   parse_int_matrix(std::string const& text);
  ModMatrix   parse_mod_matrix(std::string const& text);

}  // namespace smallcox

#endif  // SMALLCOX_MATRIX_HPP_
