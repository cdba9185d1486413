#include "smallcox/matrix.hpp"

#include <cstring>
#include <sstream>

#include "smallcox/errors.hpp"

namespace smallcox {

  IntMatrix::IntMatrix(std::size_t dim, std::vector<BigInt> entries)
      : _dim(dim), _entries(std::move(entries)) {
    if (_entries.size() != dim * dim) {
      throw ValidationError("matrix entry count does not match dimension");
    }
  }

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _dim(rows.size()) {
    _entries.reserve(_dim * _dim);
    for (auto const& row : rows) {
      if (row.size() != _dim) {
        throw ValidationError("matrix is not square");
      }
      for (long x : row) {
        _entries.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  bool IntMatrix::is_identity() const {
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        if ((*this)(i, j) != (i == j ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& that) const {
    if (_dim != that._dim) {
      throw PreconditionError("matrix dimensions differ");
    }
    IntMatrix out(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t k = 0; k < _dim; ++k) {
        BigInt const& a = (*this)(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          out(i, j) += a * that(k, j);
        }
      }
    }
    return out;
  }

  IntMatrix IntMatrix::pow(std::size_t k) const {
    IntMatrix result = identity(_dim);
    IntMatrix base   = *this;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  // Fraction-free Bareiss elimination.
  BigInt IntMatrix::determinant() const {
    if (_dim == 0) {
      return 1;
    }
    std::vector<BigInt> a     = _entries;
    auto                at    = [&](std::size_t i, std::size_t j) -> BigInt& {
      return a[i * _dim + j];
    };
    BigInt              prev  = 1;
    int                 sign  = 1;
    for (std::size_t k = 0; k + 1 < _dim; ++k) {
      if (at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < _dim && at(p, k) == 0) {
          ++p;
        }
        if (p == _dim) {
          return 0;
        }
        for (std::size_t j = 0; j < _dim; ++j) {
          std::swap(at(k, j), at(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < _dim; ++i) {
        for (std::size_t j = k + 1; j < _dim; ++j) {
          BigInt t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          at(i, j) = t;
        }
      }
      prev = at(k, k);
    }
    BigInt d = at(_dim - 1, _dim - 1);
    return sign > 0 ? d : BigInt(-d);
  }

  ModMatrix IntMatrix::reduce(std::uint32_t modulus) const {
    ModMatrix out(_dim, modulus);
    BigInt    r;
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        mpz_fdiv_r_ui(r.get_mpz_t(), (*this)(i, j).get_mpz_t(), modulus);
        out.set(i, j, static_cast<long long>(r.get_ui()));
      }
    }
    return out;
  }

  ModMatrix::ModMatrix(std::size_t dim, std::uint32_t modulus)
      : _dim(dim), _modulus(modulus), _entries(dim * dim, 0) {
    if (modulus < 2) {
      throw PreconditionError("modulus must be at least 2");
    }
  }

  ModMatrix::ModMatrix(std::size_t dim, std::uint32_t modulus,
                       std::vector<std::uint32_t> entries)
      : ModMatrix(dim, modulus) {
    if (entries.size() != dim * dim) {
      throw ValidationError("matrix entry count does not match dimension");
    }
    for (auto& x : entries) {
      x %= modulus;
    }
    _entries = std::move(entries);
  }

  ModMatrix ModMatrix::identity(std::size_t dim, std::uint32_t modulus) {
    ModMatrix m(dim, modulus);
    for (std::size_t i = 0; i < dim; ++i) {
      m._entries[i * dim + i] = 1;
    }
    return m;
  }

  void ModMatrix::set(std::size_t i, std::size_t j, long long value) {
    long long r = value % static_cast<long long>(_modulus);
    if (r < 0) {
      r += _modulus;
    }
    _entries[i * _dim + j] = static_cast<std::uint32_t>(r);
  }

  bool ModMatrix::is_identity() const {
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        if (_entries[i * _dim + j] != (i == j ? 1u : 0u)) {
          return false;
        }
      }
    }
    return true;
  }

  ModMatrix ModMatrix::operator*(ModMatrix const& that) const {
    if (_dim != that._dim || _modulus != that._modulus) {
      throw PreconditionError("incompatible modular matrices");
    }
    ModMatrix out(_dim, _modulus);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < _dim; ++k) {
          acc += static_cast<std::uint64_t>(_entries[i * _dim + k])
                 * that._entries[k * _dim + j] % _modulus;
        }
        out._entries[i * _dim + j] = static_cast<std::uint32_t>(acc % _modulus);
      }
    }
    return out;
  }

  ModMatrix ModMatrix::pow(std::size_t k) const {
    ModMatrix result = identity(_dim, _modulus);
    ModMatrix base   = *this;
    while (k > 0) {
      if (k & 1) {
        result = result * base;
      }
      k >>= 1;
      if (k > 0) {
        base = base * base;
      }
    }
    return result;
  }

  ModMatrix ModMatrix::reduce(std::uint32_t divisor) const {
    if (divisor < 2 || _modulus % divisor != 0) {
      throw PreconditionError("reduction modulus must divide the modulus");
    }
    ModMatrix out(_dim, divisor);
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      out._entries[i] = _entries[i] % divisor;
    }
    return out;
  }

  std::uint32_t ModMatrix::determinant() const {
    std::vector<BigInt> lifted(_entries.begin(), _entries.end());
    BigInt d = IntMatrix(_dim, std::move(lifted)).determinant();
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), _modulus);
    return static_cast<std::uint32_t>(r.get_ui());
  }

  std::size_t residue_width(std::uint32_t modulus) {
    if (modulus <= 256) {
      return 1;
    } else if (modulus <= 65536) {
      return 2;
    }
    return 4;
  }

  std::size_t ModMatrix::encoded_size(std::size_t dim, std::uint32_t modulus) {
    return dim * dim * residue_width(modulus);
  }

  void ModMatrix::encode(std::uint8_t* out) const {
    std::size_t w = residue_width(_modulus);
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      std::uint32_t x = _entries[i];
      for (std::size_t b = 0; b < w; ++b) {
        out[i * w + b] = static_cast<std::uint8_t>(x >> (8 * b));
      }
    }
  }

  ModMatrix ModMatrix::decode(std::uint8_t const* in, std::size_t dim,
                              std::uint32_t modulus) {
    ModMatrix   m(dim, modulus);
    std::size_t w = residue_width(modulus);
    for (std::size_t i = 0; i < dim * dim; ++i) {
      std::uint32_t x = 0;
      for (std::size_t b = 0; b < w; ++b) {
        x |= static_cast<std::uint32_t>(in[i * w + b]) << (8 * b);
      }
      m._entries[i] = x;
    }
    return m;
  }

  std::string format_matrix(IntMatrix const& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        out << (j ? " " : "") << m(i, j);
      }
      out << '\n';
    }
    return out.str();
  }

  std::string format_matrix(ModMatrix const& m) {
    std::ostringstream out;
    out << "mod " << m.modulus() << '\n';
    for (std::size_t i = 0; i < m.dimension(); ++i) {
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        out << (j ? " " : "") << m(i, j);
      }
      out << '\n';
    }
    return out.str();
  }

  namespace {
    std::vector<std::vector<BigInt>> parse_rows(std::istream& in) {
      std::vector<std::vector<BigInt>> rows;
      std::string                      line;
      while (std::getline(in, line)) {
        std::istringstream  ls(line);
        std::vector<BigInt> row;
        std::string         token;
        while (ls >> token) {
          BigInt x;
          if (x.set_str(token, 10) != 0) {
            throw ValidationError("matrix: bad entry \"" + token + "\"");
          }
          row.push_back(x);
        }
        if (!row.empty()) {
          rows.push_back(std::move(row));
        }
      }
      for (auto const& row : rows) {
        if (row.size() != rows.size()) {
          throw ValidationError("matrix is not square");
        }
      }
      return rows;
    }
  }  // namespace

  IntMatrix parse_int_matrix(std::string const& text) {
    std::istringstream in(text);
    auto               rows = parse_rows(in);
    std::vector<BigInt> entries;
    for (auto& row : rows) {
      for (auto& x : row) {
        entries.push_back(std::move(x));
      }
    }
    return IntMatrix(rows.size(), std::move(entries));
  }

  ModMatrix parse_mod_matrix(std::string const& text) {
    std::istringstream in(text);
    std::string        word;
    long long          modulus = 0;
    if (!(in >> word >> modulus) || word != "mod" || modulus < 2
        || modulus > 0xffffffffLL) {
      throw ValidationError("modular matrix: expected \"mod m\" header");
    }
    auto                       rows = parse_rows(in);
    ModMatrix                  m(rows.size(), static_cast<std::uint32_t>(modulus));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!rows[i][j].fits_slong_p()) {
          throw ValidationError("modular matrix: entry out of range");
        }
        m.set(i, j, rows[i][j].get_si());
      }
    }
    return m;
  }

}  // namespace smallcox
