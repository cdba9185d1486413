#include "smallcox/quotient_map.hpp"

#include <utility>

#include "smallcox/congruence.hpp"
#include "smallcox/errors.hpp"
#include "smallcox/matrix.hpp"
#include "smallcox/tits.hpp"

namespace smallcox {

  QuotientKind parse_quotient_kind(std::string const& name) {
    if (name == "symmetric") {
      return QuotientKind::symmetric;
    } else if (name == "modular") {
      return QuotientKind::modular;
    } else if (name == "mod2" || name == "mod2_abelian") {
      return QuotientKind::mod2_abelian;
    } else if (name == "parity") {
      return QuotientKind::parity;
    } else if (name == "trivial") {
      return QuotientKind::trivial;
    }
    throw ValidationError("unknown quotient map \"" + name + "\"");
  }

  std::string quotient_kind_name(QuotientKind kind) {
    switch (kind) {
      case QuotientKind::symmetric:
        return "symmetric";
      case QuotientKind::modular:
        return "modular";
      case QuotientKind::mod2_abelian:
        return "mod2_abelian";
      case QuotientKind::parity:
        return "parity";
      case QuotientKind::trivial:
        return "trivial";
    }
    return "unknown";
  }

  Action permutation_action(std::size_t generators) {
    Action a;
    std::size_t const n = generators + 1;
    a.element_bytes     = n;
    a.generator_count   = generators;
    a.identity.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.identity[i] = static_cast<std::uint8_t>(i);
    }
    a.apply = [n](std::uint8_t const* in, std::size_t g, std::uint8_t* out) {
      std::copy(in, in + n, out);
      std::swap(out[g], out[g + 1]);
    };
    return a;
  }

  Action mod2_vector_action(std::size_t generators) {
    Action a;
    a.element_bytes   = generators;
    a.generator_count = generators;
    a.identity.assign(generators, 0);
    a.apply = [generators](std::uint8_t const* in, std::size_t g,
                           std::uint8_t* out) {
      std::copy(in, in + generators, out);
      out[g] ^= 1;
    };
    return a;
  }

  Action parity_action(std::size_t generators) {
    Action a;
    a.element_bytes   = 1;
    a.generator_count = generators;
    a.identity.assign(1, 0);
    a.apply = [](std::uint8_t const* in, std::size_t, std::uint8_t* out) {
      out[0] = in[0] ^ 1;
    };
    return a;
  }

  Action trivial_action(std::size_t generators) {
    Action a;
    a.element_bytes   = 1;
    a.generator_count = generators;
    a.identity.assign(1, 0);
    a.apply = [](std::uint8_t const*, std::size_t, std::uint8_t* out) {
      out[0] = 0;
    };
    return a;
  }

  namespace {
    Action make_action(CoxeterSystem const& system, QuotientKind kind,
                       std::uint32_t modulus) {
      switch (kind) {
        case QuotientKind::symmetric:
          if (system.rank() > 254) {
            throw PreconditionError("rank too large for permutation images");
          }
          return permutation_action(system.rank());
        case QuotientKind::modular:
          return modular_action(system, modulus);
        case QuotientKind::mod2_abelian:
          return mod2_vector_action(system.rank());
        case QuotientKind::parity:
          return parity_action(system.rank());
        case QuotientKind::trivial:
          return trivial_action(system.rank());
      }
      throw PreconditionError("unknown quotient kind");
    }
  }  // namespace

  FiniteQuotientMap::FiniteQuotientMap(CoxeterSystem system, QuotientKind kind,
                                       std::uint32_t modulus)
      : _system(std::move(system)),
        _kind(kind),
        _modulus(modulus),
        _action(make_action(_system, kind, modulus)) {
    std::size_t const r = _system.rank();
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = i; j <= r; ++j) {
        Exponent m = _system.exponent(i, j);
        if (!m) {
          continue;
        }
        if (image(repeat(Word{i, j}, *m)) != _action.identity) {
          throw ValidationError(
              quotient_kind_name(kind) + " images violate the relation (s_"
              + std::to_string(i) + " s_" + std::to_string(j) + ")^"
              + std::to_string(*m));
        }
      }
    }
  }

  std::vector<std::uint8_t> FiniteQuotientMap::image(Word const& word) const {
    validate_word(_system, word);
    std::vector<std::uint8_t> x = _action.identity;
    std::vector<std::uint8_t> y(x.size());
    for (std::size_t letter : word) {
      _action.apply(x.data(), letter - 1, y.data());
      std::swap(x, y);
    }
    return x;
  }

  std::vector<std::string> FiniteQuotientMap::generator_images() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= _system.rank(); ++i) {
      switch (_kind) {
        case QuotientKind::symmetric:
          out.push_back("(" + std::to_string(i) + "," + std::to_string(i + 1)
                        + ")");
          break;
        case QuotientKind::modular: {
          std::string s = format_matrix(
              generator_matrix_mod(_system, i, _modulus));
          out.push_back(s);
          break;
        }
        case QuotientKind::mod2_abelian:
          out.push_back("e_" + std::to_string(i));
          break;
        case QuotientKind::parity:
          out.push_back("1");
          break;
        case QuotientKind::trivial:
          out.push_back("0");
          break;
      }
    }
    return out;
  }

  FiniteQuotientMap quotient_map(CoxeterSystem const& system, QuotientKind kind,
                                 std::uint32_t modulus) {
    return FiniteQuotientMap(system, kind, modulus);
  }

  bool is_even_permutation(std::span<std::uint8_t const> perm) {
    std::vector<bool> seen(perm.size(), false);
    std::size_t       transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

}  // namespace smallcox
