#include "smallcox/congruence.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "smallcox/errors.hpp"
#include "smallcox/quotient_map.hpp"
#include "smallcox/tits.hpp"

namespace smallcox {

  namespace {
    constexpr std::size_t max_dimension = 16;

    std::uint32_t load(std::uint8_t const* p, std::size_t w) {
      std::uint32_t x = 0;
      for (std::size_t b = 0; b < w; ++b) {
        x |= static_cast<std::uint32_t>(p[b]) << (8 * b);
      }
      return x;
    }

    void store(std::uint8_t* p, std::size_t w, std::uint32_t x) {
      for (std::size_t b = 0; b < w; ++b) {
        p[b] = static_cast<std::uint8_t>(x >> (8 * b));
      }
    }

    std::vector<std::uint8_t> encoded(ModMatrix const& m) {
      std::vector<std::uint8_t> out(
          ModMatrix::encoded_size(m.dimension(), m.modulus()));
      m.encode(out.data());
      return out;
    }

    void require_twin_rank(std::size_t n) {
      if (n < 3) {
        throw PreconditionError("quotient checks need n >= 3");
      }
      if (n > 17) {
        throw PreconditionError("dimension too large for modular images");
      }
    }
  }  // namespace

  Action modular_action(CoxeterSystem const& system, std::uint32_t modulus) {
    if (modulus < 2) {
      throw PreconditionError("modulus must be at least 2");
    }
    if (!is_small(system)) {
      throw PreconditionError(
          "the Tits representation is integral only for small systems");
    }
    std::size_t const d = system.rank();
    if (d > max_dimension) {
      throw PreconditionError("dimension too large for modular images");
    }
    // delta[k] = row k of X_k minus e_k, reduced mod m.
    std::vector<std::vector<std::uint32_t>> delta(
        d, std::vector<std::uint32_t>(d));
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        long long v = alpha(system, k + 1, j + 1) - (j == k ? 1 : 0);
        v %= static_cast<long long>(modulus);
        delta[k][j] = static_cast<std::uint32_t>(v < 0 ? v + modulus : v);
      }
    }
    Action a;
    std::size_t const w = residue_width(modulus);
    a.element_bytes     = ModMatrix::encoded_size(d, modulus);
    a.generator_count   = d;
    a.identity          = encoded(ModMatrix::identity(d, modulus));
    a.apply = [d, w, modulus, delta](std::uint8_t const* in, std::size_t k,
                                     std::uint8_t* out) {
      if (out != in) {
        std::copy(in, in + d * d * w, out);
      }
      for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t col = load(in + (i * d + k) * w, w);
        if (col == 0) {
          continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
          if (delta[k][j] == 0) {
            continue;
          }
          std::uint8_t* p = out + (i * d + j) * w;
          std::uint64_t x = load(p, w);
          store(p, w,
                static_cast<std::uint32_t>((x + col * delta[k][j]) % modulus));
        }
      }
    };
    return a;
  }

  FiniteMatrixGroup::FiniteMatrixGroup(std::uint32_t modulus,
                                       std::size_t   dimension,
                                       std::vector<ModMatrix> generators,
                                       ElementStore           elements)
      : _modulus(modulus),
        _dim(dimension),
        _generators(std::move(generators)),
        _elements(std::move(elements)) {
    if (_elements.element_bytes() != ModMatrix::encoded_size(_dim, _modulus)) {
      throw PreconditionError("element width does not match the modulus");
    }
    if (_elements.size() == 0
        || !element(0).is_identity()) {
      throw PreconditionError("a matrix group must start with the identity");
    }
  }

  ModMatrix FiniteMatrixGroup::element(std::size_t index) const {
    return ModMatrix::decode(_elements[static_cast<std::uint32_t>(index)], _dim,
                             _modulus);
  }

  bool FiniteMatrixGroup::contains(ModMatrix const& m) const {
    if (m.dimension() != _dim || m.modulus() != _modulus) {
      return false;
    }
    return _elements.find(encoded(m).data()).has_value();
  }

  bool FiniteMatrixGroup::spot_check_closure(std::size_t   samples,
                                             std::uint64_t seed) const {
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      ModMatrix a = element(pick(rng));
      ModMatrix b = element(pick(rng));
      if (!contains(a * b)) {
        return false;
      }
      // In a finite group a^(|G|-1) is the inverse of a.
      ModMatrix inv = a.pow(order() - 1);
      if (!(inv * a).is_identity() || !contains(inv)) {
        return false;
      }
    }
    return true;
  }

  FiniteMatrixGroup enumerate_image(CoxeterSystem const& system,
                                    std::uint32_t modulus, std::size_t cap) {
    if (cap < 1) {
      throw PreconditionError("element budget must be positive");
    }
    Action                 action = modular_action(system, modulus);
    Orbit                  orbit  = enumerate_orbit(action, cap);
    std::vector<ModMatrix> gens;
    for (std::size_t k = 1; k <= system.rank(); ++k) {
      gens.push_back(generator_matrix_mod(system, k, modulus));
    }
    return FiniteMatrixGroup(modulus, system.rank(), std::move(gens),
                             std::move(orbit.elements));
  }

  bool congruence_member(CoxeterSystem const& system, Word const& word,
                         std::uint32_t modulus) {
    return evaluate_mod(system, word, modulus).is_identity();
  }

  FiniteMatrixGroup generated_subgroup(std::uint32_t modulus, std::size_t dim,
                                       std::vector<ModMatrix> const& generators,
                                       std::size_t                   cap) {
    std::size_t const width = ModMatrix::encoded_size(dim, modulus);
    ElementStore      store(width);
    std::vector<std::uint8_t> buffer(width);
    ModMatrix::identity(dim, modulus).encode(buffer.data());
    store.insert(buffer.data());
    for (std::uint32_t i = 0; i < store.size(); ++i) {
      ModMatrix x = ModMatrix::decode(store[i], dim, modulus);
      for (auto const& g : generators) {
        (x * g).encode(buffer.data());
        if (store.insert(buffer.data()).second && store.size() > cap) {
          throw BudgetExceeded(cap, store.size());
        }
      }
    }
    return FiniteMatrixGroup(modulus, dim, generators, std::move(store));
  }

  FiniteMatrixGroup reduction_kernel(FiniteMatrixGroup const& group,
                                     std::uint32_t            divisor) {
    if (divisor < 2 || group.modulus() % divisor != 0) {
      throw PreconditionError("the reduction modulus must divide "
                              + std::to_string(group.modulus()));
    }
    std::vector<ModMatrix> kernel;
    for (std::size_t i = 0; i < group.order(); ++i) {
      ModMatrix g = group.element(i);
      if (g.reduce(divisor).is_identity()) {
        kernel.push_back(std::move(g));
      }
    }
    // Greedy generating set: keep an element only if it is not yet generated.
    std::vector<ModMatrix> gens;
    FiniteMatrixGroup      current
        = generated_subgroup(group.modulus(), group.dimension(), gens);
    for (auto const& g : kernel) {
      if (!current.contains(g)) {
        gens.push_back(g);
        current
            = generated_subgroup(group.modulus(), group.dimension(), gens);
      }
    }
    if (current.order() != kernel.size()) {
      throw std::logic_error("reduction kernel is not closed");
    }
    return current;
  }

  QuotientCheck check_quotient_alternating(std::size_t n, unsigned m,
                                           std::size_t cap) {
    require_twin_rank(n);
    if (m < 2 || m % 3 == 0) {
      throw PreconditionError(
          "the alternating quotient needs m >= 2 with 3 not dividing m");
    }
    CoxeterSystem const t        = twin(n);
    std::uint32_t const modulus  = 3 * m;
    Action const        matrices = modular_action(t, modulus);
    Action const        paired
        = product_action(matrices, permutation_action(t.rank()));
    Orbit const         pairs    = enumerate_orbit(paired, cap);
    Orbit const         image    = enumerate_orbit(matrices, cap);

    QuotientCheck result;
    result.image_order = pairs.size();
    std::ostringstream detail;
    if (pairs.size() != image.size()) {
      detail << "permutation is not a function of the matrix ("
             << pairs.size() << " pairs over " << image.size()
             << " matrices); ";
    }
    std::size_t const mat_bytes = matrices.element_bytes;
    std::unordered_map<std::string, std::string> by_matrix;
    std::unordered_map<std::string, std::string> by_perm;
    bool all_even = true, well_defined = true, injective = true;
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
      auto      bytes = pairs.elements.bytes(i);
      ModMatrix g
          = ModMatrix::decode(bytes.data(), t.rank(), modulus);
      if (!g.reduce(m).is_identity()) {
        continue;
      }
      std::string key(bytes.begin(), bytes.begin() + mat_bytes);
      std::string perm(bytes.begin() + mat_bytes, bytes.end());
      all_even = all_even
                 && is_even_permutation(std::span<std::uint8_t const>(
                     bytes.data() + mat_bytes, n));
      auto [it, fresh] = by_matrix.emplace(key, perm);
      if (!fresh && it->second != perm) {
        well_defined = false;
      }
      auto [jt, fresh_perm] = by_perm.emplace(perm, key);
      if (!fresh_perm && jt->second != key) {
        injective = false;
      }
    }
    std::size_t half_factorial = 1;
    for (std::size_t i = 3; i <= n; ++i) {
      half_factorial *= i;
    }
    result.kernel_order = by_matrix.size();
    bool onto           = by_perm.size() == half_factorial;
    if (!all_even) {
      detail << "odd permutation in the kernel image; ";
    }
    if (!well_defined) {
      detail << "map is not well defined; ";
    }
    if (!injective) {
      detail << "map is not injective; ";
    }
    if (!onto) {
      detail << "image has " << by_perm.size() << " elements, expected "
             << half_factorial << "; ";
    }
    result.passed = pairs.size() == image.size() && all_even && well_defined
                    && injective && onto;
    result.detail = detail.str();
    return result;
  }

  QuotientCheck check_quotient_even_vectors(std::size_t n, unsigned m,
                                            std::size_t cap) {
    require_twin_rank(n);
    if (m < 3 || m % 2 == 0) {
      throw PreconditionError("the even-vector quotient needs odd m >= 3");
    }
    CoxeterSystem const t        = twin(n);
    std::uint32_t const modulus  = 4 * m;
    Action const        matrices = modular_action(t, modulus);
    Action const paired = product_action(matrices, mod2_vector_action(t.rank()));
    Orbit const  pairs  = enumerate_orbit(paired, cap);
    Orbit const  image  = enumerate_orbit(matrices, cap);

    QuotientCheck result;
    result.image_order = pairs.size();
    std::ostringstream detail;
    if (pairs.size() != image.size()) {
      detail << "vector is not a function of the matrix; ";
    }
    std::size_t const mat_bytes = matrices.element_bytes;
    std::unordered_map<std::string, std::string> by_matrix;
    std::unordered_map<std::string, std::string> by_vector;
    bool even = true, well_defined = true, injective = true;
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
      auto      bytes = pairs.elements.bytes(i);
      ModMatrix g     = ModMatrix::decode(bytes.data(), t.rank(), modulus);
      if (!g.reduce(m).is_identity()) {
        continue;
      }
      std::string key(bytes.begin(), bytes.begin() + mat_bytes);
      std::string vec(bytes.begin() + mat_bytes, bytes.end());
      even = even && std::count(vec.begin(), vec.end(), '\1') % 2 == 0;
      auto [it, fresh] = by_matrix.emplace(key, vec);
      if (!fresh && it->second != vec) {
        well_defined = false;
      }
      auto [jt, fresh_vec] = by_vector.emplace(vec, key);
      if (!fresh_vec && jt->second != key) {
        injective = false;
      }
    }
    std::size_t const expected = std::size_t(1) << (n - 2);
    result.kernel_order        = by_matrix.size();
    bool onto                  = by_vector.size() == expected;
    if (!even) {
      detail << "odd-weight vector in the kernel image; ";
    }
    if (!well_defined) {
      detail << "map is not well defined; ";
    }
    if (!injective) {
      detail << "map is not injective; ";
    }
    if (!onto) {
      detail << "image has " << by_vector.size() << " vectors, expected "
             << expected << "; ";
    }
    result.passed = pairs.size() == image.size() && even && well_defined
                    && injective && onto;
    result.detail = detail.str();
    return result;
  }

  QuotientCheck check_quotient_product(std::size_t n, unsigned m,
                                       std::size_t cap) {
    require_twin_rank(n);
    if (m < 2 || m % 2 == 0 || m % 3 == 0) {
      throw PreconditionError(
          "the product quotient needs m >= 2, odd and prime to 3");
    }
    QuotientCheck alternating = check_quotient_alternating(n, m, cap);
    QuotientCheck even        = check_quotient_even_vectors(n, m, cap);

    // rho_{12m} through the isomorphism Z_{12m} = Z_12 x Z_m.
    CoxeterSystem const t      = twin(n);
    Action const        mod12  = modular_action(t, 12);
    Action const        modm   = modular_action(t, m);
    Orbit const         pairs  = enumerate_orbit(product_action(mod12, modm), cap);
    std::size_t const   split  = mod12.element_bytes;
    std::size_t         kernel = 0;
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
      auto bytes = pairs.elements.bytes(i);
      if (std::equal(bytes.begin() + split, bytes.end(),
                     modm.identity.begin())) {
        ++kernel;
      }
    }
    QuotientCheck result;
    result.kernel_order = kernel;
    result.image_order  = pairs.size();
    std::ostringstream detail;
    bool const product_ok
        = alternating.kernel_order * even.kernel_order == kernel;
    if (!alternating.passed) {
      detail << "alternating component failed: " << alternating.detail;
    }
    if (!even.passed) {
      detail << "even-vector component failed: " << even.detail;
    }
    if (!product_ok) {
      detail << "kernel order " << kernel << " differs from "
             << alternating.kernel_order << " * " << even.kernel_order << "; ";
    }
    result.passed = alternating.passed && even.passed && product_ok;
    result.detail = detail.str();
    return result;
  }

  ProductGenerationCheck product_generation_check(std::size_t n, unsigned m,
                                                  unsigned k, std::size_t cap) {
    if (n < 3) {
      throw PreconditionError("product generation needs n >= 3");
    }
    if (m < 3 || k < 3) {
      throw PreconditionError("product generation needs m, k >= 3");
    }
    if (std::gcd(m, k) != 1) {
      throw PreconditionError("product generation needs coprime m and k");
    }
    CoxeterSystem const     t = twin(n);
    FiniteMatrixGroup const g = enumerate_image(t, m * k, cap);
    ProductGenerationCheck  result;
    result.group_order = g.order();

    std::vector<ModMatrix> even;
    std::vector<ModMatrix> kernels;
    for (std::size_t i = 0; i < g.order(); ++i) {
      ModMatrix x = g.element(i);
      if (x.determinant() == 1) {
        even.push_back(x);
      }
      if (x.reduce(m).is_identity() || x.reduce(k).is_identity()) {
        kernels.push_back(std::move(x));
      }
    }
    result.even_order = even.size();

    std::vector<ModMatrix> gens;
    FiniteMatrixGroup      h = generated_subgroup(m * k, t.rank(), gens, cap);
    for (auto const& x : kernels) {
      if (!h.contains(x)) {
        gens.push_back(x);
        h = generated_subgroup(m * k, t.rank(), gens, cap);
      }
    }
    result.generated_order = h.order();
    result.passed          = h.order() == even.size()
                    && std::all_of(even.begin(), even.end(),
                                   [&](ModMatrix const& x) {
                                     return h.contains(x);
                                   });
    return result;
  }

  std::size_t minimal_congruence_power(unsigned m) {
    if (m < 3) {
      throw PreconditionError("minimal congruence power needs m >= 3");
    }
    for (std::size_t k = 1;; ++k) {
      if (twin_power_matrix(k).reduce(m).is_identity()) {
        return k;
      }
    }
  }

  std::string format_group_dump(FiniteMatrixGroup const& group) {
    std::ostringstream out;
    out << "modulus " << group.modulus() << ", dimension " << group.dimension()
        << ", order " << group.order() << '\n';
    for (std::size_t i = 0; i < group.order(); ++i) {
      out << '\n';
      ModMatrix e = group.element(i);
      for (std::size_t r = 0; r < e.dimension(); ++r) {
        for (std::size_t c = 0; c < e.dimension(); ++c) {
          out << (c ? " " : "") << e(r, c);
        }
        out << '\n';
      }
    }
    return out.str();
  }

  GroupDump parse_group_dump(std::string const& text) {
    std::istringstream in(text);
    std::string        header;
    std::getline(in, header);
    GroupDump          dump;
    unsigned long      modulus = 0, dimension = 0, order = 0;
    if (std::sscanf(header.c_str(), "modulus %lu, dimension %lu, order %lu",
                    &modulus, &dimension, &order)
            != 3
        || modulus < 2) {
      throw ValidationError("group dump: bad header");
    }
    dump.modulus   = static_cast<std::uint32_t>(modulus);
    dump.dimension = dimension;
    for (unsigned long e = 0; e < order; ++e) {
      ModMatrix m(dimension, dump.modulus);
      for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t j = 0; j < dimension; ++j) {
          long long x;
          if (!(in >> x)) {
            throw ValidationError("group dump: truncated");
          }
          m.set(i, j, x);
        }
      }
      dump.elements.push_back(std::move(m));
    }
    return dump;
  }

}  // namespace smallcox
