#include "smallcox/rewriting.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "smallcox/errors.hpp"

namespace smallcox {

  namespace {

    std::size_t letter_index(int letter) {
      return static_cast<std::size_t>(std::abs(letter));
    }

    // Least rotation of r or of its inverse, identifying relators that
    // define the same normal closure.
    Relator canonical(Relator const& r) {
      Relator best = r;
      for (Relator const& base : {r, invert(r)}) {
        Relator rot = base;
        for (std::size_t i = 0; i < rot.size(); ++i) {
          std::rotate(rot.begin(), rot.begin() + 1, rot.end());
          best = std::min(best, rot);
        }
      }
      return best;
    }

    void normalise(Presentation& pres) {
      std::set<Relator>    seen;
      std::vector<Relator> kept;
      for (auto const& r : pres.relators) {
        Relator c = cyclic_reduce(r);
        if (c.empty()) {
          continue;
        }
        if (seen.insert(canonical(c)).second) {
          kept.push_back(std::move(c));
        }
      }
      pres.relators = std::move(kept);
    }

  }  // namespace

  void validate_presentation(Presentation const& pres) {
    for (auto const& r : pres.relators) {
      for (int letter : r) {
        if (letter == 0 || letter_index(letter) > pres.generators) {
          throw ValidationError("relator letter " + std::to_string(letter)
                                + " outside 1.." + std::to_string(pres.generators));
        }
      }
    }
  }

  Relator free_reduce(Relator const& r) {
    Relator out;
    out.reserve(r.size());
    for (int letter : r) {
      if (!out.empty() && out.back() == -letter) {
        out.pop_back();
      } else {
        out.push_back(letter);
      }
    }
    return out;
  }

  Relator cyclic_reduce(Relator const& r) {
    Relator     out   = free_reduce(r);
    std::size_t begin = 0, end = out.size();
    while (end - begin >= 2 && out[begin] == -out[end - 1]) {
      ++begin;
      --end;
    }
    return {out.begin() + static_cast<std::ptrdiff_t>(begin),
            out.begin() + static_cast<std::ptrdiff_t>(end)};
  }

  Relator invert(Relator const& r) {
    Relator out(r.rbegin(), r.rend());
    for (int& letter : out) {
      letter = -letter;
    }
    return out;
  }

  Relator to_relator(Word const& word) {
    Relator out;
    out.reserve(word.size());
    for (std::size_t letter : word) {
      out.push_back(static_cast<int>(letter));
    }
    return out;
  }

  Presentation coxeter_presentation(CoxeterSystem const& system) {
    Presentation pres;
    pres.generators   = system.rank();
    std::size_t const n = system.rank();
    for (std::size_t i = 1; i <= n; ++i) {
      pres.relators.push_back({static_cast<int>(i), static_cast<int>(i)});
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (auto m = system.exponent(i, j)) {
          Relator r;
          for (unsigned k = 0; k < *m; ++k) {
            r.push_back(static_cast<int>(i));
            r.push_back(static_cast<int>(j));
          }
          pres.relators.push_back(std::move(r));
        }
      }
    }
    return pres;
  }

  std::string format_presentation(Presentation const& pres) {
    std::ostringstream out;
    out << "gens " << pres.generators << '\n';
    for (auto const& r : pres.relators) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        out << (i ? " " : "") << r[i];
      }
      out << '\n';
    }
    return out.str();
  }

  Presentation parse_presentation(std::string const& text) {
    std::istringstream in(text);
    std::string        line;
    Presentation       pres;
    bool               header = false;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      if (!header) {
        std::string key;
        if (!(fields >> key)) {
          continue;
        }
        long long g = -1;
        std::string rest;
        if (key != "gens" || !(fields >> g) || g < 0 || (fields >> rest)) {
          throw ValidationError("presentation must start with \"gens g\"");
        }
        pres.generators = static_cast<std::size_t>(g);
        header          = true;
        continue;
      }
      Relator     r;
      std::string token;
      while (fields >> token) {
        std::size_t used = 0;
        long        v    = 0;
        try {
          v = std::stol(token, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != token.size() || v == 0
            || std::abs(v) > std::numeric_limits<int>::max()) {
          throw ValidationError("bad relator letter \"" + token + "\"");
        }
        r.push_back(static_cast<int>(v));
      }
      if (!r.empty()) {
        pres.relators.push_back(std::move(r));
      }
    }
    if (!header) {
      throw ValidationError("empty presentation");
    }
    validate_presentation(pres);
    return pres;
  }

  CosetTable::CosetTable(std::size_t generators, std::vector<std::uint32_t> action,
                         std::vector<Word> transversal)
      : _generators(generators),
        _forward(std::move(action)),
        _transversal(std::move(transversal)) {
    std::size_t const n = _transversal.size();
    if (n == 0 || _forward.size() != n * generators) {
      throw ValidationError("coset table has the wrong shape");
    }
    if (!_transversal[0].empty()) {
      throw ValidationError("coset 0 must have the empty representative");
    }
    _backward.assign(_forward.size(), std::numeric_limits<std::uint32_t>::max());
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t g = 0; g < generators; ++g) {
        std::uint32_t d = _forward[c * generators + g];
        if (d >= n || _backward[d * generators + g] != std::numeric_limits<std::uint32_t>::max()) {
          throw ValidationError("generator does not permute the cosets");
        }
        _backward[d * generators + g] = static_cast<std::uint32_t>(c);
      }
    }
    // The transversal must be prefix closed and consistent with the table.
    _parent.assign(n, no_parent);
    _parent_generator.assign(n, 0);
    for (std::size_t c = 1; c < n; ++c) {
      Word const& w = _transversal[c];
      if (w.empty() || w.back() < 1 || w.back() > generators) {
        throw ValidationError("bad transversal word");
      }
      std::size_t p = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        p = act(p, static_cast<int>(w[i]));
      }
      if (_transversal[p].size() + 1 != w.size()
          || !std::equal(_transversal[p].begin(), _transversal[p].end(), w.begin())
          || act(p, static_cast<int>(w.back())) != c) {
        throw ValidationError("transversal is not a Schreier transversal");
      }
      _parent[c]           = static_cast<std::uint32_t>(p);
      _parent_generator[c] = static_cast<std::uint8_t>(w.back() - 1);
    }
  }

  std::size_t CosetTable::act(std::size_t coset, int letter) const {
    std::size_t g = letter_index(letter);
    if (g == 0 || g > _generators || coset >= cosets()) {
      throw std::out_of_range("coset action out of range");
    }
    auto const& t = letter > 0 ? _forward : _backward;
    return t[coset * _generators + g - 1];
  }

  std::size_t CosetTable::act(std::size_t coset, Relator const& word) const {
    for (int letter : word) {
      coset = act(coset, letter);
    }
    return coset;
  }

  bool CosetTable::tree_edge(std::size_t coset, std::size_t g) const {
    std::size_t d = act(coset, static_cast<int>(g));
    return d != 0 && _parent[d] == coset && _parent_generator[d] + 1u == g;
  }

  CosetTable coset_table(Action const& action, std::size_t cap) {
    Orbit             orbit = enumerate_orbit(action, cap, true);
    std::vector<Word> transversal;
    transversal.reserve(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      transversal.push_back(orbit.word(static_cast<std::uint32_t>(i)));
    }
    return CosetTable(action.generator_count, std::move(orbit.table),
                      std::move(transversal));
  }

  CosetTable coset_table(FiniteQuotientMap const& map, std::size_t cap) {
    return coset_table(map.action(), cap);
  }

  SchreierRewriter::SchreierRewriter(CosetTable table) : _table(std::move(table)) {
    std::size_t const g = _table.generators();
    _number.assign(_table.cosets() * g, -1);
    for (std::size_t c = 0; c < _table.cosets(); ++c) {
      for (std::size_t y = 1; y <= g; ++y) {
        if (!_table.tree_edge(c, y)) {
          _number[c * g + y - 1] = static_cast<std::int64_t>(_edges.size());
          _edges.emplace_back(c, y);
        }
      }
    }
  }

  Relator SchreierRewriter::schreier_word(std::size_t index) const {
    auto [c, y] = _edges.at(index);
    Relator w   = to_relator(_table.transversal(c));
    w.push_back(static_cast<int>(y));
    Relator back = invert(to_relator(_table.transversal(_table.act(c, static_cast<int>(y)))));
    w.insert(w.end(), back.begin(), back.end());
    return w;
  }

  Relator SchreierRewriter::rewrite(Relator const& word, std::size_t start,
                                    std::size_t* end) const {
    std::size_t const g = _table.generators();
    Relator           out;
    std::size_t       c = start;
    for (int letter : word) {
      std::size_t y = letter_index(letter);
      if (letter > 0) {
        std::int64_t s = _number[c * g + y - 1];
        if (s >= 0) {
          out.push_back(static_cast<int>(s + 1));
        }
        c = _table.act(c, letter);
      } else {
        std::size_t  d = _table.act(c, letter);
        std::int64_t s = _number[d * g + y - 1];
        if (s >= 0) {
          out.push_back(-static_cast<int>(s + 1));
        }
        c = d;
      }
    }
    if (end) {
      *end = c;
    }
    return free_reduce(out);
  }

  std::vector<BigInt> SchreierRewriter::exponent_sums(Relator const& word) const {
    std::size_t end = 0;
    Relator     r   = rewrite(word, 0, &end);
    if (end != 0) {
      throw PreconditionError("word does not lie in the subgroup");
    }
    std::vector<BigInt> sums(generator_count(), 0);
    for (int letter : r) {
      sums[letter_index(letter) - 1] += letter > 0 ? 1 : -1;
    }
    return sums;
  }

  Presentation reidemeister_schreier(Presentation const& pres,
                                     CosetTable const&   table) {
    validate_presentation(pres);
    if (pres.generators != table.generators()) {
      throw PreconditionError("coset table and presentation disagree on generators");
    }
    SchreierRewriter rw(table);
    Presentation     out;
    out.generators = rw.generator_count();
    for (auto const& r : pres.relators) {
      for (std::size_t c = 0; c < table.cosets(); ++c) {
        std::size_t end = 0;
        Relator     w   = rw.rewrite(r, c, &end);
        if (end != c) {
          throw PreconditionError("relator does not hold in the quotient");
        }
        if (!w.empty()) {
          out.relators.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  Presentation tietze_simplify(Presentation pres) {
    validate_presentation(pres);
    while (true) {
      normalise(pres);
      // Shortest relator containing a generator exactly once.
      std::size_t best = pres.relators.size();
      int         pick = 0;
      std::vector<int> count(pres.generators + 1);
      for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        Relator const& r = pres.relators[i];
        if (best != pres.relators.size() && r.size() >= pres.relators[best].size()) {
          continue;
        }
        std::fill(count.begin(), count.end(), 0);
        for (int letter : r) {
          ++count[letter_index(letter)];
        }
        for (int letter : r) {
          if (count[letter_index(letter)] == 1) {
            best = i;
            pick = letter;
            break;
          }
        }
      }
      if (best == pres.relators.size()) {
        return pres;
      }
      // Rotate so that the chosen letter comes first: pick * rest = 1.
      Relator r   = pres.relators[best];
      auto    pos = std::find(r.begin(), r.end(), pick);
      std::rotate(r.begin(), pos, r.end());
      Relator rest(r.begin() + 1, r.end());
      int const x = static_cast<int>(letter_index(pick));
      // x = rest^{-1} when pick is positive, x = rest otherwise.
      Relator const value = pick > 0 ? invert(rest) : rest;
      Relator const value_inverse = invert(value);

      auto renumber = [x](int letter) {
        int a = static_cast<int>(letter_index(letter));
        a     = a > x ? a - 1 : a;
        return letter > 0 ? a : -a;
      };
      std::vector<Relator> next;
      next.reserve(pres.relators.size());
      for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        if (i == best) {
          continue;
        }
        Relator out;
        for (int letter : pres.relators[i]) {
          if (letter == x) {
            out.insert(out.end(), value.begin(), value.end());
          } else if (letter == -x) {
            out.insert(out.end(), value_inverse.begin(), value_inverse.end());
          } else {
            out.push_back(letter);
          }
        }
        for (int& letter : out) {
          letter = renumber(letter);
        }
        next.push_back(std::move(out));
      }
      pres.relators = std::move(next);
      --pres.generators;
    }
  }

  namespace {

    std::vector<SparseRow> relation_rows(Presentation const& pres) {
      std::vector<SparseRow> rows;
      rows.reserve(pres.relators.size());
      for (auto const& r : pres.relators) {
        SparseRow row;
        for (int letter : r) {
          row[letter_index(letter) - 1] += letter > 0 ? 1 : -1;
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

  }  // namespace

  AbelianInvariants abelian_invariants(Presentation const& pres) {
    validate_presentation(pres);
    return AbelianQuotient(pres.generators, relation_rows(pres)).invariants();
  }

  KernelAbelianization::KernelAbelianization(Presentation const& ambient,
                                             CosetTable          table)
      : _rewriter(table),
        _presentation(reidemeister_schreier(ambient, table)),
        _quotient(_presentation.generators, relation_rows(_presentation)) {}

  std::vector<BigInt> KernelAbelianization::coordinates(Relator const& word) const {
    return _quotient.free_coordinates(_rewriter.exponent_sums(word));
  }

  std::vector<BigInt> KernelAbelianization::coordinates(Word const& word) const {
    return coordinates(to_relator(word));
  }

  std::vector<BigInt> KernelAbelianization::torsion_coordinates(Word const& word) const {
    return _quotient.torsion_coordinates(_rewriter.exponent_sums(to_relator(word)));
  }

  IntMatrix KernelAbelianization::conjugation_matrix(Word const& ambient) const {
    std::size_t const r = rank();
    IntMatrix         m(r);
    if (r == 0) {
      return m;
    }
    Relator const u     = to_relator(ambient);
    Relator const u_inv = invert(u);
    auto const&   images = _quotient.generator_images();
    // psi[t] = coordinates of u S_t u^{-1}, needed only where a free basis
    // preimage is nonzero.
    std::vector<std::vector<BigInt>> basis;
    std::vector<bool>                needed(_rewriter.generator_count(), false);
    for (std::size_t i = 0; i < r; ++i) {
      basis.push_back(_quotient.free_basis_preimage(i));
      for (std::size_t t = 0; t < basis.back().size(); ++t) {
        needed[t] = needed[t] || basis.back()[t] != 0;
      }
    }
    std::vector<std::vector<BigInt>> psi(_rewriter.generator_count());
    for (std::size_t t = 0; t < psi.size(); ++t) {
      if (!needed[t]) {
        continue;
      }
      Relator w = u;
      Relator s = _rewriter.schreier_word(t);
      w.insert(w.end(), s.begin(), s.end());
      w.insert(w.end(), u_inv.begin(), u_inv.end());
      std::size_t end = 0;
      Relator     rw  = _rewriter.rewrite(w, 0, &end);
      if (end != 0) {
        throw PreconditionError("ambient word does not normalise the kernel");
      }
      std::vector<BigInt> v(r, 0);
      for (int letter : rw) {
        auto const& img = images[letter_index(letter) - 1];
        for (std::size_t j = 0; j < r; ++j) {
          if (letter > 0) {
            v[j] += img[j];
          } else {
            v[j] -= img[j];
          }
        }
      }
      psi[t] = std::move(v);
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t t = 0; t < psi.size(); ++t) {
        if (basis[i][t] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < r; ++j) {
          m(j, i) += basis[i][t] * psi[t][j];
        }
      }
    }
    return m;
  }

  IntMatrix kernel_conjugation_matrix(Presentation const& pres,
                                      CosetTable const& table,
                                      Word const&       ambient) {
    return KernelAbelianization(pres, table).conjugation_matrix(ambient);
  }

}  // namespace smallcox
