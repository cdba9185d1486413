#include "smallcox/coxeter.hpp"

#include <algorithm>
#include <sstream>

#include "smallcox/errors.hpp"

namespace smallcox {

  namespace {
    std::string position(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    }
  }  // namespace

  CoxeterSystem::CoxeterSystem(std::vector<std::vector<Exponent>> exponents)
      : _rank(exponents.size()), _exponents(std::move(exponents)) {
    using Kind = CoxeterMatrixError::Kind;
    if (_rank == 0) {
      throw CoxeterMatrixError(Kind::not_square,
                               "Coxeter matrix must have positive rank");
    }
    for (auto const& row : _exponents) {
      if (row.size() != _rank) {
        throw CoxeterMatrixError(Kind::not_square,
                                 "Coxeter matrix is not square");
      }
    }
    for (std::size_t i = 0; i < _rank; ++i) {
      for (std::size_t j = 0; j < _rank; ++j) {
        if (_exponents[i][j] != _exponents[j][i]) {
          throw CoxeterMatrixError(
              Kind::not_symmetric,
              "Coxeter matrix is not symmetric at " + position(i, j));
        }
      }
    }
    for (std::size_t i = 0; i < _rank; ++i) {
      if (_exponents[i][i] != Exponent(1)) {
        throw CoxeterMatrixError(Kind::bad_diagonal,
                                 "diagonal entry at " + position(i, i)
                                     + " must be 1");
      }
      for (std::size_t j = 0; j < _rank; ++j) {
        if (i != j && _exponents[i][j] && *_exponents[i][j] < 2) {
          throw CoxeterMatrixError(Kind::bad_off_diagonal,
                                   "off-diagonal entry at " + position(i, j)
                                       + " must be at least 2");
        }
      }
    }
  }

  Exponent CoxeterSystem::exponent(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > _rank || j > _rank) {
      throw PreconditionError("generator index out of range");
    }
    return _exponents[i - 1][j - 1];
  }

  SimpleGraph::SimpleGraph(
      std::size_t                                             vertices,
      std::vector<std::pair<std::size_t, std::size_t>> const& edges)
      : _vertices(vertices) {
    for (auto [u, v] : edges) {
      add_edge(u, v);
    }
  }

  void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u < 1 || v < 1 || u > _vertices || v > _vertices) {
      throw ValidationError("edge endpoint out of range");
    }
    if (u == v) {
      throw ValidationError("simple graphs have no loops");
    }
    if (adjacent(u, v)) {
      throw ValidationError("duplicate edge");
    }
    _edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
    auto key = std::make_pair(std::min(u, v), std::max(u, v));
    return std::find(_edges.begin(), _edges.end(), key) != _edges.end();
  }

  Family parse_family(std::string const& name) {
    if (name == "twin") {
      return Family::twin;
    } else if (name == "triplet") {
      return Family::triplet;
    } else if (name == "symmetric") {
      return Family::symmetric;
    } else if (name == "universal") {
      return Family::universal;
    } else if (name == "w_nm") {
      return Family::w_nm;
    } else if (name == "racg") {
      return Family::racg;
    }
    throw ValidationError("unknown family \"" + name + "\"");
  }

  std::string family_name(Family family) {
    switch (family) {
      case Family::twin:
        return "twin";
      case Family::triplet:
        return "triplet";
      case Family::symmetric:
        return "symmetric";
      case Family::universal:
        return "universal";
      case Family::w_nm:
        return "w_nm";
      case Family::racg:
        return "racg";
    }
    return "unknown";
  }

  CoxeterSystem build_system(std::vector<std::vector<Exponent>> exponents) {
    return CoxeterSystem(std::move(exponents));
  }

  CoxeterSystem named_system(Family                     family,
                             std::size_t                n,
                             std::optional<unsigned>    m,
                             std::optional<SimpleGraph> graph) {
    if (family == Family::racg) {
      if (!graph) {
        throw PreconditionError("family racg requires a graph");
      }
      std::size_t r = graph->vertex_count();
      if (r == 0) {
        throw PreconditionError("graph must have at least one vertex");
      }
      std::vector<std::vector<Exponent>> e(r,
                                           std::vector<Exponent>(r, infinity));
      for (std::size_t i = 0; i < r; ++i) {
        e[i][i] = 1;
      }
      for (auto [u, v] : graph->edges()) {
        e[u - 1][v - 1] = e[v - 1][u - 1] = 2;
      }
      return CoxeterSystem(std::move(e));
    }
    if (n < 2) {
      throw PreconditionError("n must be at least 2");
    }
    if (family == Family::w_nm && (!m || *m < 2)) {
      throw PreconditionError("family w_nm requires m >= 2");
    }
    std::size_t                        r = n - 1;
    std::vector<std::vector<Exponent>> e(r, std::vector<Exponent>(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        std::size_t d = i > j ? i - j : j - i;
        if (d == 0) {
          e[i][j] = 1;
          continue;
        }
        bool adjacent = d == 1;
        switch (family) {
          case Family::twin:
            e[i][j] = adjacent ? infinity : Exponent(2);
            break;
          case Family::triplet:
            e[i][j] = adjacent ? Exponent(3) : infinity;
            break;
          case Family::symmetric:
            e[i][j] = adjacent ? 3 : 2;
            break;
          case Family::w_nm:
            e[i][j] = adjacent ? *m : 2;
            break;
          case Family::universal:
            e[i][j] = infinity;
            break;
          case Family::racg:
            break;
        }
      }
    }
    return CoxeterSystem(std::move(e));
  }

  CoxeterSystem twin(std::size_t n) {
    return named_system(Family::twin, n);
  }
  CoxeterSystem triplet(std::size_t n) {
    return named_system(Family::triplet, n);
  }
  CoxeterSystem symmetric(std::size_t n) {
    return named_system(Family::symmetric, n);
  }

  bool is_small(CoxeterSystem const& system) {
    for (auto const& row : system.exponents()) {
      for (auto const& x : row) {
        if (x && *x > 3) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_angled(CoxeterSystem const& system) {
    for (std::size_t i = 1; i <= system.rank(); ++i) {
      for (std::size_t j = 1; j <= system.rank(); ++j) {
        auto x = system.exponent(i, j);
        if (i != j && x && *x != 2) {
          return false;
        }
      }
    }
    return true;
  }

  bool valid_word(CoxeterSystem const& system, Word const& word) {
    return std::all_of(word.begin(), word.end(), [&](std::size_t x) {
      return x >= 1 && x <= system.rank();
    });
  }

  void validate_word(CoxeterSystem const& system, Word const& word) {
    if (!valid_word(system, word)) {
      throw ValidationError("word letter outside 1.."
                            + std::to_string(system.rank()));
    }
  }

  Word free_reduce(Word const& word) {
    Word out;
    out.reserve(word.size());
    for (auto x : word) {
      if (!out.empty() && out.back() == x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  Word concat(Word const& a, Word const& b) {
    Word out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  Word repeat(Word const& w, std::size_t times) {
    Word out;
    out.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  racg_join_decomposition(SimpleGraph const& graph) {
    std::size_t const        n = graph.vertex_count();
    std::vector<std::size_t> complement_degree(n + 1, 0);
    std::size_t              complement_edges = 0;
    for (std::size_t u = 1; u <= n; ++u) {
      for (std::size_t v = u + 1; v <= n; ++v) {
        if (!graph.adjacent(u, v)) {
          ++complement_degree[u];
          ++complement_degree[v];
          ++complement_edges;
        }
      }
    }
    std::size_t isolated = 0;
    for (std::size_t u = 1; u <= n; ++u) {
      if (complement_degree[u] > 1) {
        return std::nullopt;
      }
      isolated += complement_degree[u] == 0;
    }
    return std::make_pair(isolated, complement_edges);
  }

  CoxeterSystem parse_coxeter_matrix(std::string const& text) {
    std::istringstream in(text);
    long long          rank;
    if (!(in >> rank) || rank <= 0) {
      throw ValidationError("Coxeter matrix: expected a positive rank");
    }
    std::vector<std::vector<Exponent>> e(rank, std::vector<Exponent>(rank));
    for (auto& row : e) {
      for (auto& x : row) {
        std::string token;
        if (!(in >> token)) {
          throw ValidationError("Coxeter matrix: too few entries");
        }
        if (token == "inf") {
          x = infinity;
          continue;
        }
        std::size_t used = 0;
        long long   v    = 0;
        try {
          v = std::stoll(token, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != token.size() || v <= 0) {
          throw ValidationError("Coxeter matrix: bad entry \"" + token + "\"");
        }
        x = static_cast<unsigned>(v);
      }
    }
    std::string extra;
    if (in >> extra) {
      throw ValidationError("Coxeter matrix: trailing data");
    }
    return CoxeterSystem(std::move(e));
  }

  std::string format_coxeter_matrix(CoxeterSystem const& system) {
    std::ostringstream out;
    out << system.rank() << '\n';
    for (auto const& row : system.exponents()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out << (j ? " " : "");
        if (row[j]) {
          out << *row[j];
        } else {
          out << "inf";
        }
      }
      out << '\n';
    }
    return out.str();
  }

  Word parse_word(std::string const& text) {
    std::istringstream in(text);
    Word               w;
    std::string        token;
    while (in >> token) {
      std::size_t used = 0;
      long long   v    = 0;
      try {
        v = std::stoll(token, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != token.size() || v <= 0) {
        throw ValidationError("word: bad letter \"" + token + "\"");
      }
      w.push_back(static_cast<std::size_t>(v));
    }
    return w;
  }

  std::string format_word(Word const& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      out += (i ? " " : "") + std::to_string(word[i]);
    }
    return out;
  }

}  // namespace smallcox
