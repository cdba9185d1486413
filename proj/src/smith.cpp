#include "smallcox/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace smallcox {

  std::string format_invariants(AbelianInvariants const& inv) {
    std::string out;
    if (inv.free_rank > 0) {
      out = "Z^" + std::to_string(inv.free_rank);
    }
    for (auto const& d : inv.torsion) {
      out += (out.empty() ? "" : " + ") + std::string("Z_") + d.get_str();
    }
    return out.empty() ? "0" : out;
  }

  SmithResult smith_normal_form(std::vector<std::vector<BigInt>> a,
                                std::size_t columns, bool track) {
    std::size_t const R = a.size();
    std::size_t const C = columns;
    for (auto const& row : a) {
      if (row.size() != C) {
        throw std::invalid_argument("ragged matrix");
      }
    }
    SmithResult out;
    if (track) {
      out.q.assign(C, std::vector<BigInt>(C, 0));
      out.q_inverse.assign(C, std::vector<BigInt>(C, 0));
      for (std::size_t i = 0; i < C; ++i) {
        out.q[i][i] = out.q_inverse[i][i] = 1;
      }
    }
    auto& q  = out.q;
    auto& qi = out.q_inverse;

    auto col_swap = [&](std::size_t j1, std::size_t j2, std::size_t from) {
      if (j1 == j2) {
        return;
      }
      for (std::size_t i = from; i < R; ++i) {
        std::swap(a[i][j1], a[i][j2]);
      }
      if (track) {
        for (std::size_t i = 0; i < C; ++i) {
          std::swap(q[i][j1], q[i][j2]);
        }
        std::swap(qi[j1], qi[j2]);
      }
    };
    // column j -= f * column t
    auto col_sub = [&](std::size_t j, std::size_t t, BigInt const& f) {
      for (std::size_t i = t; i < R; ++i) {
        if (a[i][t] != 0) {
          a[i][j] -= f * a[i][t];
        }
      }
      if (track) {
        for (std::size_t i = 0; i < C; ++i) {
          if (q[i][t] != 0) {
            q[i][j] -= f * q[i][t];
          }
        }
        for (std::size_t i = 0; i < C; ++i) {
          if (qi[j][i] != 0) {
            qi[t][i] += f * qi[j][i];
          }
        }
      }
    };
    // row i -= f * row t
    auto row_sub = [&](std::size_t i, std::size_t t, BigInt const& f) {
      for (std::size_t j = t; j < C; ++j) {
        if (a[t][j] != 0) {
          a[i][j] -= f * a[t][j];
        }
      }
    };

    BigInt    f;
    std::size_t t = 0;
    while (t < R && t < C) {
      // Pivot of least absolute value.
      std::size_t pi = R, pj = C;
      for (std::size_t i = t; i < R; ++i) {
        for (std::size_t j = t; j < C; ++j) {
          if (a[i][j] != 0
              && (pi == R || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == R) {
        break;
      }
      std::swap(a[t], a[pi]);
      col_swap(t, pj, t);
      while (true) {
        bool        residue = false;
        std::size_t best    = 0;
        for (std::size_t i = t + 1; i < R; ++i) {
          if (a[i][t] != 0) {
            mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
            row_sub(i, t, f);
            if (a[i][t] != 0 && (!residue || abs(a[i][t]) < abs(a[best][t]))) {
              residue = true;
              best    = i;
            }
          }
        }
        if (residue) {
          std::swap(a[t], a[best]);
          continue;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[t][j] != 0) {
            mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
            col_sub(j, t, f);
            if (a[t][j] != 0 && (!residue || abs(a[t][j]) < abs(a[t][best]))) {
              residue = true;
              best    = j;
            }
          }
        }
        if (residue) {
          col_swap(t, best, t);
          continue;
        }
        // The pivot must divide the rest of the matrix.
        std::size_t bad = R;
        for (std::size_t i = t + 1; i < R && bad == R; ++i) {
          for (std::size_t j = t + 1; j < C; ++j) {
            if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(),
                                                 a[t][t].get_mpz_t())) {
              bad = i;
              break;
            }
          }
        }
        if (bad == R) {
          break;
        }
        for (std::size_t j = t; j < C; ++j) {
          a[t][j] += a[bad][j];
        }
      }
      if (a[t][t] < 0) {
        for (std::size_t j = t; j < C; ++j) {
          a[t][j] = -a[t][j];
        }
      }
      out.diagonal.push_back(a[t][t]);
      ++t;
    }
    return out;
  }

  AbelianQuotient::AbelianQuotient(std::size_t            generators,
                                   std::vector<SparseRow> relations)
      : _generators(generators) {
    for (auto& row : relations) {
      for (auto it = row.begin(); it != row.end();) {
        if (it->first >= generators) {
          throw std::invalid_argument("relation mentions an unknown generator");
        }
        it = it->second == 0 ? row.erase(it) : std::next(it);
      }
    }
    std::vector<bool>                  active(relations.size());
    std::vector<std::set<std::size_t>> occurs(generators);
    for (std::size_t r = 0; r < relations.size(); ++r) {
      active[r] = !relations[r].empty();
      for (auto const& [g, c] : relations[r]) {
        occurs[g].insert(r);
      }
    }
    std::vector<bool> eliminated(generators, false);

    // Unit eliminations, shortest relation first.
    while (true) {
      std::size_t best = relations.size(), best_gen = 0;
      for (std::size_t r = 0; r < relations.size(); ++r) {
        if (!active[r]
            || (best != relations.size()
                && relations[r].size() >= relations[best].size())) {
          continue;
        }
        for (auto const& [g, c] : relations[r]) {
          if (c == 1 || c == -1) {
            best     = r;
            best_gen = g;
            break;
          }
        }
      }
      if (best == relations.size()) {
        break;
      }
      SparseRow const pivot = relations[best];
      BigInt const    unit  = pivot.at(best_gen);
      active[best]          = false;
      for (auto const& [g, c] : pivot) {
        occurs[g].erase(best);
      }
      relations[best].clear();

      SparseRow expr;
      for (auto const& [g, c] : pivot) {
        if (g != best_gen) {
          expr[g] = -unit * c;
        }
      }
      std::vector<std::size_t> const touched(occurs[best_gen].begin(),
                                             occurs[best_gen].end());
      for (std::size_t s : touched) {
        SparseRow&   row    = relations[s];
        BigInt const factor = row.at(best_gen) * unit;
        for (auto const& [g, c] : pivot) {
          BigInt& entry = row[g];
          bool    was   = entry != 0;
          entry -= factor * c;
          if (entry == 0) {
            row.erase(g);
            if (was) {
              occurs[g].erase(s);
            }
          } else if (!was) {
            occurs[g].insert(s);
          }
        }
        if (row.empty()) {
          active[s] = false;
        }
      }
      eliminated[best_gen] = true;
      _eliminations.emplace_back(best_gen, std::move(expr));
    }

    std::vector<std::size_t> position(generators, generators);
    for (std::size_t g = 0; g < generators; ++g) {
      if (!eliminated[g]) {
        position[g] = _survivors.size();
        _survivors.push_back(g);
      }
    }
    std::size_t const                S = _survivors.size();
    std::vector<std::vector<BigInt>> dense;
    for (std::size_t r = 0; r < relations.size(); ++r) {
      if (!active[r]) {
        continue;
      }
      std::vector<BigInt> row(S, 0);
      for (auto const& [g, c] : relations[r]) {
        row[position[g]] = c;
      }
      dense.push_back(std::move(row));
    }
    SmithResult snf = smith_normal_form(std::move(dense), S, true);
    _diagonal       = std::move(snf.diagonal);
    _q              = std::move(snf.q);
    _q_inverse      = std::move(snf.q_inverse);

    _invariants.free_rank = S - _diagonal.size();
    for (auto const& d : _diagonal) {
      if (d != 1) {
        _invariants.torsion.push_back(d);
      }
    }

    // Full y-coordinates (x restricted to survivors, times Q) of every
    // generator, filled in reverse elimination order.
    std::vector<std::vector<BigInt>> y(generators);
    for (std::size_t j = 0; j < S; ++j) {
      y[_survivors[j]] = _q[j];
    }
    for (auto it = _eliminations.rbegin(); it != _eliminations.rend(); ++it) {
      std::vector<BigInt> v(S, 0);
      for (auto const& [g, c] : it->second) {
        for (std::size_t j = 0; j < S; ++j) {
          if (y[g][j] != 0) {
            v[j] += c * y[g][j];
          }
        }
      }
      y[it->first] = std::move(v);
    }
    _coordinates = std::move(y);
    for (auto const& row : _coordinates) {
      _images.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(_diagonal.size()),
                           row.end());
    }
  }

  std::vector<BigInt>
  AbelianQuotient::survivor_coordinates(std::vector<BigInt> const& x) const {
    if (x.size() != _generators) {
      throw std::invalid_argument("vector length differs from generator count");
    }
    std::size_t const   S = _survivors.size();
    std::vector<BigInt> y(S, 0);
    for (std::size_t g = 0; g < _generators; ++g) {
      if (x[g] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < S; ++j) {
        if (_coordinates[g][j] != 0) {
          y[j] += x[g] * _coordinates[g][j];
        }
      }
    }
    return y;
  }

  std::vector<BigInt>
  AbelianQuotient::free_coordinates(std::vector<BigInt> const& x) const {
    auto y = survivor_coordinates(x);
    return {y.begin() + static_cast<std::ptrdiff_t>(_diagonal.size()), y.end()};
  }

  std::vector<BigInt>
  AbelianQuotient::torsion_coordinates(std::vector<BigInt> const& x) const {
    auto                y = survivor_coordinates(x);
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < _diagonal.size(); ++i) {
      if (_diagonal[i] != 1) {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), _diagonal[i].get_mpz_t());
        out.push_back(r);
      }
    }
    return out;
  }

  std::vector<BigInt> AbelianQuotient::free_basis_preimage(std::size_t i) const {
    if (i >= _invariants.free_rank) {
      throw std::out_of_range("free basis index out of range");
    }
    std::vector<BigInt> x(_generators, 0);
    auto const&         row = _q_inverse[_diagonal.size() + i];
    for (std::size_t j = 0; j < _survivors.size(); ++j) {
      x[_survivors[j]] = row[j];
    }
    return x;
  }

}  // namespace smallcox
