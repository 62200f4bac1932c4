#pragma once

// Complete coset tables and Todd-Coxeter enumeration (HLT strategy with
// coincidence processing).
//
// Cosets are numbered from 0 (the subgroup itself). Column 2g holds the action
// of generator g, column 2g+1 the action of its inverse.

#include "largeness/presentation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace largeness {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int column_of(int gen, int sign) { return 2 * gen + (sign > 0 ? 0 : 1); }
inline int inverse_column(int col) { return col ^ 1; }

class CosetTable {
 public:
  CosetTable() = default;

  /// Builds a table from the action of each generator (perm[g][c] = c * g).
  static CosetTable from_permutations(std::vector<std::vector<int>> const& perms) {
    if (perms.empty()) throw std::invalid_argument("need at least one generator");
    CosetTable t;
    t.ngens_ = static_cast<int>(perms.size());
    t.index_ = static_cast<int>(perms[0].size());
    if (t.index_ < 1) throw std::invalid_argument("empty coset table");
    t.cells_.assign(static_cast<std::size_t>(t.index_ * 2 * t.ngens_), -1);
    for (int g = 0; g < t.ngens_; ++g) {
      auto const& p = perms[static_cast<std::size_t>(g)];
      if (static_cast<int>(p.size()) != t.index_) throw std::invalid_argument("permutation sizes differ");
      for (int c = 0; c < t.index_; ++c) {
        int d = p[static_cast<std::size_t>(c)];
        if (d < 0 || d >= t.index_) throw std::invalid_argument("permutation entry out of range");
        if (t.at(d, column_of(g, -1)) != -1) throw std::invalid_argument("generator action is not a permutation");
        t.set(c, column_of(g, 1), d);
        t.set(d, column_of(g, -1), c);
      }
    }
    return t;
  }

  /// Raw row-major cells (index * 2 * ngens entries).
  static CosetTable from_cells(int index, int ngens, std::vector<int> cells) {
    CosetTable t;
    t.index_ = index;
    t.ngens_ = ngens;
    if (index < 1 || ngens < 1 || cells.size() != static_cast<std::size_t>(index * 2 * ngens)) {
      throw std::invalid_argument("coset table has the wrong shape");
    }
    t.cells_ = std::move(cells);
    return t;
  }

  int index() const noexcept { return index_; }
  int ngens() const noexcept { return ngens_; }
  int columns() const noexcept { return 2 * ngens_; }

  int at(int coset, int col) const { return cells_[static_cast<std::size_t>(coset * columns() + col)]; }
  int act(int coset, int gen, int sign) const { return at(coset, column_of(gen, sign)); }

  int trace(int coset, Word const& w) const {
    for (auto const& s : w.syllables()) {
      int col = column_of(s.gen, s.exp > 0 ? 1 : -1);
      for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) coset = at(coset, col);
    }
    return coset;
  }

  std::vector<int> const& cells() const noexcept { return cells_; }

  friend auto operator<=>(CosetTable const&, CosetTable const&) = default;
  friend bool operator==(CosetTable const&, CosetTable const&) = default;

 private:
  void set(int coset, int col, int value) { cells_[static_cast<std::size_t>(coset * columns() + col)] = value; }

  int index_ = 0;
  int ngens_ = 0;
  std::vector<int> cells_;
};

/// Renumbers cosets in order of first appearance in a row-major scan starting
/// from `base` (which becomes coset 0). Standardizing from base c gives the
/// table of the conjugate subgroup attached to coset c.
inline CosetTable standardize(CosetTable const& t, int base = 0) {
  int const n = t.index(), cols = t.columns();
  std::vector<int> to_new(static_cast<std::size_t>(n), -1), to_old;
  to_old.reserve(static_cast<std::size_t>(n));
  to_new[static_cast<std::size_t>(base)] = 0;
  to_old.push_back(base);
  for (std::size_t k = 0; k < to_old.size(); ++k) {
    for (int x = 0; x < cols; ++x) {
      int d = t.at(to_old[k], x);
      if (to_new[static_cast<std::size_t>(d)] == -1) {
        to_new[static_cast<std::size_t>(d)] = static_cast<int>(to_old.size());
        to_old.push_back(d);
      }
    }
  }
  if (static_cast<int>(to_old.size()) != n) throw std::invalid_argument("coset table is not transitive");
  std::vector<int> cells(static_cast<std::size_t>(n * cols));
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < cols; ++x) {
      cells[static_cast<std::size_t>(k * cols + x)] = to_new[static_cast<std::size_t>(t.at(to_old[static_cast<std::size_t>(k)], x))];
    }
  }
  return CosetTable::from_cells(n, t.ngens(), std::move(cells));
}

inline bool is_normal_table(CosetTable const& t) {
  for (int c = 1; c < t.index(); ++c) {
    if (standardize(t, c) != t) return false;
  }
  return true;
}

/// Full consistency check; returns an empty string when the table is a valid
/// standardized coset table of the presentation (subgroup generators, when
/// given, must fix coset 0), otherwise a description of the first failure.
inline std::string audit_table(CosetTable const& t, GroupPresentation const& p,
                               std::vector<Word> const& subgroup_gens = {}) {
  if (t.ngens() != p.ngens()) return "generator count differs from the presentation";
  int const n = t.index();
  for (int g = 0; g < t.ngens(); ++g) {
    for (int c = 0; c < n; ++c) {
      int d = t.act(c, g, 1);
      if (d < 0 || d >= n) return "entry out of range";
      int e = t.act(c, g, -1);
      if (e < 0 || e >= n) return "entry out of range";
      if (t.act(d, g, -1) != c) return "inverse column inconsistent at coset " + std::to_string(c);
    }
  }
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (int c = 0; c < n; ++c) {
      if (t.trace(c, p.relators()[i]) != c) {
        return "relator " + std::to_string(i) + " moves coset " + std::to_string(c);
      }
    }
  }
  for (std::size_t i = 0; i < subgroup_gens.size(); ++i) {
    if (t.trace(0, subgroup_gens[i]) != 0) return "subgroup generator " + std::to_string(i) + " does not fix coset 0";
  }
  try {
    if (standardize(t) != t) return "table is not standardized";
  } catch (std::invalid_argument const&) {
    return "table is not transitive";
  }
  return {};
}

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(GroupPresentation const& p, int limit) : p_(p), cols_(2 * p.ngens()), limit_(limit) {
    if (limit < 1) throw std::invalid_argument("coset limit must be positive");
    for (auto const& r : p.relators()) relators_.push_back(to_columns(r));
    new_coset();
  }

  CosetTable run(std::vector<Word> const& subgroup_gens) {
    for (auto const& w : subgroup_gens) {
      auto cw = to_columns(free_reduce(w));
      if (!cw.empty()) scan_and_fill(0, cw);
    }
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (auto const& r : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, r);
      }
      for (int x = 0; x < cols_ && live(c); ++x) {
        if (cell(c, x) == -1) define(c, x);
      }
    }
    return compact();
  }

 private:
  std::vector<int> to_columns(Word const& w) const {
    std::vector<int> out;
    for (auto const& s : w.syllables()) {
      int col = column_of(s.gen, s.exp > 0 ? 1 : -1);
      for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.push_back(col);
    }
    return out;
  }

  int& cell(int c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int new_coset() {
    int d = static_cast<int>(parent_.size());
    if (d >= limit_) throw LimitExceeded("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    parent_.push_back(d);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    return d;
  }

  void define(int c, int x) {
    int d = new_coset();
    cell(c, x) = d;
    cell(d, inverse_column(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        int f = cell(e, x);
        if (f == -1) continue;
        int ix = inverse_column(x);
        if (cell(f, ix) == e) cell(f, ix) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (cell(e1, x) != -1) {
          merge(f1, cell(e1, x), queue);
        } else if (cell(f1, ix) != -1) {
          merge(e1, cell(f1, ix), queue);
        } else {
          cell(e1, x) = f1;
          cell(f1, ix) = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, std::vector<int> const& w) {
    int const len = static_cast<int>(w.size());
    int f = c, b = c;
    int i = 0, j = len - 1;
    while (true) {
      while (i <= j && cell(f, w[static_cast<std::size_t>(i)]) != -1) {
        f = cell(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && cell(b, inverse_column(w[static_cast<std::size_t>(j)])) != -1) {
        b = cell(b, inverse_column(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        cell(f, w[static_cast<std::size_t>(i)]) = b;
        cell(b, inverse_column(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  CosetTable compact() {
    std::vector<int> to_new(parent_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(static_cast<int>(c))) to_new[c] = n++;
    }
    std::vector<int> cells(static_cast<std::size_t>(n * cols_));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (to_new[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) {
        int d = cell(static_cast<int>(c), x);
        cells[static_cast<std::size_t>(to_new[c] * cols_ + x)] = to_new[static_cast<std::size_t>(rep(d))];
      }
    }
    return standardize(CosetTable::from_cells(n, p_.ngens(), std::move(cells)));
  }

  GroupPresentation const& p_;
  int cols_;
  int limit_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> parent_;
  std::vector<int> table_;
};

}  // namespace detail

/// Enumerates the cosets of the subgroup generated by `subgroup_gens`.
/// Throws LimitExceeded if more than `coset_limit` cosets are ever defined.
inline CosetTable todd_coxeter(GroupPresentation const& p, std::vector<Word> const& subgroup_gens,
                               int coset_limit) {
  return detail::ToddCoxeter(p, coset_limit).run(subgroup_gens);
}

inline std::string format_table(CosetTable const& t) {
  std::ostringstream os;
  for (int c = 0; c < t.index(); ++c) {
    for (int x = 0; x < t.columns(); ++x) os << (x ? " " : "") << t.at(c, x);
    os << '\n';
  }
  return os.str();
}

}  // namespace largeness
