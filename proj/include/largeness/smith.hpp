#pragma once

// Smith normal form over the integers and the abelian invariants of a
// presentation built on top of it.

#include "largeness/bigint.hpp"
#include "largeness/presentation.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace largeness {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (auto v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  BigInt const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, BigInt const& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
    }
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, BigInt const& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
    }
  }

  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

enum class Transforms { none, both };

struct SmithForm {
  std::vector<BigInt> diagonal;  // min(rows, cols) entries, d1 | d2 | ..., zeros last
  IntMatrix left;                // unimodular, left * M * right == diag (only with Transforms::both)
  IntMatrix right;
};

/// Pivots on the entry of smallest absolute value to keep coefficients small.
inline SmithForm smith_normal_form(IntMatrix a, Transforms want = Transforms::none) {
  std::size_t const r = a.rows(), c = a.cols();
  bool const track = want == Transforms::both;
  IntMatrix u = track ? IntMatrix::identity(r) : IntMatrix();
  IntMatrix v = track ? IntMatrix::identity(c) : IntMatrix();

  auto row_op = [&](std::size_t dst, std::size_t src, BigInt const& k) {
    a.add_row(dst, src, k);
    if (track) u.add_row(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, BigInt const& k) {
    a.add_col(dst, src, k);
    if (track) v.add_col(dst, src, k);
  };
  auto swap_r = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    if (track) u.swap_rows(x, y);
  };
  auto swap_c = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    if (track) v.swap_cols(x, y);
  };

  std::size_t const n = std::min(r, c);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t bi = r, bj = c;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < c; ++j) {
        if (a(i, j) != 0 && (bi == r || abs_big(a(i, j)) < abs_big(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == r) break;
    swap_r(t, bi);
    swap_c(t, bj);

    while (true) {
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) != 0) row_op(i, t, BigInt(-(a(i, t) / a(t, t))));
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) != 0) col_op(j, t, BigInt(-(a(t, j) / a(t, t))));
      }
      // Remainders left in the pivot row/column become the new pivot.
      std::size_t si = t, sj = t;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a(i, t) != 0 && abs_big(a(i, t)) < abs_big(a(si, sj))) {
          si = i;
          sj = t;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a(t, j) != 0 && abs_big(a(t, j)) < abs_big(a(si, sj))) {
          si = t;
          sj = j;
        }
      }
      if (si != t || sj != t) {
        swap_r(t, si);
        swap_c(t, sj);
        continue;
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < r && clean; ++i) {
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c && clean; ++j) {
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility by folding an offending row into the pivot row.
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == r) break;
      row_op(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
      if (track) {
        for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
      }
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a(i, i);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

/// Row-style Hermite normal form of a matrix (rows are replaced by an echelon
/// basis of the row lattice, pivots positive, entries above pivots reduced
/// into [0, pivot)). Zero rows are dropped.
inline IntMatrix hermite_rows(IntMatrix a) {
  std::size_t const r = a.rows(), c = a.cols();
  std::size_t pr = 0;
  for (std::size_t j = 0; j < c && pr < r; ++j) {
    while (true) {
      std::size_t best = r;
      for (std::size_t i = pr; i < r; ++i) {
        if (a(i, j) != 0 && (best == r || abs_big(a(i, j)) < abs_big(a(best, j)))) best = i;
      }
      if (best == r) break;
      a.swap_rows(pr, best);
      bool done = true;
      for (std::size_t i = pr + 1; i < r; ++i) {
        if (a(i, j) != 0) {
          a.add_row(i, pr, BigInt(-(a(i, j) / a(pr, j))));
          if (a(i, j) != 0) done = false;
        }
      }
      if (done) break;
    }
    if (pr >= r || a(pr, j) == 0) continue;
    if (a(pr, j) < 0) {
      for (std::size_t k = 0; k < c; ++k) a(pr, k) = -a(pr, k);
    }
    for (std::size_t i = 0; i < pr; ++i) {
      BigInt q = (a(i, j) - mod_floor(a(i, j), a(pr, j))) / a(pr, j);
      a.add_row(i, pr, BigInt(-q));
    }
    ++pr;
  }
  IntMatrix out(pr, c);
  for (std::size_t i = 0; i < pr; ++i) {
    for (std::size_t j = 0; j < c; ++j) out(i, j) = a(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------

struct AbelianInvariants {
  int rank = 0;
  std::vector<BigInt> torsion;  // d1 | d2 | ... | dk, each >= 2

  /// Minimum number of generators of the group.
  int min_generators() const noexcept { return rank + static_cast<int>(torsion.size()); }

  BigInt torsion_order() const {
    BigInt o = 1;
    for (auto const& d : torsion) o *= d;
    return o;
  }

  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

inline std::string format_invariants(AbelianInvariants const& inv) {
  std::ostringstream os;
  os << "(rank " << inv.rank << ", [";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) os << (i ? "," : "") << inv.torsion[i];
  os << "])";
  return os.str();
}

inline AbelianInvariants invariants_from_diagonal(std::vector<BigInt> const& diagonal, std::size_t cols) {
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (auto const& d : diagonal) {
    if (d != 0) {
      ++nonzero;
      if (d != 1) inv.torsion.push_back(d);
    }
  }
  inv.rank = static_cast<int>(cols - nonzero);
  return inv;
}

/// Number of cyclic factors of order divisible by p, plus the free rank.
inline int p_rank(AbelianInvariants const& inv, BigInt const& p) {
  int k = inv.rank;
  for (auto const& d : inv.torsion) {
    if (d % p == 0) ++k;
  }
  return k;
}

/// Exponent-sum matrix: one row per relator, one column per generator.
inline IntMatrix relation_matrix(GroupPresentation const& p) {
  IntMatrix m(static_cast<std::size_t>(p.nrels()), static_cast<std::size_t>(p.ngens()));
  for (int i = 0; i < p.nrels(); ++i) {
    auto sums = exponent_sums(p.relators()[static_cast<std::size_t>(i)], p.ngens());
    for (int j = 0; j < p.ngens(); ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sums[static_cast<std::size_t>(j)];
  }
  return m;
}

inline AbelianInvariants abelian_invariants(GroupPresentation const& p) {
  auto m = relation_matrix(p);
  return invariants_from_diagonal(smith_normal_form(m).diagonal, m.cols());
}

/// The abelianisation with torsion killed: G -> Z^rank.
struct FreeAbelianisation {
  AbelianInvariants invariants;
  std::vector<std::vector<std::int64_t>> images;  // images[g] in Z^rank
};

/// Computes a basis of Hom(G, Z) (integer kernel of the relation matrix, put
/// in Hermite form so the coordinates are small and canonical) and records
/// each generator's image in the dual coordinates.
inline FreeAbelianisation free_abelianisation(GroupPresentation const& p) {
  auto m = relation_matrix(p);
  auto snf = smith_normal_form(m, Transforms::both);
  FreeAbelianisation out;
  out.invariants = invariants_from_diagonal(snf.diagonal, m.cols());
  std::size_t const n = m.cols();
  std::size_t const b = static_cast<std::size_t>(out.invariants.rank);
  // Columns of `right` past the nonzero diagonal span the kernel.
  IntMatrix kernel(b, n);
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t j = 0; j < n; ++j) kernel(k, j) = snf.right(j, n - b + k);
  }
  kernel = hermite_rows(kernel);
  out.images.assign(n, std::vector<std::int64_t>(b, 0));
  for (std::size_t k = 0; k < b; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      auto const& x = kernel(k, j);
      if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("abelianisation coordinates exceed 64 bits");
      }
      out.images[j][k] = static_cast<std::int64_t>(x);
    }
  }
  return out;
}

}  // namespace largeness
