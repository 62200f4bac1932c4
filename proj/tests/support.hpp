#pragma once

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance runner.

#include "largeness/determinant.hpp"
#include "largeness/smith.hpp"

#include <random>

namespace largeness::testing {

inline Word random_word(std::mt19937& rng, int ngens, int len) {
  std::uniform_int_distribution<int> g(0, ngens - 1), s(0, 1);
  std::vector<Letter> ls;
  for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
  return free_reduce(Word::from_letters(ls));
}

inline LaurentPoly random_poly(std::mt19937& rng, int nvars, int nterms, int erange, int crange) {
  std::uniform_int_distribution<int> e(-erange, erange), c(-crange, crange);
  std::vector<LaurentPoly::Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Exponents x(static_cast<std::size_t>(nvars));
    for (auto& v : x) v = e(rng);
    terms.push_back({x, BigInt(c(rng))});
  }
  return LaurentPoly::from_terms(nvars, terms);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

/// Determinant by expansion along the first row.
template <class T>
T cofactor_det(std::vector<std::vector<T>> const& m, T const& one) {
  std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T d = one - one;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(row);
    }
    T term = m[0][j] * cofactor_det(sub, one);
    if (j % 2 == 0) {
      d = d + term;
    } else {
      d = d - term;
    }
  }
  return d;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Smith diagonal from determinantal divisors: d_i = g_i / g_(i-1), with g_i
/// the gcd of all i x i minors.
inline std::vector<BigInt> minor_gcd_invariants(IntMatrix const& m) {
  std::size_t r = m.rows(), c = m.cols();
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    BigInt g = 0;
    for (auto const& ri : rs) {
      for (auto const& ci : cs) {
        std::vector<std::vector<BigInt>> sub;
        for (auto i : ri) {
          std::vector<BigInt> row;
          for (auto j : ci) row.push_back(m(i, j));
          sub.push_back(row);
        }
        g = gcd_big(g, cofactor_det(sub, BigInt(1)));
      }
    }
    if (g == 0) {
      for (; k <= std::min(r, c); ++k) out.push_back(0);
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline bool vanishes_mod(UniPoly const& f, BigInt const& n) { return n == 0 ? f.is_zero() : content(f) % n == 0; }

}  // namespace largeness::testing
