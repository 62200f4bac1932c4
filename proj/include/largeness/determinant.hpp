#pragma once

// Fraction-free (Bareiss) determinants over Z[t^+-1] and over the
// multivariate Laurent ring. Both rings are integral domains, so every
// Bareiss division is exact.

#include "largeness/laurent.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace largeness {

template <class T>
using PolyMatrix = std::vector<std::vector<T>>;

namespace detail {

inline bool poly_is_zero(UniPoly const& f) { return f.is_zero(); }
inline bool poly_is_zero(LaurentPoly const& f) { return f.is_zero(); }
inline std::size_t poly_weight(UniPoly const& f) { return f.size(); }
inline std::size_t poly_weight(LaurentPoly const& f) { return f.terms().size(); }

template <class T>
T bareiss(PolyMatrix<T> a, T one) {
  std::size_t const n = a.size();
  for (auto const& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Lightest non-zero pivot in column k keeps intermediate sizes down.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (poly_is_zero(a[i][k])) continue;
      if (piv == n || poly_weight(a[i][k]) < poly_weight(a[piv][k])) piv = i;
    }
    if (piv == n) return T(one) - one;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_div(num, prev);
      }
    }
    prev = a[k][k];
  }
  T d = a[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace detail

inline UniPoly determinant(PolyMatrix<UniPoly> const& m) {
  return detail::bareiss(m, UniPoly::constant(1));
}

inline LaurentPoly determinant(PolyMatrix<LaurentPoly> const& m) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix: variable count unknown");
  LaurentPoly const& any = m[0][0];
  if (any.modulus() != 0 && !is_prime(any.modulus())) {
    throw std::invalid_argument("determinant needs integer or prime-field coefficients");
  }
  return detail::bareiss(m, LaurentPoly::constant(any.nvars(), 1, any.modulus()));
}

}  // namespace largeness
