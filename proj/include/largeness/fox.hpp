#pragma once

// Fox derivatives, the Alexander matrix over Z[ab(G)/torsion], and its
// maximal minors.

#include "largeness/determinant.hpp"
#include "largeness/smith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace largeness {

/// Formal integer combination of free-group words.
using GroupRingElement = std::map<Word, BigInt>;

/// d r / d x_gen, expanded over the free group ring. Each syllable g^k
/// contributes prefix * (1 + g + ... + g^(k-1)) or -prefix * (g^-1 + ... + g^k).
inline GroupRingElement fox_derivative(Word const& r, int gen) {
  GroupRingElement out;
  Word prefix;
  for (auto const& s : r.syllables()) {
    if (s.gen == gen) {
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < s.exp; ++i) out[prefix * Word::power(gen, i)] += 1;
      } else {
        for (std::int64_t i = 1; i <= -s.exp; ++i) out[prefix * Word::power(gen, -i)] -= 1;
      }
    }
    prefix.push(s.gen, s.exp);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

class NoFreeAbelianisation : public std::domain_error {
 public:
  NoFreeAbelianisation() : std::domain_error("abelianisation is finite (first Betti number 0)") {}
};

struct AlexanderMatrix {
  PolyMatrix<LaurentPoly> entries;           // rows: relators, columns: generators
  std::vector<std::vector<std::int64_t>> images;  // images[j] = exponent vector of alpha(x_j)
  AbelianInvariants invariants;

  int rows() const noexcept { return static_cast<int>(entries.size()); }
  int cols() const noexcept { return static_cast<int>(images.size()); }
  int rank() const noexcept { return invariants.rank; }
};

/// alpha(d r / d x_j) computed directly on syllables (geometric sums in the
/// abelian image, no free-group expansion).
inline LaurentPoly abelianised_fox(Word const& r, int gen, std::vector<std::vector<std::int64_t>> const& images) {
  int const b = images.empty() ? 0 : static_cast<int>(images[0].size());
  std::vector<LaurentPoly::Term> terms;
  Exponents prefix(static_cast<std::size_t>(b), 0);
  for (auto const& s : r.syllables()) {
    auto const& v = images[static_cast<std::size_t>(s.gen)];
    if (s.gen == gen) {
      if (s.exp > 0) {
        for (std::int64_t i = 0; i < s.exp; ++i) {
          Exponents e(prefix);
          for (std::size_t k = 0; k < e.size(); ++k) e[k] += i * v[k];
          terms.push_back({std::move(e), BigInt(1)});
        }
      } else {
        for (std::int64_t i = 1; i <= -s.exp; ++i) {
          Exponents e(prefix);
          for (std::size_t k = 0; k < e.size(); ++k) e[k] -= i * v[k];
          terms.push_back({std::move(e), BigInt(-1)});
        }
      }
    }
    for (std::size_t k = 0; k < prefix.size(); ++k) prefix[k] += s.exp * v[k];
  }
  return LaurentPoly::from_terms(b, std::move(terms));
}

inline AlexanderMatrix alexander_matrix(GroupPresentation const& p) {
  auto fa = free_abelianisation(p);
  if (fa.invariants.rank == 0) throw NoFreeAbelianisation();
  AlexanderMatrix a;
  a.images = fa.images;
  a.invariants = fa.invariants;
  for (auto const& r : p.relators()) {
    std::vector<LaurentPoly> row;
    for (int j = 0; j < p.ngens(); ++j) row.push_back(abelianised_fox(r, j, a.images));
    a.entries.push_back(std::move(row));
  }
  return a;
}

/// alpha(x_j) - 1 as a polynomial.
inline LaurentPoly generator_minus_one(AlexanderMatrix const& a, int j) {
  int const b = a.rank();
  return LaurentPoly::monomial(a.images[static_cast<std::size_t>(j)]) - LaurentPoly::constant(b, 1);
}

struct MinorSpec {
  int deleted_column = 0;
  std::vector<int> deleted_rows;  // size rows - cols + 1, increasing

  friend bool operator==(MinorSpec const&, MinorSpec const&) = default;
};

/// Number of rows to delete for a maximal minor, or -1 when rows < cols - 1
/// (no minors: the first elementary ideal is zero).
inline int rows_to_delete(int rows, int cols) { return rows >= cols - 1 ? rows - cols + 1 : -1; }

/// Calls f(spec) for every row subset of the right size in lexicographic
/// order until f returns false.
template <class F>
void for_each_minor_spec(int rows, int cols, int column, F&& f) {
  int const k = rows_to_delete(rows, cols);
  if (k < 0) return;
  std::vector<int> sel(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sel[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!f(MinorSpec{column, sel})) return;
    int i = k - 1;
    while (i >= 0 && sel[static_cast<std::size_t>(i)] == rows - k + i) --i;
    if (i < 0) return;
    ++sel[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class T>
PolyMatrix<T> submatrix(PolyMatrix<T> const& m, MinorSpec const& spec) {
  PolyMatrix<T> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (std::find(spec.deleted_rows.begin(), spec.deleted_rows.end(), static_cast<int>(i)) != spec.deleted_rows.end()) {
      continue;
    }
    std::vector<T> row;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (static_cast<int>(j) != spec.deleted_column) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline LaurentPoly minor(AlexanderMatrix const& a, MinorSpec const& spec) {
  if (static_cast<int>(spec.deleted_rows.size()) != rows_to_delete(a.rows(), a.cols())) {
    throw std::invalid_argument("minor spec deletes the wrong number of rows");
  }
  auto sub = submatrix(a.entries, spec);
  if (sub.empty()) return LaurentPoly::constant(a.rank(), 1);
  return determinant(sub);
}

/// The matrix with every entry sent through chi: x^v -> t^(chi . v).
inline PolyMatrix<UniPoly> evaluate_matrix(AlexanderMatrix const& a, std::vector<std::int64_t> const& chi) {
  PolyMatrix<UniPoly> out;
  for (auto const& row : a.entries) {
    std::vector<UniPoly> r;
    for (auto const& e : row) r.push_back(evaluate_to_uni(e, chi));
    out.push_back(std::move(r));
  }
  return out;
}

inline UniPoly minor(PolyMatrix<UniPoly> const& evaluated, MinorSpec const& spec) {
  auto sub = submatrix(evaluated, spec);
  if (sub.empty()) return UniPoly::constant(1);
  return determinant(sub);
}

inline std::int64_t chi_image(AlexanderMatrix const& a, std::vector<std::int64_t> const& chi, int j) {
  std::int64_t s = 0;
  auto const& v = a.images[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < v.size(); ++k) s += chi[k] * v[k];
  return s;
}

/// First column whose generator has non-zero image under chi, or -1.
inline int first_column_with_image(AlexanderMatrix const& a, std::vector<std::int64_t> const& chi) {
  for (int j = 0; j < a.cols(); ++j) {
    if (chi_image(a, chi, j) != 0) return j;
  }
  return -1;
}

/// (1 - t^k) / (1 - t), up to a unit when k < 0.
inline UniPoly geometric_factor(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("geometric factor of exponent 0");
  return exact_div(UniPoly::one_minus_power(k), UniPoly::one_minus_power(1));
}

/// The minor with the factor coming from the deleted column removed: divided
/// by 1 - alpha(x_j) when rank >= 2, by (1 - t^a)/(1 - t) when rank is 1.
inline LaurentPoly extract_reduced_minor(AlexanderMatrix const& a, MinorSpec const& spec) {
  auto const& v = a.images[static_cast<std::size_t>(spec.deleted_column)];
  bool trivial = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
  if (trivial) throw std::invalid_argument("deleted column has trivial abelian image");
  LaurentPoly m = minor(a, spec);
  if (a.rank() >= 2) return exact_div(m, generator_minus_one(a, spec.deleted_column).scaled(-1));
  return exact_div(m, LaurentPoly::from_uni(geometric_factor(v[0])));
}

}  // namespace largeness
