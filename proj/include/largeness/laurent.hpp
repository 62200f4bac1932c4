#pragma once

// Laurent polynomials with integer (or Z/nZ) coefficients.
//
// LaurentPoly is sparse and multivariate; UniPoly is dense in one variable t
// and carries the evaluated matrices where almost all the arithmetic happens.

#include "largeness/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace largeness {

class DivisionNotExact : public std::runtime_error {
 public:
  DivisionNotExact() : std::runtime_error("polynomial division is not exact") {}
};

// ---------------------------------------------------------------------------
// Univariate

class UniPoly {
 public:
  UniPoly() = default;

  /// Coefficients of t^low, t^(low+1), ...; zero ends are trimmed.
  UniPoly(std::int64_t low, std::vector<BigInt> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(BigInt c) { return UniPoly(0, {std::move(c)}); }
  static UniPoly monomial(std::int64_t e, BigInt c = 1) { return UniPoly(e, {std::move(c)}); }

  /// 1 - t^k
  static UniPoly one_minus_power(std::int64_t k) {
    if (k == 0) return {};
    return UniPoly::constant(1) - UniPoly::monomial(k);
  }

  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t low() const noexcept { return low_; }
  std::int64_t high() const noexcept { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
  std::vector<BigInt> const& coefficients() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  BigInt coeff(std::int64_t e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend UniPoly operator+(UniPoly const& a, UniPoly const& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
    std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
    return UniPoly(lo, std::move(c));
  }
  friend UniPoly operator-(UniPoly const& a, UniPoly const& b) { return a + (-b); }

  friend UniPoly operator*(UniPoly const& a, UniPoly const& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UniPoly(a.low_ + b.low_, std::move(c));
  }

  UniPoly shifted(std::int64_t by) const {
    UniPoly r = *this;
    if (!r.is_zero()) r.low_ += by;
    return r;
  }

  friend bool operator==(UniPoly const& a, UniPoly const& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

 private:
  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = c_.size();
    while (c_[last - 1] == 0) --last;
    if (first > 0 || last < c_.size()) {
      c_ = std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(first),
                               c_.begin() + static_cast<std::ptrdiff_t>(last));
      low_ += static_cast<std::int64_t>(first);
    }
  }

  std::int64_t low_ = 0;
  std::vector<BigInt> c_;
};

/// Exact quotient a / b in Z[t, 1/t]; throws DivisionNotExact otherwise.
inline UniPoly exact_div(UniPoly const& a, UniPoly const& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.size() < b.size()) throw DivisionNotExact();
  std::vector<BigInt> r = a.coefficients();
  auto const& d = b.coefficients();
  std::size_t const qn = r.size() - d.size() + 1;
  std::vector<BigInt> q(qn);
  BigInt const& lead = d.back();
  for (std::size_t k = qn; k-- > 0;) {
    BigInt& top = r[k + d.size() - 1];
    if (top == 0) continue;
    BigInt rem;
    BigInt qk;
    boost::multiprecision::divide_qr(top, lead, qk, rem);
    if (rem != 0) throw DivisionNotExact();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] != 0) r[k + j] -= qk * d[j];
    }
    q[k] = std::move(qk);
  }
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (r[i] != 0) throw DivisionNotExact();
  }
  return UniPoly(a.low() - b.low(), std::move(q));
}

inline BigInt content(UniPoly const& f) {
  BigInt g = 0;
  for (auto const& c : f.coefficients()) {
    g = gcd_big(g, c);
    if (g == 1) break;
  }
  return g;
}

/// Difference between the largest and smallest exponent (0 for zero/monomials).
inline std::int64_t spread(UniPoly const& f) { return f.is_zero() ? 0 : f.high() - f.low(); }

/// Sum of the coefficients (value at t = 1).
inline BigInt value_at_one(UniPoly const& f) {
  BigInt s = 0;
  for (auto const& c : f.coefficients()) s += c;
  return s;
}

/// Folds exponents (after shifting the lowest to 0) modulo q >= 1: the image
/// in Z[t]/(t^q - 1) written with exponents 0..q-1.
inline UniPoly wrap(UniPoly const& f, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("wrap modulus must be positive");
  if (f.is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(std::min<std::int64_t>(q, static_cast<std::int64_t>(f.size()))));
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[static_cast<std::size_t>(static_cast<std::int64_t>(i) % q)] += f.coefficients()[i];
  }
  return UniPoly(0, std::move(c));
}

/// Representative up to units +-t^k: lowest exponent 0, leading
/// (lowest-degree) coefficient positive.
inline UniPoly unit_normalized(UniPoly const& f) {
  if (f.is_zero()) return f;
  UniPoly r = f.shifted(-f.low());
  if (r.coefficients().front() < 0) r = -r;
  return r;
}

inline UniPoly reduce_coefficients(UniPoly const& f, BigInt const& n) {
  if (n == 0) return f;
  std::vector<BigInt> c = f.coefficients();
  for (auto& x : c) x = mod_floor(x, n);
  return UniPoly(f.low(), std::move(c));
}

// ---------------------------------------------------------------------------
// Multivariate

using Exponents = std::vector<std::int64_t>;

class LaurentPoly {
 public:
  struct Term {
    Exponents exp;
    BigInt coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars, BigInt modulus = 0) : nvars_(nvars), modulus_(std::move(modulus)) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
    if (modulus_ < 0 || modulus_ == 1) throw std::invalid_argument("coefficient modulus must be 0 or >= 2");
  }

  static LaurentPoly constant(int nvars, BigInt c, BigInt modulus = 0) {
    LaurentPoly f(nvars, std::move(modulus));
    f.terms_.push_back({Exponents(static_cast<std::size_t>(nvars), 0), std::move(c)});
    f.canonicalize();
    return f;
  }

  static LaurentPoly monomial(Exponents e, BigInt c = 1, BigInt modulus = 0) {
    LaurentPoly f(static_cast<int>(e.size()), std::move(modulus));
    f.terms_.push_back({std::move(e), std::move(c)});
    f.canonicalize();
    return f;
  }

  static LaurentPoly from_terms(int nvars, std::vector<Term> terms, BigInt modulus = 0) {
    LaurentPoly f(nvars, std::move(modulus));
    for (auto const& t : terms) {
      if (static_cast<int>(t.exp.size()) != nvars) throw std::invalid_argument("exponent vector has wrong length");
    }
    f.terms_ = std::move(terms);
    f.canonicalize();
    return f;
  }

  /// Embeds a univariate polynomial as a one-variable LaurentPoly.
  static LaurentPoly from_uni(UniPoly const& u, BigInt modulus = 0) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u.coefficients()[i] != 0) terms.push_back({{u.low() + static_cast<std::int64_t>(i)}, u.coefficients()[i]});
    }
    return from_terms(1, std::move(terms), std::move(modulus));
  }

  int nvars() const noexcept { return nvars_; }
  BigInt const& modulus() const noexcept { return modulus_; }
  std::vector<Term> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    r.reduce();
    return r;
  }

  friend LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b) {
    check_compatible(a, b);
    LaurentPoly r(a.nvars_, a.modulus_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exp < b.terms_[j].exp)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].exp < a.terms_[i].exp) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        BigInt c = a.terms_[i].coeff + b.terms_[j].coeff;
        if (r.modulus_ != 0) c = mod_floor(c, r.modulus_);
        if (c != 0) r.terms_.push_back({a.terms_[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend LaurentPoly operator-(LaurentPoly const& a, LaurentPoly const& b) { return a + (-b); }

  friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    check_compatible(a, b);
    LaurentPoly r(a.nvars_, a.modulus_);
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto const& x : a.terms_) {
      for (auto const& y : b.terms_) {
        Exponents e(x.exp);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += y.exp[k];
        r.terms_.push_back({std::move(e), x.coeff * y.coeff});
      }
    }
    r.canonicalize();
    return r;
  }

  LaurentPoly scaled(BigInt const& k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= k;
    r.reduce();
    return r;
  }

  /// Multiplication by the monomial with exponent vector `by`.
  LaurentPoly shifted(Exponents const& by) const {
    if (static_cast<int>(by.size()) != nvars_) throw std::invalid_argument("shift has wrong length");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
      for (std::size_t k = 0; k < by.size(); ++k) t.exp[k] += by[k];
    }
    return r;
  }

  /// Per-variable minimum and maximum exponents (empty for zero).
  std::pair<Exponents, Exponents> exponent_box() const {
    if (is_zero()) return {};
    Exponents lo = terms_.front().exp, hi = lo;
    for (auto const& t : terms_) {
      for (std::size_t k = 0; k < t.exp.size(); ++k) {
        lo[k] = std::min(lo[k], t.exp[k]);
        hi[k] = std::max(hi[k], t.exp[k]);
      }
    }
    return {lo, hi};
  }

  friend bool operator==(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.nvars_ != b.nvars_ || a.modulus_ != b.modulus_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }

 private:
  static void check_compatible(LaurentPoly const& a, LaurentPoly const& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable counts differ");
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("coefficient domains differ");
  }

  void reduce() {
    if (modulus_ != 0) {
      for (auto& t : terms_) t.coeff = mod_floor(t.coeff, modulus_);
    }
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](Term const& t) { return t.coeff == 0; }),
                 terms_.end());
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](Term const& x, Term const& y) { return x.exp < y.exp; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exp == t.exp) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    terms_ = std::move(merged);
    reduce();
  }

  int nvars_ = 1;
  BigInt modulus_ = 0;
  std::vector<Term> terms_;
};

/// gcd of the coefficients (0 for the zero polynomial); integer coefficients only.
inline BigInt content(LaurentPoly const& f) {
  if (f.modulus() != 0) throw std::invalid_argument("content is defined for integer coefficients");
  BigInt g = 0;
  for (auto const& t : f.terms()) {
    g = gcd_big(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

/// Exact quotient f / g in the Laurent ring; throws DivisionNotExact.
inline LaurentPoly exact_div(LaurentPoly const& f, LaurentPoly const& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.nvars() != g.nvars() || f.modulus() != g.modulus()) throw std::invalid_argument("incompatible polynomials");
  LaurentPoly q(f.nvars(), f.modulus());
  if (f.is_zero()) return q;
  auto [flo, fhi] = f.exponent_box();
  auto [glo, ghi] = g.exponent_box();
  std::size_t const b = static_cast<std::size_t>(f.nvars());
  // A true quotient has exponents inside [flo - glo, fhi - ghi].
  for (std::size_t k = 0; k < b; ++k) {
    if (fhi[k] - flo[k] < ghi[k] - glo[k]) throw DivisionNotExact();
  }
  auto const& lead = g.terms().back();  // lex-largest term
  BigInt lead_inv = 0;
  if (f.modulus() != 0) {
    lead_inv = inverse_mod(lead.coeff, f.modulus());
    if (lead_inv == 0) throw DivisionNotExact();
  }
  LaurentPoly r = f;
  std::vector<LaurentPoly::Term> qterms;
  while (!r.is_zero()) {
    auto const& top = r.terms().back();
    Exponents e(b);
    for (std::size_t k = 0; k < b; ++k) {
      e[k] = top.exp[k] - lead.exp[k];
      if (e[k] < flo[k] - glo[k] || e[k] > fhi[k] - ghi[k]) throw DivisionNotExact();
    }
    BigInt c;
    if (f.modulus() == 0) {
      BigInt rem;
      boost::multiprecision::divide_qr(top.coeff, lead.coeff, c, rem);
      if (rem != 0) throw DivisionNotExact();
    } else {
      c = mod_floor(top.coeff * lead_inv, f.modulus());
    }
    LaurentPoly m = LaurentPoly::monomial(e, c, f.modulus());
    r = r - m * g;
    qterms.push_back({std::move(e), std::move(c)});
  }
  return LaurentPoly::from_terms(f.nvars(), std::move(qterms), f.modulus());
}

/// Substitutes t^(chi . v) for each monomial x^v.
inline UniPoly evaluate_to_uni(LaurentPoly const& f, std::vector<std::int64_t> const& chi) {
  if (static_cast<int>(chi.size()) != f.nvars()) throw std::invalid_argument("chi has the wrong length");
  if (f.is_zero()) return {};
  std::vector<std::pair<std::int64_t, BigInt const*>> image;
  image.reserve(f.terms().size());
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = std::numeric_limits<std::int64_t>::min();
  for (auto const& t : f.terms()) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < chi.size(); ++k) e += chi[k] * t.exp[k];
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    image.emplace_back(e, &t.coeff);
  }
  std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
  for (auto const& [e, coeff] : image) c[static_cast<std::size_t>(e - lo)] += *coeff;
  UniPoly u(lo, std::move(c));
  return reduce_coefficients(u, f.modulus());
}

inline LaurentPoly evaluate_chi(LaurentPoly const& f, std::vector<std::int64_t> const& chi) {
  return LaurentPoly::from_uni(evaluate_to_uni(f, chi), f.modulus());
}

/// Shifts variable `var` so its minimum exponent is 0, then folds its
/// exponents modulo q.
inline LaurentPoly wrap(LaurentPoly const& f, int var, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("wrap modulus must be positive");
  if (var < 0 || var >= f.nvars()) throw std::out_of_range("variable index out of range");
  if (f.is_zero()) return f;
  auto [lo, hi] = f.exponent_box();
  std::vector<LaurentPoly::Term> terms;
  for (auto const& t : f.terms()) {
    auto e = t.exp;
    e[static_cast<std::size_t>(var)] = (e[static_cast<std::size_t>(var)] - lo[static_cast<std::size_t>(var)]) % q;
    terms.push_back({std::move(e), t.coeff});
  }
  return LaurentPoly::from_terms(f.nvars(), std::move(terms), f.modulus());
}

/// Reduces every exponent vector componentwise modulo p (into [0, p)).
inline LaurentPoly box(LaurentPoly const& f, std::int64_t p) {
  if (p < 2) throw std::invalid_argument("box needs p >= 2");
  std::vector<LaurentPoly::Term> terms;
  for (auto const& t : f.terms()) {
    auto e = t.exp;
    for (auto& x : e) x = mod_floor(x, p);
    terms.push_back({std::move(e), t.coeff});
  }
  return LaurentPoly::from_terms(f.nvars(), std::move(terms), f.modulus());
}

/// Image of a boxed polynomial under the class chi mod p, as an element of
/// Z[t]/(t^p - 1) with exponents 0..p-1.
inline UniPoly evaluate_boxed(LaurentPoly const& boxed, std::vector<std::int64_t> const& chi, std::int64_t p) {
  if (static_cast<int>(chi.size()) != boxed.nvars()) throw std::invalid_argument("chi has the wrong length");
  std::vector<BigInt> c(static_cast<std::size_t>(p));
  for (auto const& t : boxed.terms()) {
    std::int64_t e = 0;
    for (std::size_t k = 0; k < chi.size(); ++k) e = mod_floor(e + mod_floor(chi[k], p) * mod_floor(t.exp[k], p), p);
    c[static_cast<std::size_t>(e)] += t.coeff;
  }
  return reduce_coefficients(UniPoly(0, std::move(c)), boxed.modulus());
}

/// Representative up to units: every variable's minimum exponent shifted to
/// 0, and (over Z) the lex-first coefficient made positive.
inline LaurentPoly unit_normalized(LaurentPoly const& f) {
  if (f.is_zero()) return f;
  auto [lo, hi] = f.exponent_box();
  for (auto& x : lo) x = -x;
  LaurentPoly r = f.shifted(lo);
  if (r.modulus() == 0 && r.terms().front().coeff < 0) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// Text form: "3*t1^2*t2^-1 - t2 + 5" (variables t for one variable, t1..tb
// otherwise), terms in canonical (lex ascending exponent) order.

inline std::string variable_name(int nvars, int k) { return nvars == 1 ? "t" : "t" + std::to_string(k + 1); }

inline std::string format_poly(LaurentPoly const& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& t : f.terms()) {
    BigInt c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < t.exp.size(); ++k) {
      if (t.exp[k] == 0) continue;
      std::string v = variable_name(f.nvars(), static_cast<int>(k));
      if (t.exp[k] != 1) v += "^" + std::to_string(t.exp[k]);
      factors.push_back(std::move(v));
    }
    if (c != 1 || factors.empty()) factors.insert(factors.begin(), c.str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

inline std::string format_poly(UniPoly const& f) { return format_poly(LaurentPoly::from_uni(f)); }

inline LaurentPoly parse_poly(std::string_view text, int nvars, BigInt modulus = 0) {
  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](std::string const& what) {
    throw std::invalid_argument("bad polynomial at offset " + std::to_string(i) + ": " + what);
  };
  auto read_int = [&]() -> BigInt {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string s(text.substr(start, i - start));
    if (s.empty() || s == "-" || s == "+") fail("expected an integer");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  };
  skip();
  if (text.substr(i) == "0") return LaurentPoly(nvars, modulus);
  int sign = 1;
  if (i < text.size() && text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    skip();
    LaurentPoly::Term term{Exponents(static_cast<std::size_t>(nvars), 0), BigInt(sign)};
    bool any = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        term.coeff *= read_int();
      } else if (i < text.size() && text[i] == 't') {
        ++i;
        int k = 0;
        if (nvars > 1) {
          std::size_t start = i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          if (start == i) fail("expected a variable number");
          k = std::stoi(std::string(text.substr(start, i - start))) - 1;
          if (k < 0 || k >= nvars) fail("variable out of range");
        }
        std::int64_t e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = static_cast<std::int64_t>(read_int());
        }
        term.exp[static_cast<std::size_t>(k)] += e;
      } else {
        fail("expected a coefficient or variable");
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    terms.push_back(std::move(term));
    skip();
    if (i == text.size()) break;
    if (text[i] == '+') {
      sign = 1;
    } else if (text[i] == '-') {
      sign = -1;
    } else {
      fail("expected '+' or '-'");
    }
    ++i;
  }
  return LaurentPoly::from_terms(nvars, std::move(terms), std::move(modulus));
}

}  // namespace largeness
