#pragma once

// Search for a surjection chi onto Z under which every maximal minor of the
// Alexander matrix vanishes, over Z or modulo a prime. One routine per range
// of the first Betti number b, plus a cheap rank test on cyclic covers.

#include "largeness/fox.hpp"
#include "largeness/rewrite.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace largeness {

using ChiVector = std::vector<std::int64_t>;

struct MinorEvidence {
  MinorSpec spec;
  BigInt content;  // 0 when the evaluated minor is identically zero
};

enum class Outcome { found, not_found, inconclusive };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::found: return "found";
    case Outcome::not_found: return "not-found";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

struct VanishResult {
  Outcome outcome = Outcome::not_found;
  ChiVector chi;                  // set when found
  std::vector<BigInt> moduli;     // 0 and/or primes, 0 first; set when found
  std::vector<MinorEvidence> evidence;
  std::string reason;

  BigInt modulus() const { return moduli.empty() ? BigInt(-1) : moduli.front(); }
};

struct VanishBudget {
  std::size_t max_minors = 20'000;
  std::size_t max_candidates = 4'000;      // verify_chi calls after the cheap filters
  std::size_t max_scanned = 2'000'000;     // chi vectors passed through the boxing filter
  std::int64_t component_bound = 64;
  std::vector<std::int64_t> box_primes{2, 3, 5, 7};
  std::size_t max_classes = 3'000;         // projective classes per boxing prime
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool expired() const { return deadline && std::chrono::steady_clock::now() > *deadline; }
};

struct ChiCheck {
  std::vector<BigInt> moduli;  // {0}, or the primes dividing every minor's content
  std::vector<MinorEvidence> evidence;
  int column = -1;
};

/// Evaluates the matrix at chi, deletes the first column with non-zero image
/// and takes the content gcd over all row-subset minors. Stops as soon as the
/// gcd reaches 1.
inline ChiCheck verify_chi(AlexanderMatrix const& b, ChiVector const& chi) {
  if (static_cast<int>(chi.size()) != b.rank()) throw std::invalid_argument("chi has the wrong length");
  ChiCheck out;
  out.column = first_column_with_image(b, chi);
  if (out.column < 0) throw std::invalid_argument("chi kills every generator");
  if (rows_to_delete(b.rows(), b.cols()) < 0) {
    out.moduli = {0};
    return out;
  }
  auto ev = evaluate_matrix(b, chi);
  BigInt g = 0;
  for_each_minor_spec(b.rows(), b.cols(), out.column, [&](MinorSpec const& spec) {
    auto m = minor(ev, spec);
    BigInt c = content(m);
    out.evidence.push_back({spec, c});
    g = gcd_big(g, c);
    return g != 1;
  });
  if (g == 0) {
    out.moduli = {0};
  } else if (g != 1) {
    out.moduli = prime_divisors(g);
  }
  return out;
}

namespace detail {

inline VanishResult found(ChiVector chi, ChiCheck check, std::string reason = {}) {
  VanishResult r;
  r.outcome = Outcome::found;
  r.chi = std::move(chi);
  r.moduli = std::move(check.moduli);
  r.evidence = std::move(check.evidence);
  r.reason = std::move(reason);
  return r;
}

inline VanishResult not_found(std::string reason) {
  VanishResult r;
  r.outcome = Outcome::not_found;
  r.reason = std::move(reason);
  return r;
}

inline VanishResult inconclusive(std::string reason) {
  VanishResult r;
  r.outcome = Outcome::inconclusive;
  r.reason = std::move(reason);
  return r;
}

inline ChiVector unit_vector(int b, int k) {
  ChiVector e(static_cast<std::size_t>(b), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

inline std::string format_chi(ChiVector const& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? "," : "") + std::to_string(chi[i]);
  return s + ")";
}

inline BigInt content_or_zero(UniPoly const& f) { return f.is_zero() ? BigInt(0) : content(f); }

}  // namespace detail

/// b = 1: chi is the unique surjection. Only primes dividing the torsion
/// order can divide every minor, since the product of the minors' values at
/// t = 1 is governed by it.
inline VanishResult betti1_test(AlexanderMatrix const& b, VanishBudget const& budget = {}) {
  if (b.rank() != 1) throw std::invalid_argument("betti1_test needs first Betti number 1");
  ChiVector chi{1};
  if (rows_to_delete(b.rows(), b.cols()) < 0) return detail::found(chi, verify_chi(b, chi), "fewer relators than generators minus one");
  if (b.invariants.torsion.empty()) return detail::not_found("abelianisation is exactly Z");
  BigInt torsion = b.invariants.torsion_order();
  int column = first_column_with_image(b, chi);
  auto ev = evaluate_matrix(b, chi);
  BigInt g = 0;
  std::vector<MinorEvidence> evidence;
  bool over_budget = false;
  for_each_minor_spec(b.rows(), b.cols(), column, [&](MinorSpec const& spec) {
    if (evidence.size() >= budget.max_minors || budget.expired()) {
      over_budget = true;
      return false;
    }
    BigInt c = detail::content_or_zero(minor(ev, spec));
    evidence.push_back({spec, c});
    g = gcd_big(g, c);
    if (g != 0) g = restrict_to_primes_of(g, torsion);
    return g != 1;
  });
  if (g == 1) {
    auto r = detail::not_found("minor contents share no prime with the torsion order");
    r.evidence = std::move(evidence);
    return r;
  }
  if (over_budget) return detail::inconclusive("minor budget exhausted");
  ChiCheck check{g == 0 ? std::vector<BigInt>{0} : prime_divisors(g), std::move(evidence), column};
  return detail::found(chi, std::move(check));
}

/// Candidate values of |chi[axis]| for b = 2, read off from wrapping the
/// restriction P(t) of the reduced minor to the other coordinate axis: if
/// chi vanishes mod mu and k divides chi[axis], then P folded mod t^k - 1 is
/// zero mod mu.
struct AxisCandidates {
  std::vector<std::int64_t> values;      // every k passing some track
  std::vector<std::int64_t> admissible;  // k whose divisors all pass the same track
  std::vector<BigInt> repaired_primes;   // primes handled with a second minor
  bool complete = true;
  std::string note;
};

inline AxisCandidates axis_candidates(AlexanderMatrix const& b, int axis, VanishBudget const& budget = {}) {
  if (b.rank() != 2 || (axis != 0 && axis != 1)) throw std::invalid_argument("axis_candidates needs rank 2");
  AxisCandidates out;
  ChiVector e = detail::unit_vector(2, 1 - axis);
  int column = first_column_with_image(b, e);
  std::int64_t a = chi_image(b, e, column);
  auto ev = evaluate_matrix(b, e);

  std::vector<UniPoly> reduced;
  for_each_minor_spec(b.rows(), b.cols(), column, [&](MinorSpec const& spec) {
    if (reduced.size() >= budget.max_minors || budget.expired()) {
      out.complete = false;
      out.note = "minor budget exhausted";
      return false;
    }
    reduced.push_back(exact_div(minor(ev, spec), UniPoly::one_minus_power(a)));
    return true;
  });
  auto first = std::find_if(reduced.begin(), reduced.end(), [](UniPoly const& p) { return !p.is_zero(); });
  if (first == reduced.end()) {
    out.complete = false;
    out.note = "restricted minors all vanish";
    return out;
  }

  std::set<std::int64_t> values, admissible;
  auto run_track = [&](UniPoly const& p, auto&& passes) {
    std::set<std::int64_t> pass;
    for (std::int64_t k = 1; k <= spread(p); ++k) {
      if (passes(detail::content_or_zero(wrap(p, k)))) pass.insert(k);
    }
    for (auto k : pass) {
      values.insert(k);
      bool closed = true;
      for (std::int64_t d = 1; d < k && closed; ++d) {
        if (k % d == 0 && !pass.count(d)) closed = false;
      }
      if (closed) admissible.insert(k);
    }
  };

  BigInt c0 = content(*first);
  run_track(*first, [&](BigInt const& c) { return c == 0 || c / restrict_to_primes_of(c, c0) != 1; });
  for (auto const& r : prime_divisors(c0)) {
    auto other = std::find_if(reduced.begin(), reduced.end(),
                              [&](UniPoly const& p) { return !p.is_zero() && content(p) % r != 0; });
    if (other == reduced.end()) {
      out.complete = false;
      out.note = "no minor with content prime to " + to_string(r);
      continue;
    }
    out.repaired_primes.push_back(r);
    run_track(*other, [&](BigInt const& c) { return c % r == 0; });
  }
  out.values.assign(values.begin(), values.end());
  out.admissible.assign(admissible.begin(), admissible.end());
  return out;
}

/// Primitive pairs (l, m) with l > 0 drawn from the two axis candidate lists,
/// both signs of m, ordered by max(|l|, |m|), then l, then m.
inline std::vector<ChiVector> betti2_pairs(AxisCandidates const& ls, AxisCandidates const& ms) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> keyed;
  for (auto l : ls.admissible) {
    for (auto m0 : ms.admissible) {
      if (gcd_i64(l, m0) != 1) continue;
      for (auto m : {-m0, m0}) keyed.emplace_back(std::max(l, m0), l, m);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<ChiVector> out;
  for (auto const& [w, l, m] : keyed) out.push_back({l, m});
  return out;
}

inline VanishResult betti2_test(AlexanderMatrix const& b, VanishBudget const& budget = {}) {
  if (b.rank() != 2) throw std::invalid_argument("betti2_test needs first Betti number 2");
  for (int k = 0; k < 2; ++k) {
    auto e = detail::unit_vector(2, k);
    auto check = verify_chi(b, e);
    if (!check.moduli.empty()) return detail::found(e, std::move(check), "coordinate homomorphism");
  }
  auto ls = axis_candidates(b, 0, budget);
  auto ms = axis_candidates(b, 1, budget);
  auto pairs = betti2_pairs(ls, ms);
  std::size_t tried = 0;
  for (auto const& chi : pairs) {
    if (tried >= budget.max_candidates || budget.expired()) return detail::inconclusive("candidate budget exhausted");
    ++tried;
    auto check = verify_chi(b, chi);
    if (!check.moduli.empty()) return detail::found(chi, std::move(check), "wrap candidate");
  }
  if (!ls.complete || !ms.complete) {
    return detail::inconclusive("candidate generation incomplete: " + (ls.complete ? ms.note : ls.note));
  }
  return detail::not_found("coordinate homomorphisms rejected; " + std::to_string(pairs.size()) +
                           " wrap candidates rejected");
}

/// Projective classes of non-zero vectors mod p, each represented by the
/// vector whose first non-zero entry is 1.
inline std::vector<ChiVector> projective_classes(int b, std::int64_t p) {
  std::vector<ChiVector> out;
  for (int lead = 0; lead < b; ++lead) {
    std::size_t free_count = static_cast<std::size_t>(b - lead - 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < free_count; ++i) total *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < total; ++code) {
      ChiVector v(static_cast<std::size_t>(b), 0);
      v[static_cast<std::size_t>(lead)] = 1;
      std::size_t c = code;
      for (int i = b - 1; i > lead; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline std::size_t projective_class_count(int b, std::int64_t p) {
  std::size_t total = 0, pw = 1;
  for (int i = 0; i < b; ++i) {
    total += pw;
    if (pw > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(p)) return std::numeric_limits<std::size_t>::max();
    pw *= static_cast<std::size_t>(p);
  }
  return total;
}

/// Normalized representative of chi mod p, or nullopt when chi = 0 mod p.
inline std::optional<ChiVector> projective_class(ChiVector const& chi, std::int64_t p) {
  ChiVector v(chi.size());
  std::int64_t scale = 0;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    v[i] = mod_floor(chi[i], p);
    if (scale == 0 && v[i] != 0) {
      scale = static_cast<std::int64_t>(inverse_mod(BigInt(v[i]), BigInt(p)));
    }
  }
  if (scale == 0) return std::nullopt;
  for (auto& x : v) x = mod_floor(x * scale, p);
  return v;
}

/// Content of the reduced minor at a class mod p, folded mod t^p - 1:
/// gcd over all minors, 0 meaning every folded minor is zero.
inline BigInt boxed_class_content(AlexanderMatrix const& b, ChiVector const& lift, std::int64_t p) {
  int column = first_column_with_image(b, lift);
  std::int64_t a = chi_image(b, lift, column);
  auto ev = evaluate_matrix(b, lift);
  BigInt g = 0;
  for_each_minor_spec(b.rows(), b.cols(), column, [&](MinorSpec const& spec) {
    auto reduced = exact_div(minor(ev, spec), UniPoly::one_minus_power(a));
    std::vector<BigInt> folded(static_cast<std::size_t>(p));
    for (std::int64_t e = reduced.low(); !reduced.is_zero() && e <= reduced.high(); ++e) {
      folded[static_cast<std::size_t>(mod_floor(e, p))] += reduced.coeff(e);
    }
    g = gcd_big(g, detail::content_or_zero(UniPoly(0, std::move(folded))));
    return g != 1;
  });
  return g;
}

/// Calls f(chi) for primitive vectors in increasing sup-norm shells, first
/// non-zero entry positive, until f returns false or the bound is passed.
template <class F>
void for_each_primitive_chi(int b, std::int64_t bound, F&& f) {
  for (std::int64_t s = 1; s <= bound; ++s) {
    ChiVector v(static_cast<std::size_t>(b), -s);
    while (true) {
      bool on_shell = false, positive_lead = false, lead_seen = false;
      std::int64_t g = 0;
      for (auto x : v) {
        if (std::llabs(x) == s) on_shell = true;
        if (!lead_seen && x != 0) {
          lead_seen = true;
          positive_lead = x > 0;
        }
        g = gcd_i64(g, x);
      }
      if (on_shell && positive_lead && g == 1 && !f(v)) return;
      std::size_t i = v.size();
      while (i > 0 && v[i - 1] == s) v[--i] = -s;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
}

inline VanishResult bettihigh_test(AlexanderMatrix const& b, VanishBudget const& budget = {}) {
  if (b.rank() < 3) throw std::invalid_argument("bettihigh_test needs first Betti number at least 3");
  int const rank = b.rank();
  struct Table {
    std::int64_t p;
    std::unordered_map<std::string, BigInt> contents;
  };
  auto key = [](ChiVector const& v) {
    std::string k;
    for (auto x : v) k += std::to_string(x) + ",";
    return k;
  };
  std::vector<Table> tables;
  std::string skipped;
  for (auto p : budget.box_primes) {
    if (projective_class_count(rank, p) > budget.max_classes) {
      skipped += " " + std::to_string(p);
      continue;
    }
    Table t{p, {}};
    std::size_t survivors = 0;
    for (auto const& cls : projective_classes(rank, p)) {
      if (budget.expired()) return detail::inconclusive("time budget exhausted while boxing");
      BigInt c = boxed_class_content(b, cls, p);
      survivors += c != 1;
      t.contents.emplace(key(cls), c);
    }
    if (survivors == 0) return detail::not_found("no class survives boxing mod " + std::to_string(p));
    tables.push_back(std::move(t));
  }

  std::size_t scanned = 0, verified = 0;
  std::optional<VanishResult> result;
  std::string stop;
  for_each_primitive_chi(rank, budget.component_bound, [&](ChiVector const& chi) {
    if (++scanned > budget.max_scanned) {
      stop = "scan budget exhausted";
      return false;
    }
    if ((scanned & 1023) == 0 && budget.expired()) {
      stop = "time budget exhausted";
      return false;
    }
    BigInt g = 0;
    for (auto const& t : tables) {
      g = gcd_big(g, t.contents.at(key(*projective_class(chi, t.p))));
      if (g == 1) return true;
    }
    if (++verified > budget.max_candidates) {
      stop = "candidate budget exhausted";
      return false;
    }
    auto check = verify_chi(b, chi);
    if (!check.moduli.empty()) {
      result = detail::found(chi, std::move(check), "boxing candidate");
      return false;
    }
    return true;
  });
  if (result) return *result;
  if (stop.empty()) stop = "component bound " + std::to_string(budget.component_bound) + " reached";
  if (!skipped.empty()) stop += "; boxing skipped for p =" + skipped;
  return detail::inconclusive(stop);
}

/// Dispatches on the first Betti number. With fewer relators than
/// generators minus one there are no maximal minors and every chi works.
inline VanishResult find_vanishing(AlexanderMatrix const& b, VanishBudget const& budget = {}) {
  if (rows_to_delete(b.rows(), b.cols()) < 0) {
    auto chi = detail::unit_vector(b.rank(), 0);
    return detail::found(chi, verify_chi(b, chi), "fewer relators than generators minus one");
  }
  if (b.rank() == 1) return betti1_test(b, budget);
  if (b.rank() == 2) return betti2_test(b, budget);
  return bettihigh_test(b, budget);
}

/// Moduli that the cyclic-cover rank test leaves possible: 0 and a set of
/// primes (nullopt = every prime).
struct SurvivingModuli {
  bool zero = true;
  std::optional<std::vector<BigInt>> primes;
  std::vector<std::string> notes;

  bool empty() const { return !zero && primes && primes->empty(); }
  bool allows(BigInt const& m) const {
    if (m == 0) return zero;
    return !primes || std::find(primes->begin(), primes->end(), m) != primes->end();
  }
};

struct PrefilterOptions {
  std::vector<std::int64_t> qs{2, 3};
  std::size_t max_cosets = 256;
  SimplifyOptions simplify{};
};

/// Coset table of the kernel of G -> (Z/q)^b given by the free abelian images.
inline CosetTable mod_q_cover_table(FreeAbelianisation const& fa, int ngens, std::int64_t q) {
  int const b = fa.invariants.rank;
  std::size_t n = 1;
  for (int i = 0; i < b; ++i) n *= static_cast<std::size_t>(q);
  std::vector<std::vector<int>> perms(static_cast<std::size_t>(ngens), std::vector<int>(n));
  for (int g = 0; g < ngens; ++g) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t rest = c, out = 0, place = 1;
      for (int i = 0; i < b; ++i) {
        auto digit = static_cast<std::int64_t>(rest % static_cast<std::size_t>(q));
        rest /= static_cast<std::size_t>(q);
        digit = mod_floor(digit + fa.images[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)], q);
        out += static_cast<std::size_t>(digit) * place;
        place *= static_cast<std::size_t>(q);
      }
      perms[static_cast<std::size_t>(g)][c] = static_cast<int>(out);
    }
  }
  return standardize(CosetTable::from_permutations(perms));
}

inline SurvivingModuli cyclic_cover_prefilter(GroupPresentation const& p, PrefilterOptions const& opt = {}) {
  auto fa = free_abelianisation(p);
  int const b = fa.invariants.rank;
  if (b < 2) throw std::invalid_argument("cyclic cover prefilter needs first Betti number at least 2");
  BigInt torsion = fa.invariants.torsion_order();
  SurvivingModuli out;
  for (auto q : opt.qs) {
    if (!is_prime(BigInt(q)) || torsion % q == 0) {
      out.notes.push_back("q = " + std::to_string(q) + " skipped: not a prime coprime to the torsion order");
      continue;
    }
    std::size_t index = 1;
    for (int i = 0; i < b && index <= opt.max_cosets; ++i) index *= static_cast<std::size_t>(q);
    if (index > opt.max_cosets) {
      out.notes.push_back("q = " + std::to_string(q) + " skipped: cover exceeds the coset budget");
      continue;
    }
    auto table = mod_q_cover_table(fa, p.ngens(), q);
    auto cover = rewrite_subgroup(p, table, opt.simplify).presentation;
    auto inv = abelian_invariants(cover);
    out.notes.push_back("q = " + std::to_string(q) + ": cover " + format_invariants(inv));
    if (inv.rank > q) continue;
    out.zero = false;
    // p-rank of the cover exceeds q only for primes dividing its torsion
    std::vector<BigInt> keep;
    auto candidates = out.primes ? *out.primes : std::vector<BigInt>{};
    if (!out.primes) {
      for (auto const& t : inv.torsion) {
        for (auto const& r : prime_divisors(t)) candidates.push_back(r);
      }
      candidates.push_back(q);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto const& r : candidates) {
      if (r == q || p_rank(inv, r) > q) keep.push_back(r);
    }
    out.primes = std::move(keep);
  }
  return out;
}

}  // namespace largeness
