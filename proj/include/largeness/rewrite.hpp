#pragma once

// Reidemeister-Schreier presentations of finite-index subgroups and a
// deterministic, count-budgeted Tietze simplifier.

#include "largeness/low_index.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace largeness {

/// Presentation of the subgroup with coset table `t` on the Schreier
/// generators (positive non-tree edges in (coset, generator) order) with one
/// relator per (coset, parent relator) pair.
inline GroupPresentation reidemeister_schreier(GroupPresentation const& parent, CosetTable const& t) {
  if (t.ngens() != parent.ngens()) throw std::invalid_argument("coset table does not match presentation");
  auto st = spanning_tree(t);
  std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(t.index()),
                                        std::vector<int>(static_cast<std::size_t>(t.ngens()), -1));
  int ngens = 0;
  for (int c = 0; c < t.index(); ++c) {
    for (int g = 0; g < t.ngens(); ++g) {
      if (!st.tree_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)]) {
        edge_id[static_cast<std::size_t>(c)][static_cast<std::size_t>(g)] = ngens++;
      }
    }
  }
  std::vector<Word> rels;
  for (int c = 0; c < t.index(); ++c) {
    for (auto const& r : parent.relators()) {
      Word w;
      int cur = c;
      for (auto const& s : r.syllables()) {
        for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) {
          if (s.exp > 0) {
            int id = edge_id[static_cast<std::size_t>(cur)][static_cast<std::size_t>(s.gen)];
            if (id >= 0) w.push(id, 1);
            cur = t.act(cur, s.gen, 1);
          } else {
            int prev = t.act(cur, s.gen, -1);
            int id = edge_id[static_cast<std::size_t>(prev)][static_cast<std::size_t>(s.gen)];
            if (id >= 0) w.push(id, -1);
            cur = prev;
          }
        }
      }
      if (cur != c) throw std::invalid_argument("relator does not act trivially on the coset table");
      rels.push_back(std::move(w));
    }
  }
  return GroupPresentation::indexed(ngens, rels);
}

struct SimplifyOptions {
  std::int64_t max_relator_length = 10'000;
  int max_rounds = 100;
  std::int64_t max_substring_work = 50'000'000;  // letter comparisons per call
};

struct SimplifyResult {
  GroupPresentation presentation;
  bool budget_exceeded = false;  // a cap stopped some step; output still presents the group
  int eliminated = 0;
};

namespace detail {

using Letters = std::vector<int>;  // letter codes: 2*gen for g, 2*gen+1 for g^-1

inline Letters to_letters(Word const& w) {
  Letters out;
  for (auto const& l : w.letters()) out.push_back(column_of(l.gen, l.sign));
  return out;
}

inline Word from_letter_codes(Letters const& ls) {
  Word w;
  for (int x : ls) w.push(x / 2, x % 2 == 0 ? 1 : -1);
  return w;
}

inline Letters invert(Letters const& ls) {
  Letters out(ls.rbegin(), ls.rend());
  for (int& x : out) x ^= 1;
  return out;
}

inline Letters cyclically_reduced(Letters const& ls) {
  return to_letters(cyclic_reduce(from_letter_codes(ls)));
}

class TietzeSimplifier {
 public:
  TietzeSimplifier(GroupPresentation const& p, SimplifyOptions const& opt) : ngens_(p.ngens()), opt_(opt) {
    for (auto const& r : p.relators()) rels_.push_back(cyclically_reduced(to_letters(r)));
    alive_.assign(static_cast<std::size_t>(ngens_), true);
  }

  SimplifyResult run() {
    SimplifyResult res;
    int round = 0;
    while (true) {
      if (round++ >= opt_.max_rounds) {
        flagged_ = true;
        break;
      }
      tidy();
      bool changed = false;
      while (eliminate_one()) {
        changed = true;
        ++res.eliminated;
        tidy();
      }
      if (shorten_by_substrings()) changed = true;
      if (!changed) break;
    }
    tidy();
    // Renumber surviving generators.
    std::vector<int> to_new(static_cast<std::size_t>(ngens_), -1);
    int n = 0;
    for (int g = 0; g < ngens_; ++g) {
      if (alive_[static_cast<std::size_t>(g)]) to_new[static_cast<std::size_t>(g)] = n++;
    }
    std::vector<Word> out;
    for (auto const& r : rels_) {
      Word w;
      for (int x : r) w.push(to_new[static_cast<std::size_t>(x / 2)], x % 2 == 0 ? 1 : -1);
      out.push_back(std::move(w));
    }
    if (n == 0) {
      // The trivial group still needs a generator slot; x0 = 1 records it.
      out.assign(1, Word::letter(0));
      n = 1;
    }
    res.presentation = GroupPresentation::indexed(n, out);
    res.budget_exceeded = flagged_;
    return res;
  }

 private:
  /// Drops empty relators and duplicates up to rotation and inversion.
  void tidy() {
    std::vector<Letters> kept;
    for (auto& r : rels_) {
      r = cyclically_reduced(r);
      if (r.empty()) continue;
      Letters ri = invert(r);
      bool dup = std::any_of(kept.begin(), kept.end(), [&](Letters const& k) {
        return k.size() == r.size() && (is_rotation(k, r) || is_rotation(k, ri));
      });
      if (!dup) kept.push_back(std::move(r));
    }
    rels_ = std::move(kept);
  }

  static bool is_rotation(Letters const& a, Letters const& b) {
    Letters doubled(a);
    doubled.insert(doubled.end(), a.begin(), a.end());
    return std::search(doubled.begin(), doubled.end(), b.begin(), b.end()) != doubled.end();
  }

  /// Removes one generator that occurs exactly once in some relator, choosing
  /// the candidate that grows the presentation least.
  bool eliminate_one() {
    std::vector<std::int64_t> total(static_cast<std::size_t>(ngens_), 0);
    for (auto const& r : rels_) {
      for (int x : r) ++total[static_cast<std::size_t>(x / 2)];
    }
    struct Candidate {
      std::size_t rel;
      int gen;
      std::int64_t growth;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      std::vector<int> count(static_cast<std::size_t>(ngens_), 0);
      for (int x : rels_[i]) ++count[static_cast<std::size_t>(x / 2)];
      for (int g = 0; g < ngens_; ++g) {
        if (count[static_cast<std::size_t>(g)] != 1) continue;
        auto others = total[static_cast<std::size_t>(g)] - 1;
        auto len = static_cast<std::int64_t>(rels_[i].size());
        cands.push_back({i, g, others * (len - 2) - len});
      }
    }
    std::stable_sort(cands.begin(), cands.end(), [](Candidate const& a, Candidate const& b) {
      if (a.growth != b.growth) return a.growth < b.growth;
      if (a.rel != b.rel) return a.rel < b.rel;
      return a.gen < b.gen;
    });
    for (auto const& c : cands) {
      if (try_eliminate(c.rel, c.gen)) return true;
    }
    return false;
  }

  bool try_eliminate(std::size_t ri, int gen) {
    Letters const& r = rels_[ri];
    std::size_t pos = 0;
    while (r[pos] / 2 != gen) ++pos;
    // r rotated = x^e w  =>  x = w^-1 (e = +1) or x = w (e = -1)
    Letters w(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    w.insert(w.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    Letters image = (r[pos] % 2 == 0) ? invert(w) : w;
    Letters image_inv = invert(image);
    std::vector<Letters> next;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      if (i == ri) continue;
      Letters out;
      for (int x : rels_[i]) {
        if (x / 2 == gen) {
          auto const& rep = (x % 2 == 0) ? image : image_inv;
          out.insert(out.end(), rep.begin(), rep.end());
        } else {
          out.push_back(x);
        }
      }
      out = cyclically_reduced(out);
      if (static_cast<std::int64_t>(out.size()) > opt_.max_relator_length) {
        flagged_ = true;
        return false;
      }
      next.push_back(std::move(out));
    }
    rels_ = std::move(next);
    alive_[static_cast<std::size_t>(gen)] = false;
    return true;
  }

  /// Replaces a cyclic subword u of some relator r by v^-1 when u v is a
  /// cyclic conjugate of another relator (or its inverse) and |u| > |v|.
  bool shorten_by_substrings() {
    bool any = false;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t si = 0; si < rels_.size() && !progress; ++si) {
        Letters const s = rels_[si];
        if (s.size() < 2) continue;
        std::size_t const k = s.size() / 2 + 1;
        for (std::size_t ri = 0; ri < rels_.size() && !progress; ++ri) {
          if (ri == si || rels_[ri].size() < k) continue;
          progress = substitute_into(ri, s, k);
          if (work_ > opt_.max_substring_work) {
            flagged_ = true;
            return any;
          }
        }
      }
      if (progress) {
        any = true;
        tidy();
      }
    }
    return any;
  }

  bool substitute_into(std::size_t ri, Letters const& s, std::size_t k) {
    Letters const& r = rels_[ri];
    std::size_t const n = r.size();
    for (Letters const& base : {s, invert(s)}) {
      for (std::size_t rot = 0; rot < base.size(); ++rot) {
        // u = base[rot .. rot+k), v = the rest (cyclically)
        for (std::size_t start = 0; start < n; ++start) {
          std::size_t m = 0;
          while (m < k && r[(start + m) % n] == base[(rot + m) % base.size()]) ++m;
          work_ += static_cast<std::int64_t>(m) + 1;
          if (m < k) continue;
          Letters v;
          for (std::size_t i = k; i < base.size(); ++i) v.push_back(base[(rot + i) % base.size()]);
          Letters out = invert(v);
          for (std::size_t i = k; i < n; ++i) out.push_back(r[(start + i) % n]);
          rels_[ri] = cyclically_reduced(out);
          return true;
        }
      }
    }
    return false;
  }

  int ngens_;
  SimplifyOptions opt_;
  std::vector<Letters> rels_;
  std::vector<bool> alive_;
  bool flagged_ = false;
  std::int64_t work_ = 0;
};

}  // namespace detail

/// Tietze simplification: generator eliminations and length-reducing
/// substitutions only. Deterministic for a given input and options.
inline SimplifyResult simplify_presentation(GroupPresentation const& p, SimplifyOptions const& opt = {}) {
  return detail::TietzeSimplifier(p, opt).run();
}

struct RewriteResult {
  GroupPresentation presentation;
  bool budget_exceeded = false;
};

inline RewriteResult rewrite_subgroup(GroupPresentation const& parent, CosetTable const& t,
                                      SimplifyOptions const& opt = {}) {
  auto raw = reidemeister_schreier(parent, t);
  auto s = simplify_presentation(raw, opt);
  return {std::move(s.presentation), s.budget_exceeded};
}

inline RewriteResult rewrite_subgroup(SubgroupRecord const& rec, SimplifyOptions const& opt = {}) {
  return rewrite_subgroup(*rec.parent, rec.table, opt);
}

}  // namespace largeness
