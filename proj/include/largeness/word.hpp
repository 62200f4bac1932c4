#pragma once

// Words in a free group, stored run-length compressed as (generator, exponent)
// syllables. Generators are 0-based indices; names live in the presentation.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace largeness {

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend auto operator<=>(Syllable const&, Syllable const&) = default;
};

/// A single letter g^{+1} or g^{-1}.
struct Letter {
  int gen = 0;
  int sign = 1;

  friend auto operator<=>(Letter const&, Letter const&) = default;
};

class Word {
 public:
  Word() = default;

  /// Takes syllables verbatim (zero exponents dropped, nothing merged).
  explicit Word(std::vector<Syllable> syllables) {
    syllables_.reserve(syllables.size());
    for (auto const& s : syllables) {
      if (s.exp != 0) syllables_.push_back(s);
    }
  }

  static Word letter(int gen, int sign = 1) { return Word({{gen, sign}}); }
  static Word power(int gen, std::int64_t exp) { return Word({{gen, exp}}); }

  /// Letter sequence verbatim, adjacent equal generators merged only when the
  /// signs agree (so a.A stays unreduced).
  static Word from_letters(std::vector<Letter> const& letters) {
    Word w;
    for (auto const& l : letters) {
      if (!w.syllables_.empty() && w.syllables_.back().gen == l.gen
          && (w.syllables_.back().exp > 0) == (l.sign > 0)) {
        w.syllables_.back().exp += l.sign;
      } else {
        w.syllables_.push_back({l.gen, l.sign});
      }
    }
    return w;
  }

  std::vector<Syllable> const& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Number of letters.
  std::int64_t length() const noexcept {
    std::int64_t n = 0;
    for (auto const& s : syllables_) n += std::llabs(s.exp);
    return n;
  }

  std::vector<Letter> letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (auto const& s : syllables_) {
      int sign = s.exp > 0 ? 1 : -1;
      for (std::int64_t i = 0; i < std::llabs(s.exp); ++i) out.push_back({s.gen, sign});
    }
    return out;
  }

  Word inverse() const {
    Word w;
    w.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
      w.syllables_.push_back({it->gen, -it->exp});
    }
    return w;
  }

  /// Appends g^e, cancelling against the tail (keeps a reduced word reduced).
  void push(int gen, std::int64_t exp) {
    if (exp == 0) return;
    if (!syllables_.empty() && syllables_.back().gen == gen) {
      syllables_.back().exp += exp;
      if (syllables_.back().exp == 0) syllables_.pop_back();
      return;
    }
    syllables_.push_back({gen, exp});
  }

  /// Free-group product of two words; reduction happens at the junction, so
  /// the result is reduced whenever both operands are.
  friend Word operator*(Word lhs, Word const& rhs) {
    for (auto const& s : rhs.syllables_) lhs.push(s.gen, s.exp);
    return lhs;
  }

  Word pow(std::int64_t k) const {
    Word base = k >= 0 ? *this : inverse();
    Word out;
    for (std::int64_t i = 0; i < std::llabs(k); ++i) out = out * base;
    return out;
  }

  friend auto operator<=>(Word const&, Word const&) = default;
  friend bool operator==(Word const&, Word const&) = default;

 private:
  std::vector<Syllable> syllables_;
};

inline Word free_reduce(Word const& w) {
  Word out;
  for (auto const& s : w.syllables()) out.push(s.gen, s.exp);
  return out;
}

inline bool is_freely_reduced(Word const& w) {
  auto const& s = w.syllables();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].gen == s[i + 1].gen) return false;
  }
  return true;
}

/// Free reduction followed by removal of cancelling first/last letters.
/// Words like t.a.t are left alone: only inverse pairs are removed.
inline Word cyclic_reduce(Word const& w) {
  std::vector<Syllable> s = free_reduce(w).syllables();
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen
         && ((s[lo].exp > 0) != (s[hi - 1].exp > 0))) {
    std::int64_t k = std::min(std::llabs(s[lo].exp), std::llabs(s[hi - 1].exp));
    s[lo].exp -= (s[lo].exp > 0 ? k : -k);
    s[hi - 1].exp -= (s[hi - 1].exp > 0 ? k : -k);
    if (s[hi - 1].exp == 0) --hi;
    if (s[lo].exp == 0) ++lo;
  }
  return Word(std::vector<Syllable>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                    s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

inline bool is_cyclically_reduced(Word const& w) {
  if (!is_freely_reduced(w)) return false;
  auto const& s = w.syllables();
  if (s.size() < 2) return true;
  return !(s.front().gen == s.back().gen && ((s.front().exp > 0) != (s.back().exp > 0)));
}

inline std::vector<std::int64_t> exponent_sums(Word const& w, int ngens) {
  std::vector<std::int64_t> sums(static_cast<std::size_t>(ngens), 0);
  for (auto const& s : w.syllables()) {
    if (s.gen < 0 || s.gen >= ngens) throw std::out_of_range("generator index out of range");
    sums[static_cast<std::size_t>(s.gen)] += s.exp;
  }
  return sums;
}

/// All cyclic rotations by whole letters are conjugates; this returns the
/// rotation starting at letter `offset`.
inline Word rotate_letters(Word const& w, std::int64_t offset) {
  auto ls = w.letters();
  if (ls.empty()) return w;
  auto n = static_cast<std::int64_t>(ls.size());
  offset = ((offset % n) + n) % n;
  std::vector<Letter> r(ls.begin() + offset, ls.end());
  r.insert(r.end(), ls.begin(), ls.begin() + offset);
  return free_reduce(Word::from_letters(r));
}

}  // namespace largeness
