#pragma once

// Finite group presentations, their text format, and the Magnus-form
// statistics used for two-generator one-relator inputs.
//
// Text format (line oriented, ';' also ends a line, '#' starts a comment):
//
//   gens a t
//   rel ta2TatATA
//   rel ...
//
// With single-letter generator names a relator is written compactly: a
// lowercase letter is a generator, the uppercase letter its inverse, and an
// optional decimal exponent (optionally preceded by '^') follows. With longer
// names relators are '*' or space separated tokens `name` or `name^k`.

#include "largeness/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace largeness {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column)
                           + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class GroupPresentation {
 public:
  GroupPresentation() = default;

  /// Relators are stored freely reduced; empty relators are dropped.
  GroupPresentation(std::vector<std::string> names, std::vector<Word> const& relators)
      : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("a presentation needs at least one generator");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate generator " + names_[i]);
      }
    }
    for (auto const& r : relators) add_relator(r);
  }

  /// Generators named x0, x1, ... (used for rewritten subgroup presentations).
  static GroupPresentation indexed(int ngens, std::vector<Word> const& relators) {
    std::vector<std::string> names;
    for (int i = 0; i < ngens; ++i) names.push_back("x" + std::to_string(i));
    return GroupPresentation(std::move(names), relators);
  }

  int ngens() const noexcept { return static_cast<int>(names_.size()); }
  int nrels() const noexcept { return static_cast<int>(relators_.size()); }
  int deficiency() const noexcept { return ngens() - nrels(); }

  std::vector<std::string> const& names() const noexcept { return names_; }
  std::vector<Word> const& relators() const noexcept { return relators_; }

  std::optional<int> generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  void add_relator(Word const& r) {
    Word reduced = free_reduce(r);
    for (auto const& s : reduced.syllables()) {
      if (s.gen < 0 || s.gen >= ngens()) throw std::out_of_range("relator uses unknown generator");
    }
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }

  bool compact_names() const {
    return std::all_of(names_.begin(), names_.end(), [](std::string const& n) {
      return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
    });
  }

  friend bool operator==(GroupPresentation const&, GroupPresentation const&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

inline std::string format_word(Word const& w, std::vector<std::string> const& names) {
  bool compact = std::all_of(names.begin(), names.end(), [](std::string const& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
  std::string out;
  if (compact) {
    for (auto const& s : w.syllables()) {
      char c = names[static_cast<std::size_t>(s.gen)][0];
      out += s.exp > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto e = std::llabs(s.exp);
      if (e > 1) out += std::to_string(e);
    }
    return out;
  }
  for (auto const& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += names[static_cast<std::size_t>(s.gen)];
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

inline std::string format_presentation(GroupPresentation const& p) {
  std::ostringstream os;
  os << "gens";
  for (auto const& n : p.names()) os << ' ' << n;
  os << '\n';
  for (auto const& r : p.relators()) os << "rel " << format_word(r, p.names()) << '\n';
  return os.str();
}

namespace detail {

inline Word parse_compact_word(std::string_view text, std::vector<std::string> const& names,
                               std::size_t line, std::size_t col0) {
  std::vector<Syllable> syl;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col0 + i);
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int gen = -1;
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (names[g].size() == 1 && names[g][0] == lower) gen = static_cast<int>(g);
    }
    if (gen < 0) throw ParseError(std::string("unknown generator '") + lower + "'", line, col0 + i);
    int sign = std::islower(static_cast<unsigned char>(c)) ? 1 : -1;
    std::size_t at = i;
    ++i;
    if (i < text.size() && text[i] == '^') ++i;
    std::int64_t e = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        if (e > (std::int64_t{1} << 40)) throw ParseError("exponent too large", line, col0 + at);
        ++i;
      }
      if (e == 0) throw ParseError("exponent 0", line, col0 + at);
    } else if (i > at + 1) {
      throw ParseError("'^' without exponent", line, col0 + at);
    }
    syl.push_back({gen, sign * e});
  }
  return free_reduce(Word(std::move(syl)));
}

inline Word parse_token_word(std::string_view text, std::vector<std::string> const& names,
                             std::size_t line, std::size_t col0) {
  std::vector<Syllable> syl;
  std::size_t i = 0;
  auto is_name_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_name_char(text[i])) ++i;
    if (i == start) throw ParseError(std::string("unexpected character '") + c + "'", line, col0 + i);
    std::string name(text.substr(start, i - start));
    int gen = -1;
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (names[g] == name) gen = static_cast<int>(g);
    }
    if (gen < 0) throw ParseError("unknown generator '" + name + "'", line, col0 + start);
    std::int64_t e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      int sign = 1;
      if (i < text.size() && text[i] == '-') {
        sign = -1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("'^' without exponent", line, col0 + i);
      }
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i] - '0');
        if (e > (std::int64_t{1} << 40)) throw ParseError("exponent too large", line, col0 + start);
        ++i;
      }
      if (e == 0) throw ParseError("exponent 0", line, col0 + start);
      e *= sign;
    }
    syl.push_back({gen, e});
  }
  return free_reduce(Word(std::move(syl)));
}

}  // namespace detail

/// Parses one relator against a list of generator names (compact grammar
/// when every name is a single lowercase letter, token grammar otherwise).
inline Word parse_word(std::string_view text, std::vector<std::string> const& names) {
  bool compact = std::all_of(names.begin(), names.end(), [](std::string const& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
  return compact ? detail::parse_compact_word(text, names, 1, 1)
                 : detail::parse_token_word(text, names, 1, 1);
}

inline GroupPresentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  bool have_gens = false;
  std::vector<std::pair<std::size_t, std::string>> pending;  // (line, remainder)
  std::vector<std::size_t> pending_col;

  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = pos;
    while (end < text.size() && text[end] != '\n' && text[end] != ';') ++end;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t kw_start = i;
    while (i < line.size() && std::isalpha(static_cast<unsigned char>(line[i]))) ++i;
    std::string_view kw = line.substr(kw_start, i - kw_start);
    if (kw == "gens") {
      if (have_gens) throw ParseError("repeated 'gens' line", line_no, kw_start + 1);
      have_gens = true;
      std::string rest(line.substr(i));
      std::istringstream is(rest);
      std::string tok;
      while (is >> tok) {
        for (char c : tok) {
          if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            throw ParseError("bad generator name '" + tok + "'", line_no, i + 1);
          }
        }
        if (!std::isalpha(static_cast<unsigned char>(tok[0]))) {
          throw ParseError("bad generator name '" + tok + "'", line_no, i + 1);
        }
        if (std::find(names.begin(), names.end(), tok) != names.end()) {
          throw ParseError("duplicate generator '" + tok + "'", line_no, i + 1);
        }
        names.push_back(tok);
      }
      if (names.empty()) throw ParseError("no generators", line_no, kw_start + 1);
    } else if (kw == "rel") {
      if (!have_gens) throw ParseError("'rel' before 'gens'", line_no, kw_start + 1);
      pending.emplace_back(line_no, std::string(line.substr(i)));
      pending_col.push_back(i + 1);
    } else if (!kw.empty() || i < line.size()) {
      throw ParseError("expected 'gens' or 'rel'", line_no, kw_start + 1);
    }
    if (end < text.size() && text[end] == '\n') ++line_no;
    pos = end + 1;
  }
  if (!have_gens) throw ParseError("missing 'gens' line", line_no, 1);

  bool compact = std::all_of(names.begin(), names.end(), [](std::string const& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
  bool single_letters = std::all_of(names.begin(), names.end(),
                                    [](std::string const& n) { return n.size() == 1; });
  if (single_letters && !compact) {
    throw ParseError("single-letter generator names must be lowercase", 1, 1);
  }
  std::vector<Word> rels;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto const& [ln, body] = pending[k];
    Word w = compact ? detail::parse_compact_word(body, names, ln, pending_col[k])
                     : detail::parse_token_word(body, names, ln, pending_col[k]);
    rels.push_back(std::move(w));
  }
  return GroupPresentation(std::move(names), rels);
}

// ---------------------------------------------------------------------------
// Magnus form statistics

struct MagnusStats {
  int pivot = 0;
  bool in_magnus_form = false;
  std::optional<std::int64_t> height;  // defined only in Magnus form
  std::int64_t t_syllables = 0;        // n: number of pivot syllables (cyclically)
  std::int64_t syllable_length = 0;    // 2n
  std::int64_t word_length = 0;
};

/// Statistics of relator `relator_index` written as t^k1 a^l1 ... t^kn a^ln
/// with t the pivot. The relator must be cyclically reduced.
inline MagnusStats magnus_stats(GroupPresentation const& p, int relator_index, int pivot) {
  if (p.ngens() != 2) throw std::invalid_argument("Magnus statistics need a two-generator presentation");
  if (pivot < 0 || pivot >= 2) throw std::out_of_range("pivot generator out of range");
  if (relator_index < 0 || relator_index >= p.nrels()) throw std::out_of_range("relator index out of range");
  Word const& w = p.relators()[static_cast<std::size_t>(relator_index)];
  if (!is_cyclically_reduced(w)) throw std::invalid_argument("relator is not cyclically reduced");

  std::vector<Syllable> s = w.syllables();
  if (s.size() >= 2 && s.front().gen == s.back().gen) {
    s.front().exp += s.back().exp;  // same sign, so no cancellation
    s.pop_back();
  }
  auto first_pivot = std::find_if(s.begin(), s.end(), [&](Syllable const& x) { return x.gen == pivot; });
  if (first_pivot == s.end()) {
    throw std::invalid_argument("relator is a power of the non-pivot generator");
  }
  std::rotate(s.begin(), first_pivot, s.end());

  MagnusStats st;
  st.pivot = pivot;
  st.word_length = w.length();
  std::int64_t sum = 0, lo = 0, hi = 0;
  bool first = true;
  for (auto const& x : s) {
    if (x.gen != pivot) continue;
    ++st.t_syllables;
    sum += x.exp;
    if (first) {
      lo = hi = sum;
      first = false;
    } else {
      lo = std::min(lo, sum);
      hi = std::max(hi, sum);
    }
  }
  st.syllable_length = 2 * st.t_syllables;
  st.in_magnus_form = (sum == 0);
  if (st.in_magnus_form) st.height = hi - lo;
  return st;
}

// ---------------------------------------------------------------------------
// Generator substitutions

struct InvertGenerator {
  int gen;
};
/// g -> g * h^k
struct MultiplyGenerator {
  int gen;
  int by;
  std::int64_t power;
};
struct SwapGenerators {
  int first;
  int second;
};

using SubstitutionRule = std::variant<InvertGenerator, MultiplyGenerator, SwapGenerators>;

inline SubstitutionRule inverse_rule(SubstitutionRule const& rule) {
  if (auto const* m = std::get_if<MultiplyGenerator>(&rule)) {
    return MultiplyGenerator{m->gen, m->by, -m->power};
  }
  return rule;
}

inline Word substitute(Word const& w, SubstitutionRule const& rule, int ngens) {
  std::vector<Word> images;
  for (int g = 0; g < ngens; ++g) images.push_back(Word::letter(g));
  auto check = [&](int g) {
    if (g < 0 || g >= ngens) throw std::out_of_range("substitution references unknown generator");
  };
  std::visit(
      [&](auto const& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, InvertGenerator>) {
          check(r.gen);
          images[static_cast<std::size_t>(r.gen)] = Word::letter(r.gen, -1);
        } else if constexpr (std::is_same_v<R, MultiplyGenerator>) {
          check(r.gen);
          check(r.by);
          if (r.gen == r.by) throw std::invalid_argument("g -> g h^k needs g != h");
          images[static_cast<std::size_t>(r.gen)] = Word::letter(r.gen) * Word::power(r.by, r.power);
        } else {
          check(r.first);
          check(r.second);
          images[static_cast<std::size_t>(r.first)] = Word::letter(r.second);
          images[static_cast<std::size_t>(r.second)] = Word::letter(r.first);
        }
      },
      rule);
  Word out;
  for (auto const& s : w.syllables()) out = out * images[static_cast<std::size_t>(s.gen)].pow(s.exp);
  return out;
}

inline GroupPresentation substitute_generator(GroupPresentation const& p, SubstitutionRule const& rule) {
  std::vector<Word> rels;
  for (auto const& r : p.relators()) rels.push_back(substitute(r, rule, p.ngens()));
  return GroupPresentation(p.names(), rels);
}

}  // namespace largeness
