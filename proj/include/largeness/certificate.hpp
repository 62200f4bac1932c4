#pragma once

// Largeness certificates: the subgroup chain from G down to a witness H, and
// either a chi with every Alexander minor vanishing mod a modulus, or (for
// height-1 one-relator inputs) abelian invariants needing three generators.
// Verification replays everything from G and the record alone.

#include "largeness/vanish.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace largeness {

enum class CertificateMode { alexander, height1 };

struct LargenessCertificate {
  GroupPresentation group;
  std::vector<CosetTable> chain;  // each table is over the previous subgroup's rewritten presentation
  SimplifyOptions rewrite;
  GroupPresentation witness;
  CertificateMode mode = CertificateMode::alexander;
  AbelianInvariants invariants;   // of the witness
  ChiVector chi;
  BigInt modulus = 0;
  std::vector<MinorSpec> minor_specs;
  std::vector<std::string> minors;  // unit-normalized evaluated minors, over Z

  std::int64_t index() const {
    std::int64_t n = 1;
    for (auto const& t : chain) n *= t.index();
    return n;
  }
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string format_minor_spec(MinorSpec const& s) {
  std::string out = std::to_string(s.deleted_column) + " ";
  if (s.deleted_rows.empty()) return out + "-";
  for (std::size_t i = 0; i < s.deleted_rows.size(); ++i) out += (i ? "," : "") + std::to_string(s.deleted_rows[i]);
  return out;
}

inline std::string format_certificate(LargenessCertificate const& c) {
  std::ostringstream os;
  os << "largeness-certificate v1\n";
  os << "mode " << (c.mode == CertificateMode::alexander ? "alexander" : "height1") << '\n';
  os << "group\n" << format_presentation(c.group) << "end\n";
  os << "rewrite " << c.rewrite.max_relator_length << ' ' << c.rewrite.max_rounds << ' '
     << c.rewrite.max_substring_work << '\n';
  os << "chain " << c.chain.size() << '\n';
  for (auto const& t : c.chain) os << "table " << t.index() << ' ' << t.ngens() << '\n' << format_table(t);
  os << "witness\n" << format_presentation(c.witness) << "end\n";
  os << "index " << c.index() << '\n';
  os << "invariants " << c.invariants.rank;
  for (auto const& d : c.invariants.torsion) os << ' ' << d;
  os << '\n';
  if (c.mode == CertificateMode::alexander) {
    os << "chi";
    for (auto x : c.chi) os << ' ' << x;
    os << '\n';
    os << "modulus " << c.modulus << '\n';
    for (std::size_t i = 0; i < c.minor_specs.size(); ++i) {
      os << "minor " << format_minor_spec(c.minor_specs[i]) << " : " << c.minors[i] << '\n';
    }
  }
  return os.str();
}

namespace detail {

class CertificateReader {
 public:
  explicit CertificateReader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back(std::move(line));
      start = end + 1;
    }
    while (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }

  std::string const& next() {
    if (done()) fail("unexpected end of certificate");
    return lines_[pos_++];
  }

  std::string const& peek() {
    if (done()) fail("unexpected end of certificate");
    return lines_[pos_];
  }

  // "keyword rest" -> rest
  std::string expect(std::string const& keyword) {
    auto const& line = next();
    if (line == keyword) return "";
    if (line.rfind(keyword + " ", 0) != 0) fail("expected '" + keyword + "'");
    return line.substr(keyword.size() + 1);
  }

  GroupPresentation presentation() {
    std::string block;
    while (peek() != "end") block += next() + "\n";
    next();
    try {
      return parse_presentation(block);
    } catch (ParseError const& e) {
      fail(std::string("bad presentation: ") + e.what());
    }
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw CertificateError("certificate line " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

template <class T>
std::vector<T> read_numbers(std::string const& s) {
  std::istringstream is(s);
  std::vector<T> out;
  std::string tok;
  while (is >> tok) {
    try {
      if constexpr (std::is_same_v<T, BigInt>) {
        out.push_back(BigInt(tok));
      } else {
        std::size_t used = 0;
        auto v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(static_cast<T>(v));
      }
    } catch (std::exception const&) {
      throw CertificateError("bad number '" + tok + "'");
    }
  }
  return out;
}

inline MinorSpec parse_minor_spec(std::string const& s) {
  std::istringstream is(s);
  std::string col, rows;
  if (!(is >> col >> rows)) throw CertificateError("bad minor spec '" + s + "'");
  MinorSpec spec;
  spec.deleted_column = static_cast<int>(read_numbers<std::int64_t>(col).at(0));
  if (rows != "-") {
    for (char& ch : rows) {
      if (ch == ',') ch = ' ';
    }
    for (auto r : read_numbers<std::int64_t>(rows)) spec.deleted_rows.push_back(static_cast<int>(r));
  }
  return spec;
}

}  // namespace detail

inline LargenessCertificate parse_certificate(std::string_view text) {
  detail::CertificateReader in(text);
  if (in.next() != "largeness-certificate v1") in.fail("not a version 1 largeness certificate");
  LargenessCertificate c;
  auto mode = in.expect("mode");
  if (mode == "alexander") {
    c.mode = CertificateMode::alexander;
  } else if (mode == "height1") {
    c.mode = CertificateMode::height1;
  } else {
    in.fail("unknown mode '" + mode + "'");
  }
  in.expect("group");
  c.group = in.presentation();
  auto rw = detail::read_numbers<std::int64_t>(in.expect("rewrite"));
  if (rw.size() != 3) in.fail("rewrite needs three numbers");
  c.rewrite = {rw[0], static_cast<int>(rw[1]), rw[2]};
  auto steps = detail::read_numbers<std::int64_t>(in.expect("chain"));
  if (steps.size() != 1 || steps[0] < 0) in.fail("bad chain length");
  for (std::int64_t s = 0; s < steps[0]; ++s) {
    auto shape = detail::read_numbers<std::int64_t>(in.expect("table"));
    if (shape.size() != 2 || shape[0] < 1 || shape[1] < 1) in.fail("bad table shape");
    std::vector<int> cells;
    for (std::int64_t r = 0; r < shape[0]; ++r) {
      auto row = detail::read_numbers<std::int64_t>(in.next());
      if (static_cast<std::int64_t>(row.size()) != 2 * shape[1]) in.fail("table row has the wrong length");
      for (auto x : row) cells.push_back(static_cast<int>(x));
    }
    c.chain.push_back(CosetTable::from_cells(static_cast<int>(shape[0]), static_cast<int>(shape[1]), std::move(cells)));
  }
  in.expect("witness");
  c.witness = in.presentation();
  auto idx = detail::read_numbers<std::int64_t>(in.expect("index"));
  if (idx.size() != 1 || idx[0] != c.index()) in.fail("index does not match the chain");
  auto inv = detail::read_numbers<BigInt>(in.expect("invariants"));
  if (inv.empty()) in.fail("missing rank");
  c.invariants.rank = static_cast<int>(inv[0]);
  c.invariants.torsion.assign(inv.begin() + 1, inv.end());
  if (c.mode == CertificateMode::alexander) {
    c.chi = detail::read_numbers<std::int64_t>(in.expect("chi"));
    auto m = detail::read_numbers<BigInt>(in.expect("modulus"));
    if (m.size() != 1) in.fail("bad modulus");
    c.modulus = m[0];
    while (!in.done()) {
      auto rest = in.expect("minor");
      auto colon = rest.find(" : ");
      if (colon == std::string::npos) in.fail("minor line needs ' : '");
      c.minor_specs.push_back(detail::parse_minor_spec(rest.substr(0, colon)));
      c.minors.push_back(rest.substr(colon + 3));
    }
  }
  if (!in.done()) in.fail("trailing lines");
  return c;
}

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> mismatches;

  void fail(std::string what) {
    ok = false;
    mismatches.push_back(std::move(what));
  }
};

/// The pivot generator when p is a two-generator one-relator presentation in
/// Magnus form of height 1, else -1.
inline int height_one_pivot(GroupPresentation const& p) {
  if (p.ngens() != 2 || p.nrels() != 1 || !is_cyclically_reduced(p.relators()[0])) return -1;
  for (int pivot : {1, 0}) {
    try {
      auto s = magnus_stats(p, 0, pivot);
      if (s.in_magnus_form && s.height == 1) return pivot;
    } catch (std::exception const&) {
    }
  }
  return -1;
}

inline VerificationReport verify_certificate(GroupPresentation const& g, LargenessCertificate const& c) {
  VerificationReport rep;
  if (!(c.group == g)) rep.fail("certificate is for a different presentation");
  GroupPresentation current = c.group;
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    auto const& t = c.chain[i];
    if (t.ngens() != current.ngens()) {
      rep.fail("table " + std::to_string(i + 1) + " has the wrong number of generators");
      return rep;
    }
    if (auto err = audit_table(t, current); !err.empty()) {
      rep.fail("table " + std::to_string(i + 1) + " audit: " + err);
      return rep;
    }
    current = rewrite_subgroup(current, t, c.rewrite).presentation;
  }
  if (!(current == c.witness)) {
    rep.fail("rewritten witness does not match the recorded presentation");
    return rep;
  }
  auto inv = abelian_invariants(c.witness);
  if (!(inv == c.invariants)) rep.fail("witness invariants are " + format_invariants(inv));

  if (c.mode == CertificateMode::height1) {
    if (height_one_pivot(c.group) < 0) rep.fail("height-1 criterion needs a height-1 two-generator one-relator input");
    if (inv.min_generators() < 3) rep.fail("witness abelianisation needs fewer than 3 generators");
    return rep;
  }

  if (c.modulus != 0 && !is_prime(c.modulus)) {
    rep.fail("modulus " + to_string(c.modulus) + " is neither 0 nor prime");
    return rep;
  }
  AlexanderMatrix b;
  try {
    b = alexander_matrix(c.witness);
  } catch (NoFreeAbelianisation const&) {
    rep.fail("witness has finite abelianisation");
    return rep;
  }
  if (static_cast<int>(c.chi.size()) != b.rank() || first_column_with_image(b, c.chi) < 0) {
    rep.fail("chi does not fit the witness abelianisation");
    return rep;
  }
  std::int64_t g_chi = 0;
  for (auto x : c.chi) g_chi = gcd_i64(g_chi, x);
  if (g_chi != 1) rep.fail("chi is not primitive");

  auto check = verify_chi(b, c.chi);
  bool vanishes = !check.moduli.empty() &&
                  (check.moduli.front() == 0 ||
                   std::find(check.moduli.begin(), check.moduli.end(), c.modulus) != check.moduli.end());
  if (!vanishes) rep.fail("minors do not vanish mod " + to_string(c.modulus) + " at chi");

  auto ev = evaluate_matrix(b, c.chi);
  if (c.minor_specs.size() != c.minors.size()) rep.fail("minor list is malformed");
  for (std::size_t i = 0; i < std::min(c.minor_specs.size(), c.minors.size()); ++i) {
    auto const& spec = c.minor_specs[i];
    if (spec.deleted_column != check.column ||
        static_cast<int>(spec.deleted_rows.size()) != rows_to_delete(b.rows(), b.cols())) {
      rep.fail("minor " + format_minor_spec(spec) + " does not match the evaluation");
      continue;
    }
    auto text = format_poly(unit_normalized(minor(ev, spec)));
    if (text != c.minors[i]) rep.fail("minor " + format_minor_spec(spec) + " recomputes to " + text);
  }
  return rep;
}

inline VerificationReport verify_certificate(LargenessCertificate const& c) { return verify_certificate(c.group, c); }

}  // namespace largeness
