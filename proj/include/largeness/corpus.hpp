#pragma once

// Bundled presentations with their known status, parametric families, the
// positive-Betti screening test, and batch running over presentation files.

#include "largeness/driver.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace largeness {

enum class Expected { large, not_large, unknown };

inline std::string to_string(Expected e) {
  switch (e) {
    case Expected::large: return "large";
    case Expected::not_large: return "not-large";
    case Expected::unknown: return "unknown";
  }
  return "?";
}

struct CorpusEntry {
  std::string id;        // e.g. T1#2, T3-18#5
  std::string relator;   // compact word in a, t (x, y for r0)
  Expected expected;
  int word_length;
  std::string note;      // description or the subgroup that certifies it

  GroupPresentation presentation() const {
    return parse_presentation(std::string("gens ") + (id == "r0" ? "x y" : "a t") + "\nrel " + relator);
  }
};

namespace detail {

inline std::vector<CorpusEntry> build_corpus() {
  auto const L = Expected::large, N = Expected::not_large, U = Expected::unknown;
  std::vector<CorpusEntry> c{
      {"T1#1", "ta2TataTa", N, 9, "BS(2,-3)"},
      {"T1#2", "ta2TatATA", N, 9, "BBG"},
      {"T1#3", "ta2TAtaTA", N, 9, "BS(2,3)"},
      {"T1#4", "ta2Ta2ta2Ta", N, 11, "BS(3,-4)"},
      {"T1#5", "ta2Ta2taTa2", N, 11, "isomorphic to T1#4"},
      {"T1#6", "ta2Ta2tATA2", N, 11, "D(2,1,2), isomorphic to BBG"},
      {"T1#7", "ta2Ta2tA2TA", N, 11, "isomorphic to T1#6"},
      {"T1#8", "ta2TatA2TA2", N, 11, "isomorphic to T1#6"},
      {"T1#9", "ta2TAta2TA2", N, 11, "BS(3,4)"},
      {"T1#10", "ta2TA2taTA2", N, 11, "isomorphic to T1#9"},
      {"T1#11", "ta3Tata2Ta", N, 11, "BS(2,-5)"},
      {"T1#12", "ta3TatA2TA", N, 11, "D(1,2,3)"},
      {"T1#13", "ta3TAta2TA", N, 11, "BS(2,5)"},
      {"T1#14", "ta3Ta2ta3TA", L, 13, "large via a U(3,3) image"},
      {"T1#15", "ta3Ta2ta2Ta2", N, 13, "BS(4,-5)"},
      {"T1#16", "ta3Ta2tA2TA2", N, 13, "D(2,2,3)"},
      {"T1#17", "ta3Ta2tA3TA", N, 13, "D(3,2,1)"},
      {"T1#18", "ta3Tata3TA2", L, 13, "large via a J2 image"},
      {"T1#19", "ta3TatA3TA2", N, 13, "isomorphic to T1#17"},
      {"T1#20", "ta3TA2ta2TA2", N, 13, "BS(4,5)"},
      {"T1#21", "ta4Tata3Ta", N, 13, "BS(2,-7)"},
      {"T1#22", "ta4TatA3TA", N, 13, "D(1,3,4)"},
      {"T1#23", "ta4TAta3TA", N, 13, "BS(2,7)"},
      {"T1#24", "ta2TataTataTa", N, 13, "BS(3,-4)"},
      {"T1#25", "ta2TatATatATA", U, 13, "open: is a trivial in every finite image?"},
      {"T1#26", "ta2TatATAtATA", U, 13, "open: is a trivial in every finite image?"},
      {"T1#27", "ta2TAtaTAtaTA", N, 13, "BS(3,4)"},
      {"T1#28", "ta2Tata2TataTa", N, 14, "BS(3,-5)"},
      {"T1#29", "ta2TAta2TAtaTA", N, 14, "BS(3,5)"},

      {"T2#1", "t3aT2ATA", L, 9, "index 7 then normal index 8, modulus 2"},
      {"T2#2", "t4AT3ATA", L, 11, ""},
      {"T2#3", "t4AT3aTA", L, 11, ""},
      {"T2#4", "t4aT3aTA", L, 11, ""},
      {"T2#5", "t3aT2A2TA2", L, 11, ""},
      {"T2#6", "t3A2T2aTA2", L, 11, ""},
      {"T2#7", "t3AT2a2TA2", L, 11, ""},
      {"T2#8", "t3a3T2ATA", L, 11, ""},
      {"T2#9", "t3ATATA2TA", L, 11, ""},
      {"T2#10", "t3aTaTA2TA", L, 11, "isomorphic to T2#12"},
      {"T2#11", "t3ATA2TATA", L, 11, "isomorphic to T2#9"},
      {"T2#12", "t3aTa2TATA", L, 11, ""},
      {"T2#13", "t2aT2ataTA2", L, 11, ""},
      {"T2#14", "t2AT2a2tATA", L, 11, "isomorphic to T2#13"},
      {"T2#15", "t2AtATATATA", L, 11, ""},
      {"T2#16", "t2ataTATATA", L, 11, ""},

      {"T3-16#1", "t4AtaT3ATa2TA", L, 16, "isomorphic to T3-16#5"},
      {"T3-16#2", "t4ATaT3Ata2TA", L, 16, "isomorphic to T3-16#1"},
      {"T3-16#3", "t3atAT3AtaTaTA", L, 16, "isomorphic to T3-16#1"},
      {"T3-16#4", "t3AtaT3ATataTA", L, 16, "isomorphic to T3-16#1"},
      {"T3-16#5", "t3ATaT3AtataTA", L, 16, "index 9, invariants [0,0,0,0]"},
      {"T3-16#6", "t3aTAT3AtaTatA", L, 16, "isomorphic to T3-16#5"},
      {"T3-16#7", "t3atAT2AtaT2aTA", L, 16, "isomorphic to T3-16#3"},
      {"T3-16#8", "t2a2T2ATa2tAtATA", L, 16, "index 9, invariants [0,0,0]"},
      {"T3-18#1", "t4aTaTa3TA2TA3", L, 18, "index 13, invariants [0,0,0]"},
      {"T3-18#2", "t4aT2AtaTA2Ta2TA", L, 18, "index 9, invariants [3,0,0,0]"},
      {"T3-18#3", "t4ATataTaTATaTA2", L, 18, "isomorphic to T3-18#5"},
      {"T3-18#4", "t4ATatATATa2TaTA", L, 18, "Nielsen move a -> at"},
      {"T3-18#5", "t3ATat2a2TATaTATA", L, 18, "index 10, invariants [3,18,0,0,0]"},
      {"T3-18#6", "t3ATat2ATaTa2TATA", L, 18, "index 12, invariants [0,0,0]"},
      {"T3-18#7", "t3ATa2T3atA2tATa", L, 18, "Nielsen move a -> at"},
      {"T3-18#8", "t3ATAT3aTa2tatA2", L, 18, "index 13, invariants [0,0,0]"},
      {"T3-18#9", "t3atA2ta2T2aT2ATA", L, 18, "index 7, invariants [0,0,0,0]"},
      {"T3-18#10", "t3atAT2a2TA2taT2A", L, 18, "index 9, invariants [2,0,0,0]"},
      {"T3-18#11", "t3atAT2aTA2ta2T2A", L, 18, "index 10, invariants [3,0,0,0]"},
      {"T3-18#12", "t3atA2T2a2taT2ATA", L, 18, "Nielsen move a -> aT"},
      {"T3-18#13", "t2aTata2TA2taTA2TA", L, 18, "isomorphic to T3-18#17"},
      {"T3-18#14", "t2aTA2ta2TataTA2TA", L, 18, "isomorphic to T3-18#20"},
      {"T3-18#15", "t2a2TAta2TatA2TATA", L, 18, "swap a and t"},
      {"T3-18#16", "t2a2t2atATATaT2ATA", L, 18, "swap a and t"},
      {"T3-18#17", "t2aTAt2Ata2TATaT2A", L, 18, "index 9, invariants [2,2,0,0,0]"},
      {"T3-18#18", "t2aTAt2AT2ATata2TA", L, 18, "isomorphic to T3-18#6"},
      {"T3-18#19", "t2AT2aTat2AtaTaTA2", L, 18, "isomorphic to T3-18#16"},
      {"T3-18#20", "t2aTA2tat2aTATaT2A", L, 18, "isomorphic to T3-18#17"},
      {"T3-18#21", "t2aTATat2ATatATaTA", N, 18, "not large"},
  };
  // r0 = [y^-1,x][x,y][y^-1,x]^-1[x,y]^-2, every finite-index subgroup has abelianisation Z^2
  Word x = Word::letter(0), y = Word::letter(1);
  Word c1 = y.inverse() * x * y * x.inverse();
  Word c2 = x * y * x.inverse() * y.inverse();
  Word r0 = cyclic_reduce(free_reduce(c1 * c2 * c1.inverse() * c2.inverse() * c2.inverse()));
  c.push_back({"r0", format_word(r0, {"x", "y"}), N, static_cast<int>(r0.length()),
               "not large, every finite-index subgroup has abelianisation Z^2"});
  return c;
}

}  // namespace detail

inline std::vector<CorpusEntry> const& corpus() {
  static std::vector<CorpusEntry> const entries = detail::build_corpus();
  return entries;
}

inline CorpusEntry const& corpus_entry(std::string_view id) {
  for (auto const& e : corpus()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no corpus entry " + std::string(id));
}

/// <a, t | t a^m t^-1 a^-n>
inline GroupPresentation gen_bs(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("Baumslag-Solitar parameters must be non-zero");
  return GroupPresentation({"a", "t"}, {cyclic_reduce(Word({{1, 1}, {0, m}, {1, -1}, {0, -n}}))});
}

/// <a, t | (t a^k t^-1) a^l (t a^k t^-1)^-1 a^-m>
inline GroupPresentation gen_dklm(std::int64_t k, std::int64_t l, std::int64_t m) {
  if (k == 0 || l == 0 || m == 0) throw std::invalid_argument("parameters must be non-zero");
  Word r({{1, 1}, {0, k}, {1, -1}, {0, l}, {1, 1}, {0, -k}, {1, -1}, {0, -m}});
  return GroupPresentation({"a", "t"}, {cyclic_reduce(r)});
}

enum class Answer { yes, no, inconclusive };

inline std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ScreenResult {
  Answer answer = Answer::no;
  int index = 0;  // index of the first subgroup with infinite abelianisation
};

/// Whether some subgroup of index <= max_index has infinite abelianisation.
inline ScreenResult betti_prefilter_mode(GroupPresentation const& p, int max_index = 5,
                                         std::size_t node_budget = 50'000'000) {
  if (abelian_invariants(p).rank > 0) return {Answer::yes, 1};
  auto found = low_index_subgroups(p, 2, std::max(2, max_index), {.normal_only = false, .node_budget = static_cast<std::int64_t>(node_budget)});
  for (auto const& rec : found.subgroups) {
    if (rec.index() > max_index) break;
    if (abelian_invariants(reidemeister_schreier(p, rec.table)).rank > 0) return {Answer::yes, rec.index()};
  }
  return {found.complete || max_index < 2 ? Answer::no : Answer::inconclusive, 0};
}

enum class BatchMode { prove_large, height1, betti_prefilter };

inline BatchMode parse_batch_mode(std::string_view s) {
  if (s == "prove-large") return BatchMode::prove_large;
  if (s == "height1") return BatchMode::height1;
  if (s == "betti-prefilter") return BatchMode::betti_prefilter;
  throw std::invalid_argument("unknown batch mode '" + std::string(s) + "'");
}

struct BatchItem {
  std::string input;
  std::string status;  // certified | unknown | yes | no | inconclusive | error
  std::string detail;
  std::string certificate_path;
};

struct BatchReport {
  std::vector<BatchItem> items;

  std::map<std::string, int> counts() const {
    std::map<std::string, int> out;
    for (auto const& i : items) ++out[i.status];
    return out;
  }
};

struct BatchOptions {
  BatchMode mode = BatchMode::prove_large;
  DriverOptions driver{};
  std::filesystem::path certificate_dir;  // empty: certificates are not written
  unsigned workers = 1;
};

inline BatchItem run_one(std::filesystem::path const& path, BatchOptions const& opt) {
  BatchItem item{path.string(), "error", {}, {}};
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto p = parse_presentation(text);
    std::optional<LargenessCertificate> cert;
    switch (opt.mode) {
      case BatchMode::prove_large: cert = prove_large(p, opt.driver).certificate; break;
      case BatchMode::height1: cert = height1_mode(p, opt.driver.max_index, opt.driver).certificate; break;
      case BatchMode::betti_prefilter: {
        auto s = betti_prefilter_mode(p, opt.driver.max_index, opt.driver.node_budget);
        item.status = to_string(s.answer);
        if (s.answer == Answer::yes) item.detail = "index " + std::to_string(s.index);
        return item;
      }
    }
    if (!cert) {
      item.status = "unknown";
      return item;
    }
    item.status = "certified";
    item.detail = "index " + std::to_string(cert->index());
    if (cert->mode == CertificateMode::alexander) item.detail += " modulus " + to_string(cert->modulus);
    if (!opt.certificate_dir.empty()) {
      auto out = opt.certificate_dir / (path.stem().string() + ".cert");
      std::ofstream(out) << format_certificate(*cert);
      item.certificate_path = out.string();
    }
  } catch (ParseError const& e) {
    item.detail = std::string("parse error: ") + e.what();
  } catch (std::exception const& e) {
    item.detail = e.what();
  }
  return item;
}

/// Runs every input with a bounded pool of workers; items stay in input order.
inline BatchReport batch_run(std::vector<std::filesystem::path> const& paths, BatchOptions const& opt = {}) {
  BatchReport report;
  report.items.resize(paths.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < paths.size(); i = next++) report.items[i] = run_one(paths[i], opt);
  };
  unsigned n = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(paths.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return report;
}

inline std::string format_batch_report(BatchReport const& r) {
  std::ostringstream os;
  os << "largeness-batch v1\n";
  for (auto const& i : r.items) {
    os << i.input << ": " << i.status;
    if (!i.detail.empty()) os << " (" << i.detail << ')';
    if (!i.certificate_path.empty()) os << " -> " << i.certificate_path;
    os << '\n';
  }
  os << "totals";
  for (auto const& [k, v] : r.counts()) os << ' ' << k << '=' << v;
  os << '\n';
  return os.str();
}

}  // namespace largeness
