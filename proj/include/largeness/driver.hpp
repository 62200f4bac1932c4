#pragma once

// The partial largeness algorithm: walk the finite-index subgroups of G in
// canonical order, rewrite each one and look for a vanishing Alexander
// polynomial; optionally descend into normal subgroups of the subgroups seen.

#include "largeness/certificate.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace largeness {

struct DriverOptions {
  int max_index = 6;
  int descent_index = 0;          // normal subgroups of each examined subgroup, up to this index
  int descent_min_index = 2;
  std::optional<bool> prefilter;  // unset: only for first Betti number >= 3
  double subgroup_seconds = 0;    // per-subgroup budget for the vanish search, 0 = none
  std::optional<std::chrono::steady_clock::time_point> deadline;  // whole run
  VanishBudget vanish{};
  PrefilterOptions prefilter_options{.qs = {2, 3}, .max_cosets = 64};
  SimplifyOptions rewrite{};
  std::size_t node_budget = 50'000'000;
  bool finish_index = false;  // after the first certificate, also examine the rest of that index
};

enum class Disposition { certified, not_found, inconclusive, finite_abelianisation, prefilter_rejected, small };

inline std::string to_string(Disposition d) {
  switch (d) {
    case Disposition::certified: return "certified";
    case Disposition::not_found: return "not-found";
    case Disposition::inconclusive: return "inconclusive";
    case Disposition::finite_abelianisation: return "skipped (finite abelianisation)";
    case Disposition::prefilter_rejected: return "skipped (cover ranks)";
    case Disposition::small: return "no (d(H/H') < 3)";
  }
  return "?";
}

struct SubgroupReport {
  std::vector<int> chain;  // index of each step
  int position = 0;        // 1-based among the classes of the same index in its enumeration
  AbelianInvariants invariants;
  int generators = 0;
  int relators = 0;
  Disposition disposition = Disposition::not_found;
  std::string detail;

  std::int64_t index() const {
    std::int64_t n = 1;
    for (auto k : chain) n *= k;
    return n;
  }
};

struct ProveResult {
  std::optional<LargenessCertificate> certificate;
  std::vector<LargenessCertificate> alternatives;  // further witnesses of the same index (finish_index)
  std::vector<SubgroupReport> report;
  std::vector<std::string> notes;

  bool certified() const { return certificate.has_value(); }
};

namespace detail {

inline std::vector<int> chain_indices(std::vector<CosetTable> const& chain) {
  std::vector<int> out;
  for (auto const& t : chain) out.push_back(t.index());
  return out;
}

}  // namespace detail

inline std::string format_chain(std::vector<int> const& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "/" : "") + std::to_string(chain[i]);
  return s;
}

inline std::string format_report(ProveResult const& r) {
  std::ostringstream os;
  os << "largeness-report v1\n";
  os << "result " << (r.certified() ? "certified" : "unknown") << '\n';
  if (r.certified()) {
    auto const& c = *r.certificate;
    os << "witness index " << c.index() << " invariants " << format_invariants(c.invariants);
    if (c.mode == CertificateMode::alexander) {
      os << " chi " << detail::format_chi(c.chi) << " modulus " << c.modulus;
    } else {
      os << " height-1 criterion";
    }
    os << '\n';
  }
  for (auto const& c : r.alternatives) {
    os << "alternative index " << c.index() << " chain " << format_chain(detail::chain_indices(c.chain)) << " invariants "
       << format_invariants(c.invariants) << " chi " << detail::format_chi(c.chi) << " modulus " << c.modulus << '\n';
  }
  for (auto const& n : r.notes) os << "note " << n << '\n';
  for (auto const& s : r.report) {
    os << "subgroup " << format_chain(s.chain) << " #" << s.position << ' ' << format_invariants(s.invariants)
       << " gens " << s.generators << " rels " << s.relators << ": " << to_string(s.disposition);
    if (!s.detail.empty()) os << " (" << s.detail << ')';
    os << '\n';
  }
  return os.str();
}

namespace detail {

struct Examined {
  std::vector<CosetTable> chain;
  GroupPresentation presentation;
  AbelianInvariants invariants;
};

inline LargenessCertificate alexander_certificate(GroupPresentation const& g, Examined const& e,
                                                  AlexanderMatrix const& b, VanishResult const& r,
                                                  SimplifyOptions const& rewrite) {
  LargenessCertificate c;
  c.group = g;
  c.chain = e.chain;
  c.rewrite = rewrite;
  c.witness = e.presentation;
  c.mode = CertificateMode::alexander;
  c.invariants = e.invariants;
  c.chi = r.chi;
  c.modulus = r.modulus();
  auto ev = evaluate_matrix(b, r.chi);
  for (auto const& m : r.evidence) {
    c.minor_specs.push_back(m.spec);
    c.minors.push_back(format_poly(unit_normalized(minor(ev, m.spec))));
  }
  return c;
}

inline void assert_verified(LargenessCertificate const& c) {
  auto v = verify_certificate(c);
  if (!v.ok) throw std::logic_error("emitted certificate fails verification: " + v.mismatches.front());
}

/// Runs the vanish search on one subgroup; returns a certificate on success.
inline std::optional<LargenessCertificate> examine(GroupPresentation const& g, Examined const& e, DriverOptions const& opt,
                                                   SubgroupReport& rep) {
  if (e.invariants.rank == 0) {
    rep.disposition = Disposition::finite_abelianisation;
    return std::nullopt;
  }
  bool prefilter = opt.prefilter.value_or(e.invariants.rank >= 3);
  if (prefilter && e.invariants.rank >= 2) {
    auto keep = cyclic_cover_prefilter(e.presentation, opt.prefilter_options);
    if (keep.empty()) {
      rep.disposition = Disposition::prefilter_rejected;
      for (auto const& n : keep.notes) rep.detail += (rep.detail.empty() ? "" : "; ") + n;
      return std::nullopt;
    }
  }
  auto budget = opt.vanish;
  if (opt.subgroup_seconds > 0) {
    budget.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(opt.subgroup_seconds));
  }
  if (opt.deadline && (!budget.deadline || *opt.deadline < *budget.deadline)) budget.deadline = opt.deadline;
  auto b = alexander_matrix(e.presentation);
  auto r = find_vanishing(b, budget);
  rep.detail = r.reason;
  switch (r.outcome) {
    case Outcome::found: {
      rep.disposition = Disposition::certified;
      rep.detail = "chi " + format_chi(r.chi) + " modulus " + to_string(r.modulus());
      auto c = alexander_certificate(g, e, b, r, opt.rewrite);
      assert_verified(c);
      return c;
    }
    case Outcome::not_found: rep.disposition = Disposition::not_found; break;
    case Outcome::inconclusive: rep.disposition = Disposition::inconclusive; break;
  }
  return std::nullopt;
}

/// Rewrites each record and hands it to `visit` in order; stops when visit
/// returns true.
inline bool walk(LowIndexResult const& found, std::vector<CosetTable> const& prefix, GroupPresentation const& parent,
                 SimplifyOptions const& rewrite, std::function<bool(Examined const&, int position)> const& visit) {
  int last_index = 0, position = 0;
  for (auto const& rec : found.subgroups) {
    position = rec.index() == last_index ? position + 1 : 1;
    last_index = rec.index();
    Examined e;
    e.chain = prefix;
    e.chain.push_back(rec.table);
    e.presentation = rewrite_subgroup(parent, rec.table, rewrite).presentation;
    e.invariants = abelian_invariants(e.presentation);
    if (visit(e, position)) return true;
  }
  return false;
}

}  // namespace detail

inline ProveResult prove_large(GroupPresentation const& g, DriverOptions const& opt = {}) {
  if (opt.max_index < 1) throw std::invalid_argument("max-index must be at least 1");
  ProveResult out;
  auto found = low_index_subgroups(g, 1, opt.max_index, {.normal_only = false, .node_budget = static_cast<std::int64_t>(opt.node_budget)});
  if (!found.complete) out.notes.push_back("subgroup enumeration stopped by the node budget");

  std::vector<detail::Examined> examined;
  bool out_of_time = false;
  auto visit = [&](detail::Examined const& e, int position) {
    SubgroupReport rep{detail::chain_indices(e.chain), position, e.invariants, e.presentation.ngens(),
                       e.presentation.nrels(), Disposition::not_found, {}};
    if (out.certified() && rep.index() != out.certificate->index()) return true;
    if (opt.deadline && std::chrono::steady_clock::now() >= *opt.deadline) {
      out.notes.push_back("time budget exhausted");
      return out_of_time = true;
    }
    auto cert = detail::examine(g, e, opt, rep);
    out.report.push_back(rep);
    examined.push_back(e);
    if (cert && out.certified()) {
      out.alternatives.push_back(std::move(*cert));
    } else if (cert) {
      out.certificate = std::move(cert);
    }
    return out.certified() && !opt.finish_index;
  };
  if (detail::walk(found, {}, g, opt.rewrite, visit) || out_of_time || out.certified()) return out;

  if (opt.descent_index < 2) return out;
  // most promising first: subgroups whose abelianisation needs the most generators
  auto parents = examined;
  std::stable_sort(parents.begin(), parents.end(), [](auto const& a, auto const& b) {
    return a.invariants.min_generators() > b.invariants.min_generators();
  });
  for (auto const& parent : parents) {
    auto normal = low_index_subgroups(parent.presentation, std::max(2, opt.descent_min_index), opt.descent_index,
                                      {.normal_only = true, .node_budget = static_cast<std::int64_t>(opt.node_budget)});
    if (!normal.complete) {
      out.notes.push_back("normal subgroup enumeration below " + format_chain(detail::chain_indices(parent.chain)) +
                          " stopped by the node budget");
    }
    if (parent.chain.size() == 1 && parent.chain[0].index() == 1) {
      // normal subgroups of G within max-index were already seen directly
      std::erase_if(normal.subgroups, [&](SubgroupRecord const& r) { return r.index() <= opt.max_index; });
    }
    if (detail::walk(normal, parent.chain, parent.presentation, opt.rewrite, visit) || out_of_time || out.certified()) {
      return out;
    }
  }
  return out;
}

/// Height-1 criterion for two-generator one-relator Magnus-form inputs:
/// large iff some finite-index subgroup has abelianisation needing at least
/// three generators.
inline ProveResult height1_mode(GroupPresentation const& g, int max_index, DriverOptions const& opt = {}) {
  if (height_one_pivot(g) < 0) {
    throw std::invalid_argument("height-1 mode needs a two-generator one-relator presentation of height 1");
  }
  if (max_index < 1) throw std::invalid_argument("max-index must be at least 1");
  ProveResult out;
  auto found = low_index_subgroups(g, 1, max_index, {.normal_only = false, .node_budget = static_cast<std::int64_t>(opt.node_budget)});
  if (!found.complete) out.notes.push_back("subgroup enumeration stopped by the node budget");
  detail::walk(found, {}, g, opt.rewrite, [&](detail::Examined const& e, int position) {
    SubgroupReport rep{detail::chain_indices(e.chain), position, e.invariants, e.presentation.ngens(),
                       e.presentation.nrels(), Disposition::small, {}};
    if (e.invariants.min_generators() >= 3) {
      rep.disposition = Disposition::certified;
      LargenessCertificate c;
      c.group = g;
      c.chain = e.chain;
      c.rewrite = opt.rewrite;
      c.witness = e.presentation;
      c.mode = CertificateMode::height1;
      c.invariants = e.invariants;
      detail::assert_verified(c);
      out.certificate = std::move(c);
    }
    out.report.push_back(rep);
    return out.certified();
  });
  return out;
}

}  // namespace largeness
