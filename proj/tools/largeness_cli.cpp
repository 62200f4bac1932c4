// Command-line front end.  Exit codes: 0 certified / verified / yes,
// 1 unknown / not verified / no, 2 usage or input error.

#include "largeness/corpus.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

using namespace largeness;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr int exit_success = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

std::string read_file(fs::path const& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(fs::path const& p, std::string const& text) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

json invariants_json(AbelianInvariants const& inv) {
  json torsion = json::array();
  for (auto const& d : inv.torsion) torsion.push_back(to_string(d));
  return {{"rank", inv.rank}, {"torsion", torsion}};
}

json report_json(ProveResult const& r) {
  json j{{"format", "largeness-report"}, {"version", 1}, {"result", r.certified() ? "certified" : "unknown"}};
  if (r.certified()) {
    auto const& c = *r.certificate;
    j["witness"] = {{"index", c.index()},
                    {"chain", detail::chain_indices(c.chain)},
                    {"invariants", invariants_json(c.invariants)},
                    {"mode", c.mode == CertificateMode::alexander ? "alexander" : "height1"}};
    if (c.mode == CertificateMode::alexander) {
      j["witness"]["chi"] = c.chi;
      j["witness"]["modulus"] = to_string(c.modulus);
    }
  }
  j["notes"] = r.notes;
  j["subgroups"] = json::array();
  for (auto const& s : r.report) {
    j["subgroups"].push_back({{"chain", s.chain},
                              {"position", s.position},
                              {"invariants", invariants_json(s.invariants)},
                              {"generators", s.generators},
                              {"relators", s.relators},
                              {"disposition", to_string(s.disposition)},
                              {"detail", s.detail}});
  }
  return j;
}

json batch_json(BatchReport const& r) {
  json j{{"format", "largeness-batch"}, {"version", 1}, {"items", json::array()}};
  for (auto const& i : r.items) {
    j["items"].push_back(
        {{"input", i.input}, {"status", i.status}, {"detail", i.detail}, {"certificate", i.certificate_path}});
  }
  j["totals"] = r.counts();
  return j;
}

// Writes the text report to stdout and, when asked, text plus JSON to disk.
void emit_report(ProveResult const& r, std::string const& report_out, std::string const& cert_out) {
  auto text = format_report(r);
  std::cout << text;
  if (!report_out.empty()) {
    write_file(report_out, text);
    write_file(report_out + ".json", report_json(r).dump(2) + "\n");
  }
  if (!cert_out.empty() && r.certified()) write_file(cert_out, format_certificate(*r.certificate));
}

std::pair<int, int> parse_range(std::string const& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (std::logic_error const&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + s + "'");
  }
}

ChiVector parse_chi(std::string const& s) {
  ChiVector chi;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');) chi.push_back(std::stoll(part));
  return chi;
}

int run_alexander(GroupPresentation const& g, std::string const& chi_text, std::optional<std::int64_t> modulus) {
  auto b = alexander_matrix(g);
  std::cout << "invariants " << format_invariants(b.invariants) << '\n';
  std::cout << "matrix " << b.rows() << 'x' << b.cols() << '\n';
  ChiVector chi = chi_text.empty() ? ChiVector{} : parse_chi(chi_text);
  if (chi.empty() && b.rank() == 1) chi = {1};
  if (!chi.empty() && static_cast<int>(chi.size()) != b.rank()) {
    throw std::invalid_argument("chi needs " + std::to_string(b.rank()) + " components");
  }

  int shown = 0;
  if (chi.empty()) {
    int j = 0;
    while (j < b.cols() && std::all_of(b.images[static_cast<std::size_t>(j)].begin(),
                                       b.images[static_cast<std::size_t>(j)].end(), [](auto v) { return v == 0; })) {
      ++j;
    }
    if (j == b.cols()) throw std::invalid_argument("no generator has infinite-order image");
    for_each_minor_spec(b.rows(), b.cols(), j, [&](MinorSpec const& spec) {
      std::cout << "reduced minor " << format_minor_spec(spec) << " : "
                << format_poly(unit_normalized(extract_reduced_minor(b, spec))) << '\n';
      return ++shown < 10;
    });
  } else {
    int j = first_column_with_image(b, chi);
    if (j < 0) throw std::invalid_argument("chi is trivial on every generator");
    auto ev = evaluate_matrix(b, chi);
    // rank >= 2: the minor carries 1 - x_j; rank 1: (1 - x^a)/(1 - x) with x_j = x^a
    auto divisor = UniPoly::one_minus_power(chi_image(b, chi, j));
    if (b.rank() == 1) {
      auto a = b.images[static_cast<std::size_t>(j)][0];
      divisor = evaluate_to_uni(LaurentPoly::from_uni(geometric_factor(a)), chi);
    }
    for_each_minor_spec(b.rows(), b.cols(), j, [&](MinorSpec const& spec) {
      auto reduced = exact_div(minor(ev, spec), divisor);
      std::cout << "reduced minor " << format_minor_spec(spec) << " at chi " << detail::format_chi(chi) << " : "
                << format_poly(unit_normalized(reduced)) << '\n';
      return ++shown < 10;
    });
  }
  if (chi.empty()) return exit_success;

  auto check = verify_chi(b, chi);
  std::cout << "vanishes modulo";
  if (check.moduli.empty()) std::cout << " nothing";
  for (auto const& m : check.moduli) std::cout << ' ' << m;
  std::cout << '\n';
  if (!modulus) return check.moduli.empty() ? exit_negative : exit_success;
  bool vanishes = std::any_of(check.moduli.begin(), check.moduli.end(),
                              [&](BigInt const& m) { return m == 0 || m == *modulus; });
  std::cout << "modulo " << *modulus << ": " << (vanishes ? "zero" : "non-zero") << '\n';
  return vanishes ? exit_success : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largeness certificates for finitely presented groups"};
  app.require_subcommand(1);
  int status = exit_success;

  std::string file, cert_out, report_out, descent, chi, index_range, mode, cert_dir;
  int max_index = 6;
  double time_budget = 0, subgroup_seconds = 0;
  bool prefilter = false, no_prefilter = false, abelian = false, normal_only = false;
  std::optional<std::int64_t> modulus;
  unsigned workers = 1;

  auto* prove = app.add_subcommand("prove-large", "search for a largeness certificate");
  prove->add_option("FILE", file, "presentation file")->required()->check(CLI::ExistingFile);
  prove->add_option("--max-index", max_index, "largest subgroup index to scan")->capture_default_str();
  prove->add_option("--descent", descent, "normal subgroups of each scanned subgroup, index N or A..B");
  prove->add_flag("--prefilter", prefilter, "always run the cyclic-cover rank prefilter");
  prove->add_flag("--no-prefilter", no_prefilter, "never run the prefilter (default: only for rank >= 3)");
  prove->add_option("--time-budget", time_budget, "seconds for the vanish searches, checked between subgroups");
  prove->add_option("--subgroup-seconds", subgroup_seconds, "seconds per subgroup");
  prove->add_option("--cert-out", cert_out, "write the certificate here");
  prove->add_option("--report-out", report_out, "write the report here, with JSON alongside");

  auto* height1 = app.add_subcommand("height1", "height-1 criterion for two-generator one-relator inputs");
  height1->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  height1->add_option("--max-index", max_index)->capture_default_str();
  height1->add_option("--cert-out", cert_out);
  height1->add_option("--report-out", report_out);

  auto* alexander = app.add_subcommand("alexander", "Alexander matrix minors, optionally at a homomorphism chi");
  alexander->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  alexander->add_option("--chi", chi, "comma-separated images of the free abelianisation basis");
  alexander->add_option("--mod", modulus, "report whether the polynomial vanishes modulo p");

  auto* subgroups = app.add_subcommand("subgroups", "conjugacy classes of subgroups by index");
  subgroups->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  subgroups->add_option("--index", index_range, "N or A..B")->required();
  subgroups->add_flag("--abelian", abelian, "rewrite each subgroup and print its abelian invariants");
  subgroups->add_flag("--normal-only", normal_only);

  auto* screen = app.add_subcommand("betti-prefilter", "is there a subgroup of small index mapping onto Z");
  screen->add_option("FILE", file)->required()->check(CLI::ExistingFile);
  screen->add_option("--max-index", max_index)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "replay a certificate");
  verify->add_option("CERT", file)->required()->check(CLI::ExistingFile);

  auto* batch = app.add_subcommand("batch", "run every *.pres file in a directory");
  batch->add_option("DIR", file)->required()->check(CLI::ExistingDirectory);
  batch->add_option("--mode", mode, "prove-large, height1 or betti-prefilter")->required();
  batch->add_option("--max-index", max_index)->capture_default_str();
  batch->add_option("--workers", workers)->capture_default_str();
  batch->add_option("--cert-dir", cert_dir, "write certificates here");
  batch->add_option("--report-out", report_out);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_success : exit_error;
  }

  try {
    DriverOptions opt;
    opt.max_index = max_index;

    if (*prove) {
      if (prefilter && no_prefilter) throw std::invalid_argument("--prefilter and --no-prefilter conflict");
      if (prefilter) opt.prefilter = true;
      if (no_prefilter) opt.prefilter = false;
      if (!descent.empty()) std::tie(opt.descent_min_index, opt.descent_index) = parse_range(descent);
      opt.subgroup_seconds = subgroup_seconds;
      if (time_budget > 0) {
        opt.deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                              std::chrono::duration<double>(time_budget));
      }
      auto r = prove_large(parse_presentation(read_file(file)), opt);
      emit_report(r, report_out, cert_out);
      status = r.certified() ? exit_success : exit_negative;
    } else if (*height1) {
      auto r = height1_mode(parse_presentation(read_file(file)), max_index, opt);
      emit_report(r, report_out, cert_out);
      status = r.certified() ? exit_success : exit_negative;
    } else if (*alexander) {
      status = run_alexander(parse_presentation(read_file(file)), chi, modulus);
    } else if (*subgroups) {
      auto g = parse_presentation(read_file(file));
      auto [lo, hi] = parse_range(index_range);
      auto found = low_index_subgroups(g, lo, hi, {.normal_only = normal_only});
      int last = 0, position = 0;
      for (auto const& rec : found.subgroups) {
        position = rec.index() == last ? position + 1 : 1;
        last = rec.index();
        std::cout << "index " << rec.index() << " #" << position << (is_normal_table(rec.table) ? " normal" : "");
        if (abelian) std::cout << ' ' << format_invariants(abelian_invariants(rewrite_subgroup(g, rec.table).presentation));
        std::cout << '\n';
      }
      std::cout << found.subgroups.size() << " classes" << (found.complete ? "" : " (stopped by the node budget)") << '\n';
    } else if (*screen) {
      auto r = betti_prefilter_mode(parse_presentation(read_file(file)), max_index);
      std::cout << to_string(r.answer);
      if (r.answer == Answer::yes) std::cout << " at index " << r.index;
      std::cout << '\n';
      status = r.answer == Answer::yes ? exit_success : exit_negative;
    } else if (*verify) {
      auto v = verify_certificate(parse_certificate(read_file(file)));
      std::cout << (v.ok ? "verified" : "not verified") << '\n';
      for (auto const& m : v.mismatches) std::cout << "mismatch " << m << '\n';
      status = v.ok ? exit_success : exit_negative;
    } else if (*batch) {
      BatchOptions bo;
      bo.mode = parse_batch_mode(mode);
      bo.driver = opt;
      bo.workers = workers;
      bo.certificate_dir = cert_dir;
      std::vector<fs::path> paths;
      for (auto const& entry : fs::directory_iterator(file)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pres") paths.push_back(entry.path());
      }
      std::sort(paths.begin(), paths.end());
      auto r = batch_run(paths, bo);
      auto text = format_batch_report(r);
      std::cout << text;
      if (!report_out.empty()) {
        write_file(report_out, text);
        write_file(report_out + ".json", batch_json(r).dump(2) + "\n");
      }
      status = r.counts().count("error") ? exit_error : exit_success;
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return status;
}
