#include "largeness/corpus.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace largeness;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(std::string const& name) {
  auto dir = fs::temp_directory_path() / ("largeness-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(fs::path const& p, std::string const& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("corpus entries parse to cyclically reduced single relators") {
  std::set<std::string> ids;
  for (auto const& e : corpus()) {
    INFO(e.id);
    CHECK(ids.insert(e.id).second);
    auto p = e.presentation();
    REQUIRE(p.nrels() == 1);
    auto const& r = p.relators()[0];
    CHECK(cyclic_reduce(r) == r);
    CHECK(r.length() == e.word_length);
  }
  CHECK(corpus().size() == 29 + 16 + 8 + 21 + 1);
}

TEST_CASE("corpus expectations") {
  int large = 0, not_large = 0, unknown = 0;
  for (auto const& e : corpus()) {
    switch (e.expected) {
      case Expected::large: ++large; break;
      case Expected::not_large: ++not_large; break;
      case Expected::unknown: ++unknown; break;
    }
  }
  CHECK(unknown == 2);
  CHECK(not_large == 25 + 1 + 1);
  CHECK(large == 2 + 16 + 8 + 20);
  CHECK(corpus_entry("T1#25").expected == Expected::unknown);
  CHECK(corpus_entry("T3-18#21").expected == Expected::not_large);
  CHECK_THROWS_AS(corpus_entry("T9#1"), std::out_of_range);
}

TEST_CASE("r0 is a product of commutators with the stated shape") {
  auto const& e = corpus_entry("r0");
  auto p = e.presentation();
  CHECK(p.names() == std::vector<std::string>{"x", "y"});
  auto inv = abelian_invariants(p);
  CHECK(inv.rank == 2);
  CHECK(inv.torsion.empty());
}

TEST_CASE("parametric families") {
  auto bs = gen_bs(2, 4);
  CHECK(format_presentation(bs) == "gens a t\nrel ta2TA4\n");
  CHECK(format_presentation(gen_bs(1, 1)) == "gens a t\nrel taTA\n");
  CHECK_THROWS_AS(gen_bs(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_dklm(1, 0, 2), std::invalid_argument);

  // named table rows have the abelianisation of the family member
  CHECK(abelian_invariants(gen_bs(2, -3)) == abelian_invariants(corpus_entry("T1#1").presentation()));
  CHECK(abelian_invariants(gen_bs(3, 4)) == abelian_invariants(corpus_entry("T1#9").presentation()));
  CHECK(abelian_invariants(gen_bs(2, -7)) == abelian_invariants(corpus_entry("T1#21").presentation()));
  CHECK(abelian_invariants(gen_dklm(2, 1, 2)) == abelian_invariants(corpus_entry("T1#6").presentation()));
  CHECK(abelian_invariants(gen_dklm(1, 2, 3)) == abelian_invariants(corpus_entry("T1#12").presentation()));
  CHECK(abelian_invariants(gen_dklm(3, 2, 1)) == abelian_invariants(corpus_entry("T1#17").presentation()));

  auto d = gen_dklm(1, 1, 1);
  CHECK(d.relators()[0].length() == 8);
}

TEST_CASE("positive Betti screening") {
  auto c5 = parse_presentation("gens a; rel a5");
  auto s3 = parse_presentation("gens a b; rel a2; rel b3; rel abab");
  auto a5 = parse_presentation("gens a b; rel a2; rel b3; rel ababababab");
  CHECK(betti_prefilter_mode(c5).answer == Answer::no);
  CHECK(betti_prefilter_mode(s3).answer == Answer::no);
  CHECK(betti_prefilter_mode(a5).answer == Answer::no);

  // a finite abelianisation with an index-2 subgroup mapping onto Z
  auto k = parse_presentation("gens a b; rel a2; rel b2");
  auto r = betti_prefilter_mode(k, 3);
  CHECK(r.answer == Answer::yes);
  CHECK(r.index == 2);
  CHECK(betti_prefilter_mode(k, 1).answer == Answer::no);

  for (auto const& e : corpus()) {
    auto s = betti_prefilter_mode(e.presentation());
    CHECK(s.answer == Answer::yes);
    CHECK(s.index == 1);
  }
}

TEST_CASE("batch runs keep input order and isolate bad inputs") {
  auto dir = scratch_dir("batch");
  std::vector<fs::path> paths;
  for (auto const& [name, text] : std::vector<std::pair<std::string, std::string>>{
           {"bs24", "gens a t\nrel ta2TA4\n"},
           {"broken", "gens a t\nrel t?a\n"},
           {"bs23", "gens a t\nrel ta2TA3\n"},
           {"bs36", "gens a t\nrel ta3TA6\n"}}) {
    paths.push_back(dir / (name + ".pres"));
    write_file(paths.back(), text);
  }
  paths.push_back(dir / "missing.pres");

  BatchOptions opt;
  opt.driver.max_index = 3;
  opt.certificate_dir = dir;
  opt.workers = 3;
  auto a = batch_run(paths, opt);
  REQUIRE(a.items.size() == paths.size());
  CHECK(a.items[0].status == "certified");
  CHECK(a.items[1].status == "error");
  CHECK(a.items[1].detail.find("parse error") != std::string::npos);
  CHECK(a.items[2].status == "unknown");
  CHECK(a.items[3].status == "certified");
  CHECK(a.items[4].status == "error");
  CHECK(a.counts().at("certified") == 2);

  std::ifstream in(a.items[0].certificate_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(verify_certificate(parse_certificate(text)).ok);

  opt.workers = 1;
  opt.certificate_dir.clear();
  auto b = batch_run(paths, opt);
  for (std::size_t i = 0; i < paths.size(); ++i) CHECK(a.items[i].status == b.items[i].status);

  CHECK(batch_run({}, opt).items.empty());
  CHECK(format_batch_report(batch_run({}, opt)) == "largeness-batch v1\ntotals\n");

  opt.mode = BatchMode::betti_prefilter;
  auto s = batch_run({paths[0]}, opt);
  CHECK(s.items[0].status == "yes");
  CHECK_THROWS_AS(parse_batch_mode("bogus"), std::invalid_argument);
  fs::remove_all(dir);
}
