#include "largeness/smith.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace largeness;
using namespace largeness::testing;

namespace {

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), k(-3, 3);
  for (int s = 0; s < 12 && n > 1; ++s) {
    auto a = static_cast<std::size_t>(pick(rng)), b = static_cast<std::size_t>(pick(rng));
    if (a == b) continue;
    u.add_row(a, b, k(rng));
    if (s % 4 == 0) u.swap_rows(a, b);
  }
  return u;
}

}  // namespace

TEST_CASE("smith form examples") {
  CHECK(smith_normal_form(IntMatrix{{2, 4}, {-2, 2}}).diagonal == std::vector<BigInt>{2, 6});
  CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<BigInt>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix{{0}}).diagonal == std::vector<BigInt>{0});
}

TEST_CASE("smith form agrees with the minor-gcd oracle") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    auto m = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 9);
    if (trial % 7 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2;
    }
    auto snf = smith_normal_form(m, Transforms::both);
    CHECK(snf.diagonal == minor_gcd_invariants(m));
    IntMatrix d(r, c);
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) d(i, i) = snf.diagonal[i];
    CHECK(snf.left * m * snf.right == d);
  }
}

TEST_CASE("smith invariants are stable under unimodular changes") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 2 + trial % 4, c = 2 + (trial / 4) % 4;
    auto m = random_matrix(rng, r, c, 6);
    auto base = smith_normal_form(m).diagonal;
    auto moved = random_unimodular(rng, r) * m * random_unimodular(rng, c);
    CHECK(smith_normal_form(moved).diagonal == base);
  }
}

TEST_CASE("abelian invariants of presentations") {
  auto bs = parse_presentation("gens a t; rel ta2TA4");
  auto inv = abelian_invariants(bs);
  CHECK(inv.rank == 1);
  CHECK(inv.torsion == std::vector<BigInt>{2});

  auto z2 = abelian_invariants(parse_presentation("gens x y; rel xyXY"));
  CHECK(z2.rank == 2);
  CHECK(z2.torsion.empty());
  CHECK(z2.min_generators() == 2);

  auto c5 = abelian_invariants(parse_presentation("gens a; rel a5"));
  CHECK(c5.rank == 0);
  CHECK(c5.torsion == std::vector<BigInt>{5});
}

TEST_CASE("abelian invariants ignore conjugating a relator") {
  auto p = parse_presentation("gens a b t; rel ta2TA4b; rel bab2Ab");
  auto q = parse_presentation("gens a b t; rel tta2TA4bT; rel bab2Ab");
  CHECK(abelian_invariants(p) == abelian_invariants(q));
}

TEST_CASE("p-rank") {
  AbelianInvariants a{1, {2, 2, 2}};
  CHECK(p_rank(a, 2) == 4);
  CHECK(p_rank(a, 3) == 1);
  AbelianInvariants b{4, {2, 2, 4, 4, 4}};
  CHECK(p_rank(b, 2) == 9);
}

TEST_CASE("free abelianisation images span Hom(G, Z)") {
  auto p = parse_presentation("gens a b t; rel ta2TA4; rel abAB");
  auto fa = free_abelianisation(p);
  CHECK(fa.invariants.rank == 2);
  // every relator maps to zero
  for (auto const& r : p.relators()) {
    auto sums = exponent_sums(r, p.ngens());
    for (int k = 0; k < fa.invariants.rank; ++k) {
      std::int64_t s = 0;
      for (int g = 0; g < p.ngens(); ++g) s += sums[static_cast<std::size_t>(g)] * fa.images[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)];
      CHECK(s == 0);
    }
  }
  // a is torsion in the abelianisation, so it maps to 0
  CHECK(fa.images[0] == std::vector<std::int64_t>{0, 0});
}
