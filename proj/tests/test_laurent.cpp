#include "largeness/determinant.hpp"
#include "support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace largeness;
using namespace largeness::testing;

namespace {

LaurentPoly P(std::string_view s, int nvars) { return parse_poly(s, nvars); }

}  // namespace

TEST_CASE("arithmetic and exact division") {
  CHECK(P("1 - t2", 2) * P("1 + t2", 2) == P("1 - t2^2", 2));
  CHECK(exact_div(P("1 - t2^2", 2), P("1 - t2", 2)) == P("1 + t2", 2));
  CHECK_THROWS_AS(exact_div(P("1 - t2^2", 2), P("1 - t1", 2)), DivisionNotExact);
  CHECK(exact_div(UniPoly(0, {1, 0, -1}), UniPoly(0, {1, -1})) == UniPoly(0, {1, 1}));
  CHECK_THROWS_AS(exact_div(UniPoly(0, {1, 0, 1}), UniPoly(0, {1, -1})), DivisionNotExact);
  CHECK(exact_div(UniPoly(-3, {2, 4}), UniPoly(5, {1, 2})) == UniPoly(-8, {2}));
}

TEST_CASE("exact division inverts multiplication on random Laurent polynomials") {
  std::mt19937 rng(4);
  for (int i = 0; i < 100; ++i) {
    int b = 1 + i % 3;
    auto f = random_poly(rng, b, 1 + i % 5, 3, 5);
    auto g = random_poly(rng, b, 1 + i % 4, 3, 5);
    if (g.is_zero()) continue;
    CHECK(exact_div(f * g, g) == f);
  }
}

TEST_CASE("content") {
  CHECK(content(UniPoly(0, {-4, 2})) == 2);
  CHECK(content(P("t1^3*t2^-2", 2)) == 1);
  CHECK(content(LaurentPoly(2)) == 0);
}

TEST_CASE("Gauss lemma on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(rng, 2, 1 + i % 4, 2, 12);
    auto g = random_poly(rng, 2, 1 + i % 3, 2, 12);
    CHECK(content(f * g) == content(f) * content(g));
  }
}

TEST_CASE("evaluate chi") {
  CHECK(evaluate_chi(P("1 - t1 + t1^2*t2", 2), {1, 2}) == P("1 - t + t^4", 1));
  CHECK(evaluate_chi(P("t1 - t2", 2), {1, 1}).is_zero());
  CHECK(evaluate_chi(P("1 - t2^2", 2), {0, 1}) == P("1 - t^2", 1));
}

TEST_CASE("evaluate chi is a ring homomorphism") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> k(-4, 4);
  for (int i = 0; i < 200; ++i) {
    int b = 1 + i % 4;
    auto f = random_poly(rng, b, 4, 3, 6);
    auto g = random_poly(rng, b, 3, 3, 6);
    std::vector<std::int64_t> chi(static_cast<std::size_t>(b));
    for (auto& x : chi) x = k(rng);
    CHECK(evaluate_to_uni(f * g, chi) == evaluate_to_uni(f, chi) * evaluate_to_uni(g, chi));
    CHECK(evaluate_to_uni(f + g, chi) == evaluate_to_uni(f, chi) + evaluate_to_uni(g, chi));
  }
}

TEST_CASE("wrap examples") {
  auto f = P("1 - t1 + t1^2 - t1^3", 2);
  CHECK(wrap(f, 0, 2) == P("2 - 2*t1", 2));
  CHECK(wrap(P("1 - t1^2", 2), 0, 2).is_zero());
  CHECK(wrap(P("1 - t1^2", 2), 0, 4) == P("1 - t1^2", 2));
  CHECK(wrap(UniPoly(0, {1, -1, 1, -1}), 2) == UniPoly(0, {2, -2}));
  CHECK(wrap(UniPoly(3, {1, 0, -1}), 2).is_zero());
}

TEST_CASE("wrapping with the other variable kept is not a valid test") {
  // y - x^2 vanishes at chi = (1, 2) although its x-wrap mod 2 keeps y - 1.
  auto f = P("t2 - t1^2", 2);
  CHECK(evaluate_chi(f, {1, 2}).is_zero());
  CHECK_FALSE(wrap(f, 0, 2).is_zero());
  // Setting y = 1 first gives the sound test.
  CHECK(wrap(evaluate_to_uni(f, {1, 0}), 2).is_zero());
}

TEST_CASE("wrap soundness by sampling: vanishing at (l, m) forces the wrap of f(x, 1) at |m|") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> k(-6, 6);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    auto h = random_poly(rng, 2, 3, 2, 4);
    // Build f with a built-in zero at some chi = (l, m).
    std::int64_t l = k(rng), m = k(rng);
    if (m == 0 || gcd_i64(l, m) != 1) continue;
    BigInt modulus = (i % 3 == 0) ? BigInt(0) : BigInt(i % 3 == 1 ? 2 : 3);
    Exponents a{m, -l};  // chi . a == 0
    auto vanishing = (LaurentPoly::monomial(a) - LaurentPoly::constant(2, 1)) * h;
    auto f = vanishing + random_poly(rng, 2, 2, 2, 3).scaled(modulus);
    auto at_chi = evaluate_to_uni(f, {l, m});
    REQUIRE(vanishes_mod(at_chi, modulus));
    auto fx1 = evaluate_to_uni(f, {1, 0});
    for (std::int64_t q = 1; q <= std::llabs(m); ++q) {
      if (std::llabs(m) % q != 0) continue;
      CHECK(vanishes_mod(wrap(fx1, q), modulus));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("box examples") {
  auto f = P("1 + t1 + t2 + t3", 3);
  auto boxed = box(f, 2);
  int vanishing = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        if (a + b + c == 0) continue;
        bool v = content(evaluate_boxed(boxed, {a, b, c}, 2)) % 2 == 0;
        CHECK(v == (a + b + c == 2));
        vanishing += v;
      }
    }
  }
  CHECK(vanishing == 3);
  CHECK(box(P("t^2 - 1", 1), 2).is_zero());
  CHECK(box(P("t^3 - t", 1), 2).is_zero());
  auto g = box(P("t1 - t2", 3), 2);
  CHECK(evaluate_boxed(g, {1, 1, 0}, 2).is_zero());
  CHECK(evaluate_boxed(g, {1, 1, 1}, 2).is_zero());
  CHECK(evaluate_boxed(g, {0, 0, 1}, 2).is_zero());
  CHECK_FALSE(evaluate_boxed(g, {1, 0, 0}, 2).is_zero());
}

TEST_CASE("box soundness by sampling") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> k(-5, 5);
  for (int i = 0; i < 600; ++i) {
    std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[static_cast<std::size_t>(i % 4)];
    std::vector<std::int64_t> chi{k(rng), k(rng), k(rng)};
    auto h = random_poly(rng, 3, 3, 2, 4);
    Exponents a{chi[1], -chi[0], 0};
    auto f = (LaurentPoly::monomial(a) - LaurentPoly::constant(3, 1)) * h
             + random_poly(rng, 3, 2, 2, 3).scaled(p);
    REQUIRE(content(evaluate_to_uni(f, chi)) % p == 0);
    CHECK(content(evaluate_boxed(box(f, p), chi, p)) % p == 0);
    // the boxed image is the reduction of f(chi) modulo t^p - 1
    auto at_chi = evaluate_to_uni(f, chi);
    std::vector<BigInt> folded(static_cast<std::size_t>(p));
    for (std::int64_t e = at_chi.low(); !at_chi.is_zero() && e <= at_chi.high(); ++e) {
      folded[static_cast<std::size_t>(mod_floor(e, p))] += at_chi.coeff(e);
    }
    CHECK(evaluate_boxed(box(f, p), chi, p) == UniPoly(0, folded));
  }
}

TEST_CASE("unit normalization") {
  auto f = P("-t1^-2*t2 + 3*t1^-1", 2);
  auto n = unit_normalized(f);
  CHECK(n == P("t2 - 3*t1", 2));
  CHECK(n.terms().front().coeff > 0);
  CHECK(unit_normalized(f.shifted({5, -3})) == n);
  CHECK(unit_normalized(-f) == n);
  CHECK(unit_normalized(UniPoly(-4, {-2, 1})) == UniPoly(0, {2, -1}));
}

TEST_CASE("text round trip") {
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    int b = 1 + i % 3;
    auto f = random_poly(rng, b, i % 6, 4, 30);
    CHECK(parse_poly(format_poly(f), b) == f);
  }
  CHECK(format_poly(P("2*t - 4", 1)) == "-4 + 2*t");
}

TEST_CASE("determinant examples") {
  PolyMatrix<LaurentPoly> m{{P("1 - t2", 2), P("t1 - 1", 2)}, {LaurentPoly(2), P("2", 2)}};
  CHECK(determinant(m) == P("2 - 2*t2", 2));
  PolyMatrix<LaurentPoly> one{{P("t1 + 3", 2)}};
  CHECK(determinant(one) == P("t1 + 3", 2));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 5;
    PolyMatrix<UniPoly> u(n, std::vector<UniPoly>(n));
    PolyMatrix<LaurentPoly> mv(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto f = random_poly(rng, 1, 3, 3, 5);
        u[i][j] = evaluate_to_uni(f, {1});
        mv[i][j] = random_poly(rng, 2, trial % 3 + 1, 1, 3);
      }
    }
    if (trial % 6 == 0 && n > 1) u[n - 1] = u[0];
    CHECK(determinant(u) == cofactor_det(u, UniPoly::constant(1)));
    CHECK(determinant(mv) == cofactor_det(mv, LaurentPoly::constant(2, 1)));
  }
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix<LaurentPoly> a(3, std::vector<LaurentPoly>(3)), b = a;
    for (auto* m : {&a, &b}) {
      for (auto& row : *m) {
        for (auto& e : row) e = random_poly(rng, 2, 2, 1, 3);
      }
    }
    PolyMatrix<LaurentPoly> ab(3, std::vector<LaurentPoly>(3, LaurentPoly(2)));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) ab[i][j] = ab[i][j] + a[i][k] * b[k][j];
      }
    }
    CHECK(determinant(ab) == determinant(a) * determinant(b));
  }
}

TEST_CASE("prime-field coefficients") {
  auto f = parse_poly("3*t + 5", 1, 7);
  CHECK(f == parse_poly("3*t - 2", 1, 7));
  auto g = parse_poly("t + 1", 1, 7);
  CHECK(exact_div(f * g, g) == f);
  PolyMatrix<LaurentPoly> m{{f, g}, {g, f}};
  CHECK(determinant(m) == f * f - g * g);
}
