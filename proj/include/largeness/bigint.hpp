#pragma once

// Arbitrary precision integers and the small amount of elementary number
// theory the rest of the library needs (gcds, prime factorisation).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace largeness {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_big(BigInt const& a) { return a < 0 ? BigInt(-a) : a; }

/// Non-negative gcd; gcd(0, 0) == 0.
inline BigInt gcd_big(BigInt const& a, BigInt const& b) {
  return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::string to_string(BigInt const& a) { return a.str(); }

/// Mathematical mod, result in [0, m).
inline BigInt mod_floor(BigInt const& a, BigInt const& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
inline BigInt inverse_mod(BigInt const& a, BigInt const& m) {
  BigInt r0 = m, r1 = mod_floor(a, m);
  BigInt s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return 0;
  return mod_floor(s0, m);
}

inline bool is_prime(BigInt const& n) {
  if (n < 2) return false;
  static std::mt19937 rng(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 25, rng);
}

namespace detail {

inline BigInt pollard_rho(BigInt const& n) {
  if (n % 2 == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](BigInt const& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd_big(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(BigInt n, std::vector<BigInt>& out) {
  if (n < 2) return;
  for (unsigned p = 2; p < 10000; ++p) {
    if (BigInt(p) * p > n) break;
    while (n % p == 0) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n < 2) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Distinct prime divisors of |n| in increasing order (empty for 0, +-1).
inline std::vector<BigInt> prime_divisors(BigInt const& n) {
  std::vector<BigInt> fs;
  detail::factor_into(abs_big(n), fs);
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

/// Largest divisor of |n| built only from primes dividing |m| (m != 0).
inline BigInt restrict_to_primes_of(BigInt n, BigInt const& m) {
  n = abs_big(n);
  if (n == 0) return 0;
  BigInt result = 1;
  BigInt g = gcd_big(n, m);
  while (g > 1) {
    result *= g;
    n /= g;
    g = gcd_big(n, g);
  }
  return result;
}

}  // namespace largeness
