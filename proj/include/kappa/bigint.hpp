#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kappa {

/// Arbitrary-precision signed integer. All polynomial arithmetic in this
/// library is exact; BigInt is the coefficient type everywhere.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

/// Floor of the square root of a non-negative integer.
inline BigInt big_isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("big_isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = big_isqrt(n);
  return r * r == n;
}

/// Exact integer quotient; throws if the division leaves a remainder.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::invalid_argument("divexact: division by zero");
  BigInt q = a / b;
  if (q * b != a) throw std::logic_error("divexact: inexact integer division");
  return q;
}

// ---------------------------------------------------------------------------
// Machine-word modular arithmetic (moduli up to 2^63).

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

/// Primes below `bound`, ascending (simple sieve).
inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound <= 2) return out;
  std::vector<bool> sieve(bound, true);
  for (std::uint64_t i = 2; i < bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j < bound; j += i) sieve[j] = false;
  }
  return out;
}

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  // Brent's cycle variant with fixed seeds, deterministic.
  for (std::uint64_t c = 1; c < 64; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t power = 1, lam = 1;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      if (power == lam) { x = y; power <<= 1; lam = 0; }
      y = f(y);
      ++lam;
      std::uint64_t diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = std::gcd(diff, n);
    }
    if (d != 0 && d != 1 && d != n) return d;
  }
  throw std::runtime_error("pollard_brent: failed to split composite");
}

inline void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) { primes.push_back(n); return; }
  std::uint64_t d = pollard_brent(n);
  factor_rec(d, primes);
  factor_rec(n / d, primes);
}

}  // namespace detail

/// Prime factorisation of a positive 64-bit integer as (prime, exponent),
/// primes ascending.
inline std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero");
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    while (m % p == 0) { primes.push_back(p); m /= p; }
  }
  detail::factor_rec(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  }
  return out;
}

/// All positive divisors, ascending.
inline std::vector<std::uint64_t> divisors_u64(std::uint64_t n) {
  auto fac = factor_u64(n);
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : fac) {
    std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// True iff no prime square divides |n|. Inputs in this library are small
/// (constant terms of reduced polynomials, indices n), so factoring is cheap.
inline bool squarefree_integer(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("squarefree_integer: undefined for 0");
  BigInt m = abs(n);
  if (m > BigInt(std::uint64_t(1) << 62))
    throw std::invalid_argument("squarefree_integer: argument out of supported range");
  for (auto [p, e] : factor_u64(m.convert_to<std::uint64_t>()))
    if (e >= 2) return false;
  return true;
}

inline bool is_prime_square_u64(std::uint64_t n) {
  auto fac = factor_u64(n);
  return fac.size() == 1 && fac[0].second == 2;
}

}  // namespace kappa
