#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kappa/bigint.hpp"
#include "kappa/int_poly.hpp"
#include "kappa/mod_poly.hpp"
#include "kappa/rational.hpp"

namespace kappa {

/// Parameters (a, n) of K_{a,n}(x) = x^n + (1-x)^n + a^n, n >= 2.
struct KFamilySpec {
  Rational a;
  int n;

  KFamilySpec(Rational a_, int n_) : a(std::move(a_)), n(n_) {
    if (n < 2) throw std::invalid_argument("KFamilySpec: n must be at least 2");
  }
};

/// Multiplicities of the trivial factors x, x-1, x^2-x+1 in K_n, together
/// with the content of K_n. Determined by n mod 6.
struct TrivialFactorLedger {
  int mult_x;
  int mult_xm1;
  int mult_cyc;
  BigInt content;
};

/// K-tilde_n: K_n with trivial factors and content removed.
struct KTildeRecord {
  int n;
  IntPoly poly;
  int d_n;
  int b_n;
  TrivialFactorLedger ledger;
};

namespace detail {

inline std::vector<BigInt> binomial_row(int n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row[k] = divexact(row[k - 1] * (n - k + 1), BigInt(k));
  return row;
}

}  // namespace detail

/// den^n * K_{a,n} = den^n x^n + den^n (1-x)^n + num^n, the minimal integer
/// multiple clearing the denominator of a = num/den. Leading terms cancel
/// for odd n, so the degree is n for even n and n-1 for odd n.
inline IntPoly k_general(const KFamilySpec& spec) {
  int n = spec.n;
  BigInt dn = big_pow(spec.a.den, n);
  BigInt an = big_pow(spec.a.num, n);
  auto binom = detail::binomial_row(n);
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[n] += dn;
  for (int k = 0; k <= n; ++k) {
    // (1-x)^n term: C(n,k) (-1)^k x^k
    BigInt t = dn * binom[k];
    c[k] += (k % 2) ? -t : t;
  }
  c[0] += an;
  return IntPoly(std::move(c));
}

/// K_n = K_{-1,n}.
inline IntPoly k_poly(int n) { return k_general(KFamilySpec(Rational(-1), n)); }

/// Trivial factor multiplicities by the six residues of n mod 6, plus the
/// content of K_n (no closed content formula is assumed; it is computed).
inline TrivialFactorLedger trivial_multiplicities(int n) {
  if (n < 2) throw std::invalid_argument("trivial_multiplicities: n must be at least 2");
  static constexpr std::array<std::array<int, 3>, 6> table{{
      {0, 0, 0}, {1, 1, 2}, {0, 0, 1}, {1, 1, 0}, {0, 0, 2}, {1, 1, 1},
  }};
  const auto& m = table[n % 6];
  return TrivialFactorLedger{m[0], m[1], m[2], content(k_poly(n))};
}

/// Degree of K-tilde_n from the closed formula.
inline int d_n_formula(int n) {
  if (n < 2) throw std::invalid_argument("d_n_formula: n must be at least 2");
  return (n % 6 == 1) ? n - 7 : 6 * (n / 6);
}

/// Exact removal of the trivial factors and the content from K_n, with zero
/// remainders asserted and the degree checked against the closed formula.
inline KTildeRecord k_tilde(int n) {
  TrivialFactorLedger ledger = trivial_multiplicities(n);
  IntPoly p = k_poly(n);
  p = divexact_scalar(p, ledger.content);
  IntPoly x{0, 1}, xm1{-1, 1}, cyc{1, -1, 1};
  for (int i = 0; i < ledger.mult_x; ++i) p = divexact_monic(p, x);
  for (int i = 0; i < ledger.mult_xm1; ++i) p = divexact_monic(p, xm1);
  for (int i = 0; i < ledger.mult_cyc; ++i) p = divexact_monic(p, cyc);
  int d = d_n_formula(n);
  if (p.degree() != d) throw std::logic_error("k_tilde: degree mismatch with closed formula");
  if (d % 6 != 0) throw std::logic_error("k_tilde: degree not divisible by 6");
  if (content(p) != 1) throw std::logic_error("k_tilde: result not primitive");
  return KTildeRecord{n, std::move(p), d, d / 6, std::move(ledger)};
}

/// True iff gcd(P, P') has degree zero. A single good prime certifies the
/// coprime case; otherwise the exact subresultant gcd decides.
inline bool is_squarefree_poly(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_squarefree_poly: zero polynomial");
  if (p.degree() == 0) return true;
  IntPoly dp = p.derivative();
  if (coprime_certificate_modp(p, dp)) return true;
  return subresultant_gcd(p, dp).degree() == 0;
}

/// All rational roots, via the rational-root theorem: candidates num/den
/// with num dividing the trailing coefficient and den dividing the leading
/// one, each candidate verified by exact evaluation. Sorted ascending.
inline std::vector<Rational> rational_root_scan(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_root_scan: zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() == 0) return roots;

  // Strip powers of x: zero is a root iff the constant term vanishes.
  std::size_t low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<BigInt> rest(p.coeffs().begin() + low, p.coeffs().end());
  IntPoly q(std::move(rest));
  if (q.degree() == 0) return roots;

  BigInt trail = abs(q.coeff(0)), lead = abs(q.lc());
  const BigInt cap(std::uint64_t(1) << 62);
  if (trail > cap || lead > cap)
    throw std::invalid_argument("rational_root_scan: coefficients out of supported factoring range");
  auto nums = divisors_u64(trail.convert_to<std::uint64_t>());
  auto dens = divisors_u64(lead.convert_to<std::uint64_t>());

  // Cauchy bound on root magnitude prunes the candidate grid.
  double maxratio = 0;
  double lcd = abs(q.lc()).convert_to<double>();
  for (const BigInt& c : q.coeffs()) maxratio = std::max(maxratio, abs(c).convert_to<double>() / lcd);
  double bound = 1.0 + maxratio;

  for (std::uint64_t den : dens) {
    for (std::uint64_t num : nums) {
      if (std::gcd(num, den) != 1) continue;
      if (static_cast<double>(num) > bound * static_cast<double>(den) + 1) break;
      for (int sign = 0; sign < 2; ++sign) {
        BigInt bn = sign ? -BigInt(num) : BigInt(num);
        if (q.eval_homogeneous(bn, BigInt(den)) == 0) roots.emplace_back(bn, BigInt(den));
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// 6^b_n * b_n!, the Galois order bound for the nontrivial part.
inline BigInt galois_bound(int n) {
  int d = d_n_formula(n);
  if (d == 0) throw std::invalid_argument("galois_bound: no nontrivial part");
  int b = d / 6;
  BigInt out = big_pow(BigInt(6), b);
  for (int i = 2; i <= b; ++i) out *= i;
  return out;
}

}  // namespace kappa
