#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "kappa/bigint.hpp"
#include "kappa/int_poly.hpp"
#include "kappa/kfamily.hpp"
#include "kappa/moebius.hpp"

namespace kappa {

/// The order-6 group H = {x, 1-x, 1/x, x/(x-1), 1/(1-x), (x-1)/x} of maps
/// preserving K-tilde_n, with its Cayley table. Isomorphic to S_3.
struct HGroup {
  std::array<Moebius, 6> elements;
  std::array<std::string, 6> names;
  std::array<std::array<int, 6>, 6> cayley;  // cayley[i][j]: index of elements[i] o elements[j]

  static const HGroup& standard() {
    static const HGroup h = build();
    return h;
  }

  int index_of(const Moebius& m) const {
    for (int i = 0; i < 6; ++i)
      if (same_map(elements[i], m)) return i;
    return -1;
  }

 private:
  static HGroup build() {
    HGroup h;
    h.elements = {Moebius{1, 0, 0, 1},  Moebius{-1, 1, 0, 1}, Moebius{0, 1, 1, 0},
                  Moebius{1, 0, 1, -1}, Moebius{0, 1, -1, 1}, Moebius{1, -1, 1, 0}};
    h.names = {"x", "1-x", "1/x", "x/(x-1)", "1/(1-x)", "(x-1)/x"};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) h.cayley[i][j] = h.index_of(h.elements[i] * h.elements[j]);
    return h;
  }
};

/// Checks that H is closed under composition up to scalar, has inverses,
/// is non-abelian, and has the S_3 order profile (three involutions, two
/// elements of order three).
inline bool verify_h_group() {
  const HGroup& h = HGroup::standard();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (h.cayley[i][j] < 0) return false;
  // Inverses: each row of the table contains the identity.
  for (int i = 0; i < 6; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < 6; ++j) has_inverse |= h.cayley[i][j] == 0;
    if (!has_inverse) return false;
  }
  bool abelian = true;
  for (int i = 0; i < 6 && abelian; ++i)
    for (int j = 0; j < 6 && abelian; ++j) abelian = h.cayley[i][j] == h.cayley[j][i];
  if (abelian) return false;
  int involutions = 0, order3 = 0;
  for (int i = 1; i < 6; ++i) {
    if (h.cayley[i][i] == 0) ++involutions;
    else if (h.cayley[h.cayley[i][i]][i] == 0) ++order3;
  }
  return involutions == 3 && order3 == 2;
}

/// substitute_pair(K-tilde_n, M) = K-tilde_n exactly for every M in H
/// (denominator-cleared functional equation; d_n is divisible by 6, so no
/// sign ambiguity arises).
inline bool verify_sym_identity(int n) {
  if (d_n_formula(n) == 0)
    throw std::invalid_argument("verify_sym_identity: no nontrivial part");
  IntPoly kt = k_tilde(n).poly;
  for (const Moebius& m : HGroup::standard().elements)
    if (!(substitute_pair(kt, m) == kt)) return false;
  return true;
}

/// K_n(x) = K_n(1-x) = (-x)^n K_n(1/x), verified exactly. Note the factor
/// (-x)^n rather than x^deg: deg K_n = n-1 for odd n.
inline bool eq_symkn_check(int n) {
  if (n < 2) throw std::invalid_argument("eq_symkn_check: n must be at least 2");
  IntPoly k = k_poly(n);
  if (!(substitute_pair(k, Moebius{-1, 1, 0, 1}) == k)) return false;
  // (-x)^n K(1/x) = (-1)^n x^(n - deg) * reciprocal(K).
  IntPoly rhs = IntPoly::monomial(1, n - k.degree()) * k.reciprocal();
  if (n % 2) rhs = -rhs;
  return rhs == k;
}

/// Hypothesis record for the factor-symmetry theorem: whether K-tilde_n(0)
/// is square-free, plus the sufficient conditions noted alongside it
/// (n even, square-free, or the square of a prime).
struct FactorSymmetryReport {
  BigInt ktilde_at_0;
  bool ktilde0_squarefree;
  bool n_even;
  bool n_squarefree;
  bool n_prime_square;

  bool holds() const { return ktilde0_squarefree; }
};

inline FactorSymmetryReport factor_symmetry_hypothesis(int n) {
  if (d_n_formula(n) == 0)
    throw std::invalid_argument("factor_symmetry_hypothesis: no nontrivial part");
  FactorSymmetryReport r;
  r.ktilde_at_0 = k_tilde(n).poly.eval(0);
  r.ktilde0_squarefree = squarefree_integer(r.ktilde_at_0);
  r.n_even = n % 2 == 0;
  r.n_squarefree = squarefree_integer(BigInt(n));
  r.n_prime_square = is_prime_square_u64(static_cast<std::uint64_t>(n));
  return r;
}

/// gcd(K-tilde_n, Phi_d) = 1 for all d up to d_max.
inline bool cyclotomic_coprime(int n, int d_max) {
  if (d_n_formula(n) == 0)
    throw std::invalid_argument("cyclotomic_coprime: no nontrivial part");
  IntPoly kt = k_tilde(n).poly;
  for (int d = 1; d <= d_max; ++d) {
    IntPoly phi = cyclotomic(d);
    if (coprime_certificate_modp(kt, phi)) continue;
    if (subresultant_gcd(kt, phi).degree() != 0) return false;
  }
  return true;
}

/// Phi_d(x, 1-x): the homogenised cyclotomic polynomial evaluated on the
/// pair (x, 1-x), i.e. (1-x)^deg Phi_d(x/(1-x)).
inline IntPoly phi_pair(int d) {
  return substitute_pair(cyclotomic(d), Moebius{1, 0, -1, 1});
}

/// Verifies x^(n-1) - (1-x)^(n-1) = prod_{d | n-1} Phi_d(x, 1-x) exactly,
/// and deg Phi_d(x, 1-x) = phi(d) for every divisor d != 2.
inline bool phi_homog_identities(int n) {
  if (n < 3) throw std::invalid_argument("phi_homog_identities: n must be at least 3");
  int m = n - 1;
  IntPoly prod{1};
  for (int d = 1; d <= m; ++d) {
    if (m % d) continue;
    IntPoly f = phi_pair(d);
    if (d != 2) {
      int phi = cyclotomic(d).degree();
      if (f.degree() != phi) return false;
    }
    prod = prod * f;
  }
  IntPoly lhs = IntPoly::monomial(1, m) - substitute_pair(IntPoly::monomial(1, m), Moebius{-1, 1, 0, 1});
  return lhs == prod;
}

/// G = gcd(K_n, K_n') together with the exponent k in G = (x^2-x+1)^k.
/// Asserts the shape, k = max(mult_cyc - 1, 0), and G | x^(n-1) + (-1)^n.
struct GcdKprimeResult {
  IntPoly g;
  int exponent;
};

inline GcdKprimeResult gcd_kprime_analysis(int n) {
  if (n < 2) throw std::invalid_argument("gcd_kprime_analysis: n must be at least 2");
  IntPoly k = k_poly(n);
  IntPoly g = subresultant_gcd(k, k.derivative());
  int expected = std::max(trivial_multiplicities(n).mult_cyc - 1, 0);
  IntPoly quad{1, -1, 1}, power{1};
  for (int i = 0; i < expected; ++i) power = power * quad;
  if (!(g == power)) throw std::logic_error("gcd_kprime_analysis: unexpected gcd shape");
  // G | x^(n-1) + (-1)^n, the divisibility used to localise the gcd.
  IntPoly target = IntPoly::monomial(1, n - 1) + IntPoly::constant((n % 2) ? -1 : 1);
  divexact_monic(target, g);  // throws on nonzero remainder
  return GcdKprimeResult{std::move(g), expected};
}

}  // namespace kappa
