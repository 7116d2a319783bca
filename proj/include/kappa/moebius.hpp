#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "kappa/bigint.hpp"

namespace kappa {

/// Integer Moebius transformation x -> (ax+b)/(cx+d), stored as the matrix
/// (a b; c d). Two matrices describe the same map iff they agree up to a
/// scalar; `normalized` canonicalises for comparisons.
struct Moebius {
  long long a{1}, b{0}, c{0}, d{1};

  long long det() const { return a * d - b * c; }
  bool singular() const { return det() == 0; }

  Moebius inverse() const {
    if (singular()) throw std::invalid_argument("Moebius: singular matrix");
    return Moebius{d, -b, -c, a};  // adjugate; projective inverse
  }

  /// Canonical projective representative: entries divided by their gcd, first
  /// nonzero entry positive.
  Moebius normalized() const {
    long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::gcd(std::abs(c), std::abs(d)));
    if (g == 0) throw std::invalid_argument("Moebius: zero matrix");
    Moebius m{a / g, b / g, c / g, d / g};
    long long lead = m.a != 0 ? m.a : m.b != 0 ? m.b : m.c != 0 ? m.c : m.d;
    if (lead < 0) { m.a = -m.a; m.b = -m.b; m.c = -m.c; m.d = -m.d; }
    return m;
  }

  std::complex<double> apply(std::complex<double> z) const {
    return (double(a) * z + double(b)) / (double(c) * z + double(d));
  }

  /// Image of a residue in F_p; empty when the denominator vanishes mod p.
  std::optional<std::uint64_t> apply_modp(std::uint64_t x, std::uint64_t p) const {
    auto to_res = [&](long long v) { return static_cast<std::uint64_t>(((v % (long long)p) + (long long)p) % (long long)p); };
    std::uint64_t denom = (mulmod_u64(to_res(c), x, p) + to_res(d)) % p;
    if (denom == 0) return std::nullopt;
    std::uint64_t numer = (mulmod_u64(to_res(a), x, p) + to_res(b)) % p;
    return mulmod_u64(numer, powmod_u64(denom, p - 2, p), p);
  }

  std::string str() const {
    auto term = [](long long coef, bool with_x) -> std::string {
      if (!with_x) return std::to_string(coef);
      if (coef == 1) return "x";
      if (coef == -1) return "-x";
      return std::to_string(coef) + "x";
    };
    auto lin = [&](long long p, long long q) {
      std::string s;
      if (p != 0) s = term(p, true);
      if (q != 0) {
        if (!s.empty()) s += q > 0 ? "+" : "";
        s += term(q, false);
      }
      return s.empty() ? std::string("0") : s;
    };
    if (c == 0 && d == 1) return lin(a, b);
    return "(" + lin(a, b) + ")/(" + lin(c, d) + ")";
  }
};

/// Matrix product; as maps, (m1 * m2)(x) = m1(m2(x)).
inline Moebius operator*(const Moebius& m1, const Moebius& m2) {
  return Moebius{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                 m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

inline bool same_map(const Moebius& m1, const Moebius& m2) {
  Moebius x = m1.normalized(), y = m2.normalized();
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

}  // namespace kappa
