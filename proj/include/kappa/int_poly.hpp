#pragma once

#include <complex>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kappa/bigint.hpp"
#include "kappa/moebius.hpp"
#include "kappa/rational.hpp"

namespace kappa {

/// Dense univariate polynomial over Z, coefficients ascending by degree.
/// Invariant: the highest-index coefficient is nonzero (the zero polynomial
/// is the empty sequence). All arithmetic is exact.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> ascending) {
    for (long long v : ascending) c_.emplace_back(v);
    trim();
  }
  explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

  static IntPoly constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }
  static IntPoly monomial(BigInt coef, std::size_t deg) {
    IntPoly p;
    if (coef != 0) {
      p.c_.assign(deg + 1, BigInt(0));
      p.c_[deg] = std::move(coef);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  const BigInt& lc() const {
    if (is_zero()) throw std::invalid_argument("IntPoly::lc: zero polynomial");
    return c_.back();
  }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.c_ == q.c_; }

  friend IntPoly operator+(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> r(std::max(p.c_.size(), q.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator-() const {
    std::vector<BigInt> r = c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<BigInt> r(p.c_.size() + q.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const BigInt& s, const IntPoly& p) {
    if (s == 0) return {};
    std::vector<BigInt> r = p.c_;
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigInt(i) * c_[i];
    return IntPoly(std::move(r));
  }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  BigInt eval(long long x) const { return eval(BigInt(x)); }

  /// den^deg * P(num/den): exact homogeneous evaluation. Zero iff num/den is
  /// a root.
  BigInt eval_homogeneous(const BigInt& num, const BigInt& den) const {
    if (is_zero()) return 0;
    BigInt acc = 0, dpow = 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * num + c_[i] * dpow;
      if (i > 0) dpow *= den;
    }
    return acc;
  }

  std::complex<double> eval_complex(std::complex<double> z) const {
    std::complex<double> acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].convert_to<double>();
    return acc;
  }

  /// x^deg * P(1/x): coefficient reversal.
  IntPoly reciprocal() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
  }

  /// P(x + s), exact Taylor shift.
  IntPoly shift(const BigInt& s) const {
    if (is_zero()) return {};
    std::vector<BigInt> r = c_;
    // Repeated synthetic division by (x - (-s)) accumulates the shifted
    // coefficients in place.
    for (std::size_t k = 0; k + 1 < r.size(); ++k)
      for (std::size_t i = r.size() - 1; i-- > k;) r[i] += s * r[i + 1];
    return IntPoly(std::move(r));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const BigInt& v = c_[i];
      if (v == 0) continue;
      if (!first) os << (v > 0 ? " + " : " - ");
      else if (v < 0) os << "-";
      BigInt av = abs(v);
      if (av != 1 || i == 0) os << av.str();
      if (i > 0) {
        if (av != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

/// gcd of all coefficients, always positive.
inline BigInt content(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("content undefined for zero");
  BigInt g = 0;
  for (const BigInt& v : p.coeffs()) {
    g = big_gcd(g, abs(v));
    if (g == 1) break;
  }
  return g;
}

/// P / content(P), with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.lc() < 0) g = -g;
  std::vector<BigInt> r;
  r.reserve(p.coeffs().size());
  for (const BigInt& v : p.coeffs()) r.push_back(v / g);
  return IntPoly(std::move(r));
}

/// Exact scalar division; every coefficient must be divisible.
inline IntPoly divexact_scalar(const IntPoly& p, const BigInt& s) {
  if (s == 0) throw std::invalid_argument("divexact_scalar: zero divisor");
  std::vector<BigInt> r;
  r.reserve(p.coeffs().size());
  for (const BigInt& v : p.coeffs()) r.push_back(divexact(v, s));
  return IntPoly(std::move(r));
}

/// Division by a monic divisor with zero remainder asserted. Divisibility
/// claims proved in the source material become runtime assertions here.
inline IntPoly divexact_monic(const IntPoly& p, const IntPoly& divisor) {
  if (divisor.is_zero() || divisor.lc() != 1)
    throw std::invalid_argument("divexact_monic: divisor must be monic");
  if (divisor.degree() == 0) return p;
  if (p.is_zero()) return {};
  if (p.degree() < divisor.degree())
    throw std::logic_error("divexact_monic: nonzero remainder (degree)");
  std::vector<BigInt> rem(p.coeffs());
  std::vector<BigInt> quot(p.degree() - divisor.degree() + 1, BigInt(0));
  for (std::size_t qi = quot.size(); qi-- > 0;) {
    BigInt q = rem[qi + divisor.degree()];
    quot[qi] = q;
    if (q == 0) continue;
    for (int j = 0; j <= divisor.degree(); ++j) rem[qi + j] -= q * divisor.coeff(j);
  }
  for (const BigInt& v : rem)
    if (v != 0) throw std::logic_error("divexact_monic: nonzero remainder");
  return IntPoly(std::move(quot));
}

namespace detail {

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
  IntPoly r = a;
  int e = a.degree() - b.degree() + 1;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPoly t = IntPoly::monomial(r.lc(), r.degree() - b.degree());
    r = b.lc() * r - t * b;
    --e;
  }
  while (e-- > 0) r = b.lc() * r;
  return r;
}

}  // namespace detail

/// Primitive gcd with positive leading coefficient, via the subresultant
/// polynomial remainder sequence (fraction-free, exact).
inline IntPoly subresultant_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("subresultant_gcd: both inputs zero");
  if (p.is_zero()) return primitive_part(q);
  if (q.is_zero()) return primitive_part(p);
  IntPoly a = primitive_part(p), b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly{1};
  BigInt g = 1, h = 1;
  while (true) {
    int delta = a.degree() - b.degree();
    IntPoly r = detail::pseudo_rem(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPoly{1};
    a = b;
    b = divexact_scalar(r, g * big_pow(h, delta));
    g = a.lc();
    if (delta > 0) h = divexact(big_pow(g, delta), big_pow(h, delta - 1));
  }
}

/// Exact resultant via the subresultant PRS (Cohen, Algorithm 3.3.7).
inline BigInt resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant: zero input");
  if (p.degree() == 0 && q.degree() == 0) return 1;
  if (p.degree() == 0) return big_pow(p.lc(), q.degree());
  if (q.degree() == 0) return big_pow(q.lc(), p.degree());
  IntPoly a = p, b = q;
  BigInt sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
  }
  BigInt ca = content(a), cb = content(b);
  a = divexact_scalar(a, ca);
  b = divexact_scalar(b, cb);
  BigInt t = big_pow(ca, b.degree()) * big_pow(cb, a.degree());
  BigInt g = 1, h = 1;
  while (b.degree() > 0) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    IntPoly r = detail::pseudo_rem(a, b);
    if (r.is_zero()) return 0;
    a = b;
    b = divexact_scalar(r, g * big_pow(h, delta));
    g = a.lc();
    if (delta > 0) h = divexact(big_pow(g, delta), big_pow(h, delta - 1));
  }
  // b is a nonzero constant, a has positive degree.
  BigInt res = divexact(big_pow(b.lc(), a.degree()), big_pow(h, a.degree() - 1));
  return sign * t * res;
}

/// disc(P) = (-1)^(d(d-1)/2) * res(P, P') / lc(P), exact.
inline BigInt discriminant(const IntPoly& p) {
  int d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant: constant polynomial");
  BigInt r = resultant(p, p.derivative());
  BigInt val = divexact(r, p.lc());
  return (((d * (d - 1) / 2) % 2) ? -val : val);
}

/// (cx+d)^deg * P((ax+b)/(cx+d)), the denominator-cleared action of a
/// Moebius map on P. For x -> 1-x this is P(1-x); for x -> 1/x the
/// reciprocal polynomial.
inline IntPoly substitute_pair(const IntPoly& p, const Moebius& m) {
  if (m.singular()) throw std::invalid_argument("substitute_pair: singular transformation");
  if (p.is_zero()) return {};
  int deg = p.degree();
  IntPoly u{m.b, m.a}, v{m.d, m.c};
  std::vector<IntPoly> vpow(deg + 1);
  vpow[0] = IntPoly{1};
  for (int j = 1; j <= deg; ++j) vpow[j] = vpow[j - 1] * v;
  IntPoly acc = IntPoly::constant(p.coeff(deg));
  for (int i = deg - 1; i >= 0; --i)
    acc = acc * u + IntPoly::constant(p.coeff(i)) * vpow[deg - i];
  return acc;
}

namespace detail {

inline int moebius_mu(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace detail

/// d-th cyclotomic polynomial, via Phi_d = prod_{e|d} (x^(d/e) - 1)^mu(e).
inline IntPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
  IntPoly num{1};
  std::vector<IntPoly> dens;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = detail::moebius_mu(e);
    if (mu == 0) continue;
    IntPoly f = IntPoly::monomial(1, d / e) - IntPoly{1};
    if (mu == 1) num = num * f;
    else dens.push_back(f);
  }
  for (const IntPoly& f : dens) num = divexact_monic(num, f);
  return num;
}

}  // namespace kappa
