#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kappa/bigint.hpp"
#include "kappa/int_poly.hpp"

namespace kappa {

/// Polynomial over F_p, residues in [0, p) ascending by degree. The degree
/// may drop below that of an integer preimage when p divides its leading
/// coefficient.
class ModPoly {
 public:
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> ascending)
      : p_(p), c_(std::move(ascending)) {
    if (!is_prime_u64(p_)) throw std::invalid_argument("ModPoly: modulus must be prime");
    for (auto& v : c_) v %= p_;
    trim();
  }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lc() const {
    if (is_zero()) throw std::invalid_argument("ModPoly::lc: zero polynomial");
    return c_.back();
  }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  ModPoly monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = powmod_u64(lc(), p_ - 2, p_);
    return scaled(inv);
  }

  ModPoly scaled(std::uint64_t s) const {
    std::vector<std::uint64_t> r = c_;
    for (auto& v : r) v = mulmod_u64(v, s % p_, p_);
    return ModPoly(p_, std::move(r));
  }

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return ModPoly(a.p_, std::move(r));
  }
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    return ModPoly(a.p_, std::move(r));
  }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_, {});
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = (r[i + j] + mulmod_u64(a.c_[i], b.c_[j], a.p_)) % a.p_;
    return ModPoly(a.p_, std::move(r));
  }

  ModPoly derivative() const {
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod_u64(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(r));
  }

  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (mulmod_u64(acc, x, p_) + c_[i]) % p_;
    return acc;
  }

  /// Remainder of this modulo the (nonzero) divisor.
  ModPoly rem(const ModPoly& divisor) const {
    check_same(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("ModPoly::rem: zero divisor");
    ModPoly r = *this;
    std::uint64_t inv = powmod_u64(divisor.lc(), p_ - 2, p_);
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
      std::uint64_t q = mulmod_u64(r.lc(), inv, p_);
      std::size_t shift = r.degree() - divisor.degree();
      std::vector<std::uint64_t> rc = r.c_;
      for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
        std::uint64_t sub = mulmod_u64(q, divisor.c_[j], p_);
        rc[shift + j] = (rc[shift + j] + p_ - sub) % p_;
      }
      r = ModPoly(p_, std::move(rc));
    }
    return r;
  }

  /// Deflation by (x - root); remainder must vanish.
  ModPoly deflate(std::uint64_t root) const {
    if (is_zero()) throw std::invalid_argument("ModPoly::deflate: zero polynomial");
    std::vector<std::uint64_t> q(c_.size() - 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
      carry = (mulmod_u64(carry, root, p_) + c_[i]) % p_;
      q[i - 1] = carry;
    }
    std::uint64_t rem = (mulmod_u64(carry, root, p_) + c_[0]) % p_;
    if (rem != 0) throw std::logic_error("ModPoly::deflate: nonzero remainder");
    return ModPoly(p_, std::move(q));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!first) os << " + ";
      if (c_[i] != 1 || i == 0) os << c_[i];
      if (i > 0) {
        if (c_[i] != 1) os << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void check_same(const ModPoly& other) const {
    if (p_ != other.p_) throw std::invalid_argument("ModPoly: mixed moduli");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Coefficientwise reduction of an integer polynomial modulo a prime, with
/// degree renormalisation.
inline ModPoly reduce(const IntPoly& p, std::uint64_t prime) {
  if (!is_prime_u64(prime)) throw std::invalid_argument("reduce: modulus must be prime");
  std::vector<std::uint64_t> r;
  r.reserve(p.coeffs().size());
  BigInt bp(prime);
  for (const BigInt& v : p.coeffs()) {
    BigInt m = v % bp;
    if (m < 0) m += bp;
    r.push_back(m.convert_to<std::uint64_t>());
  }
  return ModPoly(prime, std::move(r));
}

/// All roots in F_p with multiplicities, by exhaustive evaluation and
/// repeated deflation. Residues ascending.
inline std::vector<std::pair<std::uint64_t, int>> roots_modp(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("roots_modp: zero polynomial");
  std::vector<std::pair<std::uint64_t, int>> out;
  std::uint64_t p = f.modulus();
  for (std::uint64_t x = 0; x < p; ++x) {
    if (f.eval(x) != 0) continue;
    ModPoly g = f;
    int mult = 0;
    while (!g.is_zero() && g.degree() >= 1 && g.eval(x) == 0) {
      g = g.deflate(x);
      ++mult;
    }
    out.emplace_back(x, mult);
  }
  return out;
}

namespace detail {

inline ModPoly powmod_poly(const ModPoly& base, BigInt exp, const ModPoly& mod) {
  ModPoly acc(mod.modulus(), {1});
  ModPoly b = base.rem(mod);
  while (exp > 0) {
    if ((exp & 1) != 0) acc = (acc * b).rem(mod);
    b = (b * b).rem(mod);
    exp >>= 1;
  }
  return acc;
}

inline ModPoly gcd_modp(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.monic();
  return a;
}

}  // namespace detail

/// Rabin's irreducibility test: x^(p^d) = x (mod f) and, for each prime
/// l | d, gcd(x^(p^(d/l)) - x, f) = 1.
inline bool is_irreducible_modp(const ModPoly& f) {
  int d = f.degree();
  if (d < 1) throw std::invalid_argument("is_irreducible_modp: constant polynomial");
  std::uint64_t p = f.modulus();
  ModPoly fm = f.monic();
  ModPoly x(p, {0, 1});
  BigInt pd = big_pow(BigInt(p), d);
  if (!(detail::powmod_poly(x, pd, fm) - x.rem(fm)).is_zero()) return false;
  for (auto [l, e] : factor_u64(static_cast<std::uint64_t>(d))) {
    BigInt pe = big_pow(BigInt(p), d / static_cast<int>(l));
    ModPoly g = detail::gcd_modp(detail::powmod_poly(x, pe, fm) - x.rem(fm), fm);
    if (g.degree() != 0) return false;
  }
  return true;
}

/// True iff f splits into linear factors over F_p (root multiplicities sum
/// to the degree).
inline bool splits_completely(const ModPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("splits_completely: constant polynomial");
  int total = 0;
  for (auto [root, mult] : roots_modp(f)) total += mult;
  return total == f.degree();
}

/// Eisenstein's criterion applied to Q(x) = P(x + shift): p does not divide
/// lc(Q), p divides every other coefficient, p^2 does not divide Q(0).
inline bool eisenstein_check(const IntPoly& p, std::uint64_t prime, long long shift) {
  if (p.degree() < 1) throw std::invalid_argument("eisenstein_check: constant polynomial");
  if (!is_prime_u64(prime)) throw std::invalid_argument("eisenstein_check: modulus must be prime");
  IntPoly q = p.shift(BigInt(shift));
  BigInt bp(prime);
  if (q.lc() % bp == 0) return false;
  for (int i = 0; i < q.degree(); ++i)
    if (q.coeff(i) % bp != 0) return false;
  return q.coeff(0) % (bp * bp) != 0;
}

/// Outcome of reducing an H-symmetric polynomial modulo p.
enum class Trichotomy { ZeroReduction, UnitTimesCyclotomicQuadratic, ReducibleModP };

inline const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::ZeroReduction: return "ZeroReduction";
    case Trichotomy::UnitTimesCyclotomicQuadratic: return "UnitTimesCyclotomicQuadratic";
    case Trichotomy::ReducibleModP: return "ReducibleModP";
  }
  return "?";
}

/// Classifies f mod p for nonconstant f with f(1-x) = f(x) = f*(x). Exactly
/// one case applies; an irreducible reduction forces f = c(x^2-x+1) with
/// p = 2 (mod 3), and any other irreducible outcome is a contradiction.
inline Trichotomy symmetric_reduction_trichotomy(const IntPoly& f, std::uint64_t prime) {
  if (f.degree() < 1)
    throw std::invalid_argument("symmetric_reduction_trichotomy: constant polynomial");
  if (!(substitute_pair(f, Moebius{-1, 1, 0, 1}) == f) || !(f.reciprocal() == f))
    throw std::invalid_argument("symmetric_reduction_trichotomy: hypothesis violated");
  ModPoly fbar = reduce(f, prime);
  if (fbar.is_zero()) return Trichotomy::ZeroReduction;
  if (fbar.degree() < 1 || !is_irreducible_modp(fbar)) return Trichotomy::ReducibleModP;
  // Irreducible reduction: the theorem pins the shape down completely.
  if (prime % 3 != 2)
    throw std::logic_error("symmetric_reduction_trichotomy: irreducible reduction with p != 2 mod 3");
  IntPoly quad{1, -1, 1};
  if (!(f == f.coeff(0) * quad))
    throw std::logic_error("symmetric_reduction_trichotomy: irreducible reduction of unexpected shape");
  return Trichotomy::UnitTimesCyclotomicQuadratic;
}

/// Proof that gcd(P, Q) over Q has degree zero, established modulo a single
/// prime not dividing lc(P): any common factor would survive reduction.
/// Returns false when no scanned prime certifies coprimality (callers fall
/// back to the exact gcd).
inline bool coprime_certificate_modp(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return false;
  static constexpr std::uint64_t kPrimes[] = {1000003, 1000033, 1000037, 1000039,
                                              1000081, 1000099, 1000117, 1000121};
  for (std::uint64_t pr : kPrimes) {
    if (p.lc() % BigInt(pr) == 0) continue;
    ModPoly a = reduce(p, pr), b = reduce(q, pr);
    if (b.is_zero()) continue;
    if (detail::gcd_modp(a, b).degree() == 0) return true;
  }
  return false;
}

}  // namespace kappa
