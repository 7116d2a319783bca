#pragma once

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

#include "kappa/bigint.hpp"

namespace kappa {

/// Exact rational scalar, always normalised: gcd(num, den) = 1, den >= 1.
/// Carries the family parameter a of K_{a,n}.
struct Rational {
  BigInt num{0};
  BigInt den{1};

  Rational() = default;
  Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    BigInt g = big_gcd(abs(num), den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  bool is_minus_one() const { return num == -1 && den == 1; }
  bool abs_at_most_half() const { return 2 * abs(num) <= den; }

  double to_double() const { return num.convert_to<double>() / den.convert_to<double>(); }

  std::string str() const {
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

/// Parses "p", "-p" or "p/q" (sign on the numerator).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = text.find('/');
  auto parse_int = [](const std::string& s) {
    if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("parse_rational: malformed integer");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i == 0 && (s[i] == '-' || s[i] == '+')) continue;
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("parse_rational: malformed integer");
    }
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("parse_rational: denominator must be positive");
  return Rational(num, den);
}

}  // namespace kappa
