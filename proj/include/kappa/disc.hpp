#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "kappa/bigint.hpp"
#include "kappa/int_poly.hpp"
#include "kappa/kfamily.hpp"

namespace kappa {

/// Exact discriminant of K_{6m} factored against the closed product
/// formula: disc = (-1)^m (6m)^(6m) (2^(6m-1)+1) S^2, with S recovered as
/// the integer square root of the exact quotient and cross-checked against
/// the root-of-unity product in double precision.
struct DiscReport {
  int m;
  BigInt disc;
  BigInt base;       // (-1)^m (6m)^(6m) (2^(6m-1)+1)
  BigInt s_abs;      // |S| with disc = base * S^2
  double s_numeric;  // prod_{j=1}^{3m-1} (1 + (1+zeta^j)^(6m-1)), zeta = e^(2 pi i/(6m-1))
};

/// Numeric value of the product; each factor is real because
/// (1+zeta^j)^(6m-1) has argument j*pi.
inline double disc_product_numeric(int m) {
  int N = 6 * m - 1;
  double prod = 1.0;
  for (int j = 1; j <= 3 * m - 1; ++j) {
    double factor = std::pow(2.0 * std::cos(std::numbers::pi * j / N), N);
    prod *= 1.0 + (j % 2 ? -factor : factor);
  }
  return prod;
}

inline DiscReport disc_report(int m) {
  if (m < 1 || m > 5) throw std::invalid_argument("disc_report: m must be in 1..5");
  int n = 6 * m;
  DiscReport rep;
  rep.m = m;
  rep.disc = discriminant(k_poly(n));
  rep.base = big_pow(BigInt(n), n) * (big_pow(BigInt(2), n - 1) + 1);
  if (m % 2) rep.base = -rep.base;
  BigInt quotient = rep.disc / rep.base;
  if (quotient * rep.base != rep.disc)
    throw std::logic_error("disc_report: base does not divide the discriminant");
  if (quotient < 0 || !is_perfect_square(quotient))
    throw std::logic_error("disc_report: quotient is not a perfect square");
  rep.s_abs = big_isqrt(quotient);
  rep.s_numeric = disc_product_numeric(m);
  return rep;
}

/// The Galois group contains an odd permutation iff the discriminant is not
/// a perfect square. For m > 5 the exact resultant is skipped and the
/// sufficient condition (2^(6m-1)+1 not a square) is checked instead.
inline bool odd_permutation_check(int m) {
  if (m < 1) throw std::invalid_argument("odd_permutation_check: m must be positive");
  if (m <= 5) return !is_perfect_square(disc_report(m).disc);
  return !is_perfect_square(big_pow(BigInt(2), 6 * m - 1) + 1);
}

/// The critical points of K_{6m} are zeta^j/(1+zeta^j), j = 1..6m-1.
/// Evaluates K'_{6m} there numerically; true iff every relative residual is
/// below 1e-8.
inline bool critical_points_check(int m, double* max_residual = nullptr) {
  if (m < 1 || m > 5) throw std::invalid_argument("critical_points_check: m must be in 1..5");
  int n = 6 * m, N = n - 1;
  IntPoly dk = k_poly(n).derivative();
  double worst = 0.0;
  for (int j = 1; j <= N; ++j) {
    double ang = 2.0 * std::numbers::pi * j / N;
    std::complex<double> zeta(std::cos(ang), std::sin(ang));
    std::complex<double> z = zeta / (1.0 + zeta);
    std::complex<double> val = 0;
    double scale = 0, az = std::abs(z);
    for (std::size_t i = dk.coeffs().size(); i-- > 0;) {
      double cv = dk.coeffs()[i].convert_to<double>();
      val = val * z + cv;
      scale = scale * az + std::abs(cv);
    }
    worst = std::max(worst, std::abs(val) / scale);
  }
  if (max_residual) *max_residual = worst;
  return worst < 1e-8;
}

}  // namespace kappa
