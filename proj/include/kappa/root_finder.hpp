#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappa/int_poly.hpp"

namespace kappa {

/// Thrown when the simultaneous iteration fails to reach the requested
/// residual within its iteration budget; carries the best iterate found.
struct RootFindError : std::runtime_error {
  std::vector<std::complex<double>> best;
  explicit RootFindError(std::string msg, std::vector<std::complex<double>> iterate)
      : std::runtime_error(std::move(msg)), best(std::move(iterate)) {}
};

namespace detail {

// Quad-precision complex Newton polish. The families handled here have
// coefficients spanning many orders of magnitude, which pushes the root
// condition number past what double precision can deliver positionally;
// a few Newton steps at 113-bit precision restore ~1e-18 positions.
struct QComplex {
  __float128 re, im;
};

inline QComplex qadd(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex qsub(QComplex a, QComplex b) { return {a.re - b.re, a.im - b.im}; }
inline QComplex qmul(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex qdiv(QComplex a, QComplex b) {
  __float128 d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

/// BigInt -> __float128 with three double-sized chunks (~159 bits, exact
/// for every coefficient size seen here).
inline __float128 to_quad(const BigInt& v) {
  BigInt rest = v;
  __float128 acc = 0;
  for (int part = 0; part < 3 && rest != 0; ++part) {
    double d = rest.convert_to<double>();
    acc += static_cast<__float128>(d);
    rest -= BigInt(d);
  }
  return acc;
}

inline __float128 qnorm1(QComplex a) {
  return (a.re < 0 ? -a.re : a.re) + (a.im < 0 ? -a.im : a.im);
}

/// Aberth sweeps at quad precision, started from the double-precision
/// configuration. Resolves the root clusters near the curve junctions that
/// double precision cannot separate positionally.
inline void quad_aberth(const std::vector<__float128>& qc, std::vector<QComplex>& z,
                        int max_sweeps) {
  const std::size_t deg = z.size();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    __float128 max_rel_step = 0;
    for (std::size_t k = 0; k < deg; ++k) {
      QComplex p{0, 0}, dp{0, 0};
      for (std::size_t i = qc.size(); i-- > 0;) {
        dp = qadd(qmul(dp, z[k]), p);
        p = qadd(qmul(p, z[k]), QComplex{qc[i], 0});
      }
      if ((p.re == 0 && p.im == 0) || (dp.re == 0 && dp.im == 0)) continue;
      QComplex w = qdiv(p, dp);
      QComplex repulsion{0, 0};
      for (std::size_t j = 0; j < deg; ++j) {
        if (j == k) continue;
        QComplex diff = qsub(z[k], z[j]);
        if (diff.re == 0 && diff.im == 0) diff = QComplex{__float128(1e-30), __float128(1e-30)};
        repulsion = qadd(repulsion, qdiv(QComplex{1, 0}, diff));
      }
      QComplex denom = qsub(QComplex{1, 0}, qmul(w, repulsion));
      QComplex step = (denom.re == 0 && denom.im == 0) ? w : qdiv(w, denom);
      z[k] = qsub(z[k], step);
      __float128 rel = qnorm1(step) / (1 + qnorm1(z[k]));
      if (rel > max_rel_step) max_rel_step = rel;
    }
    if (max_rel_step < __float128(1e-30)) break;
  }
}

/// Horner evaluation returning p(z) and the scale sum |c_i||z|^i used for
/// relative residuals.
inline std::pair<std::complex<double>, double> eval_with_scale(
    const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc = 0;
  double scale = 0, az = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * z + c[i];
    scale = scale * az + std::abs(c[i]);
  }
  return {acc, scale};
}

inline std::complex<double> eval_deriv(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (std::size_t i = c.size(); i-- > 1;) acc = acc * z + double(i) * c[i];
  return acc;
}

}  // namespace detail

/// All complex roots of P (with multiplicity), by Aberth-Ehrlich
/// simultaneous iteration in double precision. Deterministic for fixed
/// input: the starting points are equispaced on a Cauchy-bound circle.
/// Each returned z satisfies |P(z)| < tol * sum |c_i||z|^i.
inline std::vector<std::complex<double>> complex_roots(const IntPoly& p, double tol = 1e-10,
                                                       int max_sweeps = 400) {
  int deg = p.degree();
  if (deg < 1) throw std::invalid_argument("complex_roots: degree must be positive");
  if (tol <= 0) throw std::invalid_argument("complex_roots: tolerance must be positive");

  // Normalise coefficients to doubles; the scale cancels in root positions.
  double maxabs = 0;
  for (const BigInt& v : p.coeffs()) maxabs = std::max(maxabs, std::abs(v.convert_to<double>()));
  std::vector<double> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i].convert_to<double>() / maxabs;

  // Fujiwara bound: 2 max_k |c_(deg-k)/c_deg|^(1/k). Unlike the additive
  // Cauchy bound it stays moderate for binomial-sized coefficients, so the
  // first sweeps cannot overflow the evaluation.
  double radius = 0;
  for (int k = 1; k <= deg; ++k) {
    double q = std::abs(c[deg - k] / c[deg]);
    if (k == deg) q *= 0.5;
    if (q > 0) radius = std::max(radius, std::pow(q, 1.0 / k));
  }
  radius = 2.0 * std::max(radius, 0.5);
  std::complex<double> center(-c[deg - 1] / (deg * c[deg]), 0.0);

  std::vector<std::complex<double>> z(deg);
  for (int k = 0; k < deg; ++k) {
    double angle = 2.0 * std::numbers::pi * (k + 0.25) / deg + 0.5;  // offset avoids real-axis symmetry traps
    z[k] = center + radius * std::complex<double>(std::cos(angle), std::sin(angle));
  }

  // Iterate to positional convergence: the residual tolerance alone can be
  // met while nearby roots still pull each other off position.
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_rel_step = 0.0;
    for (int k = 0; k < deg; ++k) {
      auto [pv, scale] = detail::eval_with_scale(c, z[k]);
      if (pv == 0.0) continue;
      std::complex<double> dv = detail::eval_deriv(c, z[k]);
      std::complex<double> w = dv == 0.0 ? std::complex<double>(1e-12, 1e-12) : pv / dv;
      std::complex<double> repulsion = 0;
      for (int j = 0; j < deg; ++j) {
        if (j == k) continue;
        std::complex<double> diff = z[k] - z[j];
        if (diff == 0.0) diff = std::complex<double>(1e-14, 1e-14);
        repulsion += 1.0 / diff;
      }
      std::complex<double> denom = 1.0 - w * repulsion;
      std::complex<double> step = (denom == 0.0) ? w : w / denom;
      z[k] -= step;
      max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (max_rel_step < 1e-14) break;
  }
  // Finish at quad precision from the double configuration.
  std::vector<__float128> qc(p.coeffs().size());
  for (std::size_t i = 0; i < qc.size(); ++i) qc[i] = detail::to_quad(p.coeffs()[i]);
  std::vector<detail::QComplex> qz(deg);
  for (int k = 0; k < deg; ++k)
    qz[k] = {static_cast<__float128>(z[k].real()), static_cast<__float128>(z[k].imag())};
  detail::quad_aberth(qc, qz, 80);
  for (int k = 0; k < deg; ++k)
    z[k] = {static_cast<double>(qz[k].re), static_cast<double>(qz[k].im)};

  for (int k = 0; k < deg; ++k) {
    auto [pv, scale] = detail::eval_with_scale(c, z[k]);
    if (std::abs(pv) >= tol * scale)
      throw RootFindError("complex_roots: no convergence within iteration budget", z);
  }
  return z;
}

}  // namespace kappa
