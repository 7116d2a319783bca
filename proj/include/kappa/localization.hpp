#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "kappa/kfamily.hpp"
#include "kappa/rational.hpp"
#include "kappa/root_finder.hpp"

namespace kappa {

/// The localization curves: the line Re z = 1/2, the rays L above omega and
/// below conjugate-omega, the arc A1 of |z-1| = 1 through 0, and the arc A2
/// of |z| = 1 through 1. omega = e^(i pi/3) anchors all of them.
struct CurveGeometry {
  static constexpr double half = 0.5;
  static double omega_im() { return std::sqrt(3.0) / 2.0; }
  static std::complex<double> omega() { return {half, omega_im()}; }

  static double dist_line(std::complex<double> z) { return std::abs(z.real() - half); }

  static double dist_rays(std::complex<double> z) {
    double im = std::abs(z.imag());
    if (im >= omega_im()) return std::abs(z.real() - half);
    return std::abs(std::complex<double>(z.real(), im) - omega());
  }

  // Arc angles are measured from the circle centre; clamping to the arc's
  // angular range lands on the nearest arc point.
  static double dist_arc_a1(std::complex<double> z) {
    std::complex<double> w = z - 1.0;
    double ang = std::atan2(std::abs(w.imag()), w.real());  // in [0, pi]
    ang = std::clamp(ang, 2.0 * std::numbers::pi / 3.0, std::numbers::pi);
    std::complex<double> nearest =
        1.0 + std::complex<double>(std::cos(ang), std::copysign(std::sin(ang), z.imag()));
    return std::abs(z - nearest);
  }

  static double dist_arc_a2(std::complex<double> z) {
    double ang = std::atan2(std::abs(z.imag()), z.real());
    ang = std::clamp(ang, 0.0, std::numbers::pi / 3.0);
    std::complex<double> nearest(std::cos(ang), std::copysign(std::sin(ang), z.imag()));
    return std::abs(z - nearest);
  }
};

enum class CurveLabel { MidLine, RayL, ArcA1, ArcA2, Off };

inline const char* to_string(CurveLabel l) {
  switch (l) {
    case CurveLabel::MidLine: return "MidLine";
    case CurveLabel::RayL: return "RayL";
    case CurveLabel::ArcA1: return "ArcA1";
    case CurveLabel::ArcA2: return "ArcA2";
    case CurveLabel::Off: return "Off";
  }
  return "?";
}

/// Which curve family a report classifies against: the whole line
/// Re z = 1/2 (the |a| <= 1/2 statement) or rays plus arcs (a = -1).
enum class CurveSet { LineOnly, RaysAndArcs };

struct ClassifiedRoot {
  std::complex<double> z;
  double residual;
  CurveLabel label;
  double distance;
};

/// Assigns the nearest curve of the chosen set if within tol_c, else Off.
/// The distance recorded is to the labelled curve (nearest curve for Off).
inline ClassifiedRoot classify_root(std::complex<double> z, double tol_c,
                                    CurveSet set = CurveSet::RaysAndArcs, double residual = 0.0) {
  if (tol_c <= 0) throw std::invalid_argument("classify_root: tolerance must be positive");
  ClassifiedRoot out{z, residual, CurveLabel::Off, 0.0};
  if (set == CurveSet::LineOnly) {
    out.distance = CurveGeometry::dist_line(z);
    out.label = out.distance <= tol_c ? CurveLabel::MidLine : CurveLabel::Off;
    return out;
  }
  std::array<std::pair<CurveLabel, double>, 3> cand{{
      {CurveLabel::RayL, CurveGeometry::dist_rays(z)},
      {CurveLabel::ArcA1, CurveGeometry::dist_arc_a1(z)},
      {CurveLabel::ArcA2, CurveGeometry::dist_arc_a2(z)},
  }};
  auto best = std::min_element(cand.begin(), cand.end(),
                               [](const auto& x, const auto& y) { return x.second < y.second; });
  out.distance = best->second;
  out.label = best->second <= tol_c ? best->first : CurveLabel::Off;
  return out;
}

/// floor(n/2) - ceil((n/pi) arccos min(1, 1/(2|a|))). The two rational
/// arccos arguments that occur (1 and 1/2) are handled exactly so the
/// ceiling never suffers from rounding.
inline int count_lower_bound(const Rational& a, int n) {
  if (n < 2) throw std::invalid_argument("count_lower_bound: n must be at least 2");
  int ceil_term;
  if (a.is_zero() || a.abs_at_most_half()) {
    ceil_term = 0;  // arccos 1 = 0
  } else if (abs(a.num) == a.den) {
    ceil_term = (n + 2) / 3;  // arccos 1/2 = pi/3, so ceil(n/3)
  } else {
    double c = 1.0 / (2.0 * std::abs(a.to_double()));
    double t = n * std::acos(c) / std::numbers::pi;
    ceil_term = static_cast<int>(std::ceil(t - 1e-12));
  }
  return n / 2 - ceil_term;
}

namespace detail {

/// Index range [k_min, k_max] of grid points k pi/n inside the closure of
/// the theta-domain D = [arccos min(1, 1/(2|a|)), pi/2).
inline std::pair<int, int> theta_grid_range(const Rational& a, int n) {
  int k_min;
  if (a.is_zero() || a.abs_at_most_half()) k_min = 0;
  else if (abs(a.num) == a.den) k_min = (n + 2) / 3;
  else {
    double c = 1.0 / (2.0 * std::abs(a.to_double()));
    k_min = static_cast<int>(std::ceil(n * std::acos(c) / std::numbers::pi - 1e-12));
  }
  return {k_min, n / 2};
}

inline double f_theta(const Rational& a, int n, double theta) {
  double av = a.to_double();
  return 2.0 * std::cos(n * theta) + std::pow(2.0 * av * std::cos(theta), n);
}

}  // namespace detail

/// One zero of f_n(theta) = 2 cos(n theta) + (2a cos theta)^n per
/// sign-change interval [k pi/n, (k+1) pi/n] inside D, found by bisection.
/// The count always equals count_lower_bound(a, n).
inline std::vector<double> theta_roots(const Rational& a, int n) {
  if (n < 2) throw std::invalid_argument("theta_roots: n must be at least 2");
  auto [k_min, k_max] = detail::theta_grid_range(a, n);
  std::vector<double> roots;
  for (int k = k_min; k < k_max; ++k) {
    double lo = k * std::numbers::pi / n, hi = (k + 1) * std::numbers::pi / n;
    double flo = detail::f_theta(a, n, lo);
    double fhi = detail::f_theta(a, n, hi);
    if (flo == 0.0) { roots.push_back(lo); continue; }
    if (!(flo * fhi < 0))
      throw std::logic_error("theta_roots: expected sign change missing");
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = detail::f_theta(a, n, mid);
      if ((flo < 0) == (fm < 0)) { lo = mid; flo = fm; }
      else hi = mid;
      if (hi - lo < 1e-12) break;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

namespace detail {

inline std::pair<std::complex<double>, double> eval_with_scale_big(const IntPoly& p,
                                                                   std::complex<double> z) {
  std::complex<double> acc = 0;
  double scale = 0, az = std::abs(z);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    double cv = p.coeffs()[i].convert_to<double>();
    acc = acc * z + cv;
    scale = scale * az + std::abs(cv);
  }
  return {acc, scale};
}

}  // namespace detail

/// Per-report verdict and classified roots for one (a, n).
struct LocalizationReport {
  Rational a;
  int n;
  CurveSet set;
  int degree;  // number of roots expected (with multiplicity)
  std::vector<ClassifiedRoot> roots;
  std::map<CurveLabel, int> counts;
  bool verdict;
  bool asserted;  // false when a is outside the proved parameter ranges
};

/// Numeric verification of the localization statements. For a = -1 the
/// roots of K-tilde_n must land on RayL/ArcA1/ArcA2 with d_n/3 on each; for
/// |a| <= 1/2 all roots of K_{a,n} must land on the line Re z = 1/2. Other
/// parameters are reported for inspection with nothing asserted.
inline LocalizationReport localize_report(const KFamilySpec& spec, double tol = 1e-10,
                                          double tol_c = 1e-6) {
  LocalizationReport rep;
  rep.a = spec.a;
  rep.n = spec.n;
  rep.asserted = true;
  IntPoly poly;
  if (spec.a.is_minus_one()) {
    rep.set = CurveSet::RaysAndArcs;
    poly = k_tilde(spec.n).poly;
  } else if (spec.a.abs_at_most_half()) {
    rep.set = CurveSet::LineOnly;
    poly = k_general(spec);
  } else {
    rep.set = CurveSet::RaysAndArcs;
    rep.asserted = false;
    poly = k_general(spec);
  }
  rep.degree = std::max(poly.degree(), 0);
  for (auto l : {CurveLabel::MidLine, CurveLabel::RayL, CurveLabel::ArcA1, CurveLabel::ArcA2,
                 CurveLabel::Off})
    rep.counts[l] = 0;
  if (rep.degree == 0) {
    rep.verdict = true;  // vacuous: constant polynomial has no roots
    return rep;
  }
  auto zs = complex_roots(poly, tol);
  for (auto z : zs) {
    auto [pv, scale] = detail::eval_with_scale_big(poly, z);
    ClassifiedRoot cr = classify_root(z, tol_c, rep.set, scale > 0 ? std::abs(pv) / scale : 0.0);
    rep.counts[cr.label]++;
    rep.roots.push_back(cr);
  }
  if (!rep.asserted) {
    rep.verdict = true;
  } else if (rep.set == CurveSet::LineOnly) {
    rep.verdict = rep.counts[CurveLabel::MidLine] == rep.degree &&
                  rep.degree == 2 * (spec.n / 2);
  } else {
    int third = d_n_formula(spec.n) / 3;
    rep.verdict = rep.counts[CurveLabel::RayL] == third &&
                  rep.counts[CurveLabel::ArcA1] == third &&
                  rep.counts[CurveLabel::ArcA2] == third && rep.counts[CurveLabel::Off] == 0;
  }
  return rep;
}

/// Finite surrogate for the density statement: maximum gap between
/// consecutive theta-parameters (union over n_min..n_max), measured against
/// the endpoints of D as well.
struct DensityAudit {
  double dom_lo, dom_hi;
  std::size_t root_count;
  double max_gap;
};

inline DensityAudit density_audit(const Rational& a, int n_max, int n_min = 2) {
  if (n_max < n_min || n_min < 2) throw std::invalid_argument("density_audit: bad range");
  std::vector<double> all;
  for (int n = n_min; n <= n_max; ++n) {
    auto r = theta_roots(a, n);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  double lo;
  if (a.is_zero() || a.abs_at_most_half()) lo = 0.0;
  else if (abs(a.num) == a.den) lo = std::numbers::pi / 3.0;
  else lo = std::acos(1.0 / (2.0 * std::abs(a.to_double())));
  double hi = std::numbers::pi / 2.0;
  DensityAudit audit{lo, hi, all.size(), 0.0};
  double prev = lo;
  for (double t : all) {
    audit.max_gap = std::max(audit.max_gap, t - prev);
    prev = t;
  }
  audit.max_gap = std::max(audit.max_gap, hi - prev);
  return audit;
}

namespace detail {

inline void csv_row(std::ostream& os, int n, const Rational& a, double re, double im,
                    const char* label, double residual, double distance) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%s,%s,%.15g,%.15g,%s,%.3e,%.3e\n", n, a.num.str().c_str(),
                a.den.str().c_str(), re, im, label, residual, distance);
  os << buf;
}

}  // namespace detail

/// One CSV row per root (n, a_num, a_den, re, im, label, residual,
/// distance) plus fixed-resolution sample rows tracing the curves the
/// report classified against. Header only for an empty report.
inline void emit_plot_data(const LocalizationReport& rep, std::ostream& os) {
  os << "n,a_num,a_den,re,im,label,residual,distance\n";
  if (rep.roots.empty()) return;
  for (const auto& r : rep.roots)
    detail::csv_row(os, rep.n, rep.a, r.z.real(), r.z.imag(), to_string(r.label), r.residual,
                    r.distance);
  constexpr int kSamples = 101;
  double w = CurveGeometry::omega_im();
  if (rep.set == CurveSet::LineOnly) {
    double span = 0.0;
    for (const auto& r : rep.roots) span = std::max(span, std::abs(r.z.imag()));
    span = std::max(1.0, 1.1 * span);
    for (int i = 0; i < kSamples; ++i) {
      double im = -span + 2 * span * i / (kSamples - 1);
      detail::csv_row(os, rep.n, rep.a, 0.5, im, "curve_line", 0.0, 0.0);
    }
    return;
  }
  double span = w;
  for (const auto& r : rep.roots) span = std::max(span, std::abs(r.z.imag()));
  span = std::max(2.0, 1.1 * span);
  for (int i = 0; i < kSamples; ++i) {
    double im = w + (span - w) * i / (kSamples - 1);
    detail::csv_row(os, rep.n, rep.a, 0.5, im, "curve_L", 0.0, 0.0);
    detail::csv_row(os, rep.n, rep.a, 0.5, -im, "curve_L", 0.0, 0.0);
  }
  for (int i = 0; i < kSamples; ++i) {
    // A1: angles in [2pi/3, 4pi/3] around centre 1.
    double ang = 2.0 * std::numbers::pi / 3.0 + 2.0 * std::numbers::pi / 3.0 * i / (kSamples - 1);
    detail::csv_row(os, rep.n, rep.a, 1.0 + std::cos(ang), std::sin(ang), "curve_A1", 0.0, 0.0);
  }
  for (int i = 0; i < kSamples; ++i) {
    double ang = -std::numbers::pi / 3.0 + 2.0 * std::numbers::pi / 3.0 * i / (kSamples - 1);
    detail::csv_row(os, rep.n, rep.a, std::cos(ang), std::sin(ang), "curve_A2", 0.0, 0.0);
  }
}

}  // namespace kappa
