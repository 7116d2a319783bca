// Acceptance suite: one test per published acceptance criterion, each
// printing a single pass/fail line. Tolerances and thresholds are pinned
// here, not configurable.
#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "kappa/certify.hpp"
#include "kappa/disc.hpp"
#include "kappa/kfamily.hpp"
#include "kappa/localization.hpp"
#include "kappa/mod_poly.hpp"
#include "kappa/root_finder.hpp"
#include "kappa/symmetry.hpp"

using kappa::BigInt;
using kappa::IntPoly;
using kappa::KFamilySpec;
using kappa::Rational;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

class Criterion {
 public:
  Criterion(int id, const char* name, double budget_seconds)
      : id_(id), name_(name), budget_(budget_seconds), start_(std::chrono::steady_clock::now()) {}
  ~Criterion() {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    bool ok = !::testing::Test::HasFailure() && secs < budget_;
    std::printf("criterion %2d (%s): %s (%.2f s, budget %.0f s)\n", id_, name_,
                ok ? "PASS" : "FAIL", secs, budget_);
    EXPECT_LT(secs, budget_) << "runtime budget exceeded";
  }

 private:
  int id_;
  const char* name_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

// The published list of all odd primes below 10000 satisfying both
// conditions of the odd-prime criterion.
const std::vector<std::uint64_t> kCertifiedPrimes{
    3, 11, 71, 127, 149, 151, 173, 233, 283, 293, 313, 383,
    397, 419, 443, 461, 569, 607, 647, 719, 761, 787, 947, 971,
    983, 1051, 1213, 1231, 1237, 1321, 1327, 1361, 1367, 1439, 1453, 1481,
    1499, 1511, 1549, 1553, 1601, 1741, 1759, 1889, 1949, 1999, 2003, 2027,
    2029, 2251, 2267, 2287, 2393, 2399, 2423, 2441, 2551, 2557, 2647, 2677,
    2683, 2689, 2711, 2741, 2797, 2843, 3001, 3037, 3079, 3307, 3433, 3449,
    3457, 3491, 3559, 3571, 3581, 3593, 3697, 3761, 3797, 3907, 3967, 4001,
    4003, 4079, 4099, 4133, 4139, 4273, 4289, 4397, 4457, 4567, 4637, 4639,
    4643, 4789, 4801, 4817, 4831, 4909, 4943, 5003, 5011, 5023, 5113, 5197,
    5281, 5297, 5303, 5351, 5407, 5413, 5477, 5573, 5623, 5849, 5879, 5927,
    6037, 6073, 6089, 6091, 6121, 6229, 6379, 6619, 6719, 6761, 6779, 6791,
    6833, 6883, 6907, 6961, 6983, 7151, 7187, 7229, 7297, 7307, 7411, 7451,
    7457, 7489, 7541, 7547, 7561, 7573, 7589, 7621, 7673, 7681, 7757, 7853,
    7867, 7949, 8101, 8111, 8117, 8191, 8209, 8231, 8233, 8243, 8311, 8443,
    8527, 8581, 8623, 8681, 8707, 8731, 8761, 8863, 8867, 8963, 9103, 9109,
    9127, 9133, 9137, 9187, 9241, 9391, 9397, 9437, 9521, 9533, 9623, 9791,
    9811, 9887, 9901, 9907, 9923, 9941};

struct TableRow {
  int n;
  std::vector<long long> coeffs;  // ascending
};

// Reduced polynomials for n = 2..15 (14 rows).
const std::vector<TableRow> kTildeTable{
    {2, {1}},
    {3, {1}},
    {4, {1}},
    {5, {1}},
    {6, {2, -6, 15, -20, 15, -6, 2}},
    {7, {1}},
    {8, {1, -3, 10, -15, 10, -3, 1}},
    {9, {3, -9, 19, -23, 19, -9, 3}},
    {10, {2, -6, 27, -44, 27, -6, 2}},
    {11, {1, -3, 7, -9, 7, -3, 1}},
    {12, {2, -12, 66, -220, 495, -792, 924, -792, 495, -220, 66, -12, 2}},
    {13, {1, -3, 8, -11, 8, -3, 1}},
    {14, {2, -12, 77, -275, 649, -1078, 1276, -1078, 649, -275, 77, -12, 2}},
    {15, {15, -90, 365, -1000, 2003, -3002, 3433, -3002, 2003, -1000, 365, -90, 15}},
};

std::vector<Rational> squarefree_grid() {
  std::vector<Rational> grid;
  for (long long p = 1; p <= 10; ++p)
    for (long long q = 1; q <= 10; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (p == q) continue;  // excludes +-1; zero never occurs with p >= 1
      grid.push_back(rat(p, q));
      grid.push_back(rat(-p, q));
    }
  return grid;
}

int euler_phi(int d) {
  int phi = d;
  for (auto [p, e] : kappa::factor_u64(static_cast<std::uint64_t>(d)))
    phi = phi / static_cast<int>(p) * (static_cast<int>(p) - 1);
  return phi;
}

}  // namespace

TEST(Acceptance, Criterion01_KTildeTable) {
  Criterion c(1, "ktilde table n=2..15", 1.0);
  ASSERT_EQ(kTildeTable.size(), 14u);
  for (const auto& row : kTildeTable) {
    auto rec = kappa::k_tilde(row.n);
    std::vector<BigInt> want(row.coeffs.begin(), row.coeffs.end());
    EXPECT_EQ(rec.poly, IntPoly(want)) << "n=" << row.n;
  }
}

TEST(Acceptance, Criterion02_PrimeScan) {
  Criterion c(2, "prime scan below 10000", 60.0);
  auto scan = kappa::scan_primes(10000, 1);
  EXPECT_EQ(scan.certified, kCertifiedPrimes);
  EXPECT_EQ(scan.exceptions, (std::vector<std::uint64_t>{19}));
  auto t0 = std::chrono::steady_clock::now();
  auto par = kappa::scan_primes(10000, 8);
  double par_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(par_secs, 10.0);
  EXPECT_EQ(par.certified, scan.certified);
  EXPECT_EQ(par.exceptions, scan.exceptions);
  EXPECT_EQ(par.skipped, scan.skipped);
}

TEST(Acceptance, Criterion03_P11Example) {
  Criterion c(3, "p = 11 certificate", 1.0);
  auto cert = kappa::certify_p_power(11);
  EXPECT_TRUE(cert.verdict);
  EXPECT_EQ(cert.lookup("alpha"), "2");
  // Exact value through the independent dense-polynomial route.
  BigInt exact = kappa::k_poly(66).eval(2);
  EXPECT_EQ(exact, BigInt("73786976294838206466"));
  EXPECT_EQ(exact % 121, 11);
  EXPECT_NE(exact % 121, 0);
  EXPECT_EQ(cert.lookup("residue_mod_p2"), "11");
}

TEST(Acceptance, Criterion04_LocalizationTilde) {
  Criterion c(4, "a = -1 localization n <= 60", 30.0);
  for (int n = 2; n <= 60; ++n) {
    int d = kappa::d_n_formula(n);
    if (d == 0) continue;
    auto rep = kappa::localize_report(KFamilySpec(rat(-1), n), 1e-10, 1e-6);
    EXPECT_TRUE(rep.verdict) << "n=" << n;
    EXPECT_EQ(rep.counts.at(kappa::CurveLabel::RayL), d / 3) << "n=" << n;
    EXPECT_EQ(rep.counts.at(kappa::CurveLabel::ArcA1), d / 3) << "n=" << n;
    EXPECT_EQ(rep.counts.at(kappa::CurveLabel::ArcA2), d / 3) << "n=" << n;
    for (const auto& r : rep.roots) EXPECT_LT(r.distance, 1e-6) << "n=" << n;
  }
}

TEST(Acceptance, Criterion05_LocalizationLine) {
  Criterion c(5, "|a| <= 1/2 localization n <= 50", 30.0);
  for (auto a : {rat(1, 2), rat(-1, 2), rat(1, 3), rat(-2, 5)}) {
    for (int n = 2; n <= 50; ++n) {
      auto rep = kappa::localize_report(KFamilySpec(a, n), 1e-10, 1e-6);
      EXPECT_TRUE(rep.verdict) << a.str() << " n=" << n;
      EXPECT_EQ(rep.counts.at(kappa::CurveLabel::MidLine), 2 * (n / 2)) << a.str() << " n=" << n;
      for (const auto& r : rep.roots)
        EXPECT_LT(std::abs(r.z.real() - 0.5), 1e-6) << a.str() << " n=" << n;
    }
  }
}

TEST(Acceptance, Criterion06_DiscriminantFormula) {
  Criterion c(6, "discriminant formula m = 1..4", 30.0);
  for (int m = 1; m <= 4; ++m) {
    auto rep = kappa::disc_report(m);  // throws unless disc/base is a perfect square
    EXPECT_EQ(rep.disc, rep.base * rep.s_abs * rep.s_abs) << "m=" << m;
    double s = rep.s_abs.convert_to<double>();
    EXPECT_NEAR(std::abs(rep.s_numeric), s, 1e-4 * s) << "m=" << m;
  }
  auto rep1 = kappa::disc_report(1);
  EXPECT_EQ(rep1.disc, BigInt(-186297408));
  EXPECT_EQ(rep1.s_abs, 11);
}

TEST(Acceptance, Criterion07_SquarefreeSuite) {
  Criterion c(7, "square-freeness grid", 60.0);
  for (const auto& a : squarefree_grid())
    for (int n = 2; n <= 30; ++n)
      EXPECT_TRUE(kappa::is_squarefree_poly(kappa::k_general(KFamilySpec(a, n))))
          << a.str() << " n=" << n;
  for (int n = 3; n <= 29; n += 2)
    EXPECT_TRUE(kappa::is_squarefree_poly(kappa::k_general(KFamilySpec(rat(1), n)))) << "n=" << n;
}

TEST(Acceptance, Criterion08_SymmetrySuite) {
  Criterion c(8, "symmetry suite", 60.0);
  for (int n = 2; n <= 100; ++n) {
    EXPECT_TRUE(kappa::eq_symkn_check(n)) << "n=" << n;
    if (kappa::d_n_formula(n) > 0) EXPECT_TRUE(kappa::verify_sym_identity(n)) << "n=" << n;
  }
  for (int n = 2; n <= 60; ++n) {
    if (kappa::d_n_formula(n) == 0) continue;
    auto roots = kappa::complex_roots(kappa::k_tilde(n).poly, 1e-10);
    for (auto z : roots) {
      for (const kappa::Moebius& m : kappa::HGroup::standard().elements) {
        std::complex<double> w = m.apply(z);
        double best = 1e100;
        for (auto r : roots) best = std::min(best, std::abs(w - r));
        EXPECT_LT(best, 1e-6) << "n=" << n;
      }
    }
  }
}

TEST(Acceptance, Criterion09_ModPTrichotomy) {
  Criterion c(9, "mod-p trichotomy", 30.0);
  for (int n : {6, 8, 9, 10, 11, 12, 13, 14, 15, 18, 20}) {
    IntPoly kt = kappa::k_tilde(n).poly;
    for (std::uint64_t p : kappa::primes_below(50)) {
      auto cls = kappa::symmetric_reduction_trichotomy(kt, p);
      EXPECT_TRUE(cls == kappa::Trichotomy::ZeroReduction ||
                  cls == kappa::Trichotomy::ReducibleModP)
          << "n=" << n << " p=" << p;
    }
  }
}

TEST(Acceptance, Criterion10_EisensteinTwoPowerCertificates) {
  Criterion c(10, "Eisenstein and two-power certificates", 10.0);
  for (int m : {2, 3, 5, 6, 9, 15})  // 6m in {12, 18, 30, 36, 54, 90}
    EXPECT_TRUE(kappa::certify_eisenstein3(m).verdict) << "m=" << m;
  for (int m : {1, 2, 4, 8}) EXPECT_TRUE(kappa::certify_two_power(m).verdict) << "m=" << m;
  EXPECT_FALSE(kappa::certify_two_power(3).verdict);
}

TEST(Acceptance, Criterion11_CyclotomicCoprimality) {
  Criterion c(11, "cyclotomic coprimality and homogenised identities", 30.0);
  for (int n = 2; n <= 30; ++n) {
    if (kappa::d_n_formula(n) == 0) continue;
    EXPECT_TRUE(kappa::cyclotomic_coprime(n, 105)) << "n=" << n;
  }
  for (int d = 3; d <= 60; ++d)
    EXPECT_EQ(kappa::phi_pair(d).degree(), euler_phi(d)) << "d=" << d;
  for (int n = 3; n <= 40; ++n) EXPECT_TRUE(kappa::phi_homog_identities(n)) << "n=" << n;
}

TEST(Acceptance, Criterion12_FltDeskCheck) {
  Criterion c(12, "FLT desk check", 10.0);
  for (const auto& a : squarefree_grid())
    for (int n = 3; n <= 15; n += 2)
      EXPECT_TRUE(kappa::rational_root_scan(kappa::k_general(KFamilySpec(a, n))).empty())
          << a.str() << " n=" << n;
}
