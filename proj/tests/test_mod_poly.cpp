#include "kappa/mod_poly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "kappa/kfamily.hpp"
#include "oracles.hpp"

using kappa::IntPoly;
using kappa::ModPoly;
using kappa::Trichotomy;

TEST(Reduce, NamedValues) {
  // K_12 mod 2 = x^8 + x^4
  ModPoly k12mod2 = kappa::reduce(kappa::k_poly(12), 2);
  std::vector<std::uint64_t> want(9, 0);
  want[4] = want[8] = 1;
  EXPECT_EQ(k12mod2, ModPoly(2, want));
  // K_6 mod 3 = 2(x-2)^6
  ModPoly xm2(3, {1, 1});  // x - 2 = x + 1 mod 3
  ModPoly pow = xm2;
  for (int i = 1; i < 6; ++i) pow = pow * xm2;
  EXPECT_EQ(kappa::reduce(kappa::k_poly(6), 3), pow.scaled(2));
  EXPECT_EQ(kappa::reduce(IntPoly{3, 1}, 3), ModPoly(3, {0, 1}));
  EXPECT_THROW(kappa::reduce(IntPoly{1, 1}, 6), std::invalid_argument);
}

TEST(RootsModp, NamedValues) {
  auto r11 = kappa::roots_modp(kappa::reduce(kappa::k_poly(6), 11));
  ASSERT_EQ(r11.size(), 3u);
  EXPECT_EQ(r11[0], std::make_pair(std::uint64_t(2), 2));
  EXPECT_EQ(r11[1], std::make_pair(std::uint64_t(6), 2));
  EXPECT_EQ(r11[2], std::make_pair(std::uint64_t(10), 2));
  auto r3 = kappa::roots_modp(kappa::reduce(kappa::k_poly(6), 3));
  ASSERT_EQ(r3.size(), 1u);
  EXPECT_EQ(r3[0], std::make_pair(std::uint64_t(2), 6));
  EXPECT_TRUE(kappa::roots_modp(ModPoly(3, {1, 0, 1})).empty());
}

TEST(RootsModp, MultiplicityTotalsBounded) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cd(0, 12);
  for (int it = 0; it < 100; ++it) {
    std::vector<std::uint64_t> c(1 + it % 7);
    for (auto& v : c) v = cd(rng);
    c.push_back(1 + cd(rng) % 12);
    ModPoly f(13, std::move(c));
    int total = 0;
    for (auto [root, mult] : kappa::roots_modp(f)) total += mult;
    EXPECT_LE(total, f.degree());
  }
}

TEST(IsIrreducibleModp, NamedValues) {
  EXPECT_TRUE(kappa::is_irreducible_modp(ModPoly(5, {1, 4, 1})));   // x^2-x+1 mod 5
  EXPECT_FALSE(kappa::is_irreducible_modp(ModPoly(7, {1, 6, 1})));  // root at 3
  EXPECT_FALSE(kappa::is_irreducible_modp(ModPoly(2, {1, 0, 1})));  // (x+1)^2
}

TEST(IsIrreducibleModp, AgreesWithExhaustiveSearch) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int deg = 1; deg <= 4; ++deg) {
      // Exhaustive for p <= 3; deterministic stride otherwise to keep the
      // case count reasonable.
      std::uint64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      std::uint64_t step = (p <= 3) ? 1 : (p == 5 ? 3 : 11);
      for (std::uint64_t code = 0; code < count; code += step) {
        std::vector<std::uint64_t> c(deg + 1, 0);
        std::uint64_t v = code;
        for (int i = 0; i < deg; ++i) { c[i] = v % p; v /= p; }
        c[deg] = 1;
        ModPoly f(p, std::move(c));
        EXPECT_EQ(kappa::is_irreducible_modp(f), oracle::brute_force_irreducible_modp(f))
            << "p=" << p << " f=" << f.str();
      }
    }
  }
}

TEST(SplitsCompletely, NamedValues) {
  EXPECT_TRUE(kappa::splits_completely(kappa::reduce(kappa::k_poly(6), 11)));
  EXPECT_FALSE(kappa::splits_completely(kappa::reduce(kappa::k_poly(6), 5)));
  EXPECT_TRUE(kappa::splits_completely(ModPoly(7, {0, 0, 1})));
}

TEST(SplitsCompletely, K6SplitsWheneverItHasARoot) {
  for (std::uint64_t p : kappa::primes_below(1000)) {
    if (p == 2) continue;
    ModPoly k6 = kappa::reduce(kappa::k_poly(6), p);
    if (kappa::roots_modp(k6).empty()) continue;
    EXPECT_TRUE(kappa::splits_completely(k6)) << "p=" << p;
  }
}

TEST(Eisenstein, ShiftedFamilyChecks) {
  EXPECT_TRUE(kappa::eisenstein_check(kappa::k_poly(12), 3, -1));
  EXPECT_TRUE(kappa::eisenstein_check(IntPoly{1, 0, 1}, 2, 1));
  // 6 = 3 + 3 puts K_6 itself in the Eisenstein family: K_6(x-1) has all
  // non-leading coefficients divisible by 3 and constant term 66 = 3 mod 9.
  EXPECT_TRUE(kappa::eisenstein_check(kappa::k_poly(6), 3, -1));
  EXPECT_EQ(kappa::k_poly(6).eval(-1), 66);
  EXPECT_FALSE(kappa::eisenstein_check(kappa::k_poly(8), 3, -1));
}

TEST(Trichotomy, NamedValues) {
  EXPECT_EQ(kappa::symmetric_reduction_trichotomy(kappa::k_tilde(6).poly, 5),
            Trichotomy::ReducibleModP);
  EXPECT_EQ(kappa::symmetric_reduction_trichotomy(IntPoly{3, -3, 3}, 3),
            Trichotomy::ZeroReduction);
  EXPECT_EQ(kappa::symmetric_reduction_trichotomy(IntPoly{1, -1, 1}, 5),
            Trichotomy::UnitTimesCyclotomicQuadratic);
  EXPECT_THROW(kappa::symmetric_reduction_trichotomy(IntPoly{1, 1}, 5), std::invalid_argument);
}

TEST(Trichotomy, KTildeNeverIrreducibleSubset) {
  for (int n : {6, 8, 9}) {
    IntPoly kt = kappa::k_tilde(n).poly;
    for (std::uint64_t p : kappa::primes_below(20)) {
      auto cls = kappa::symmetric_reduction_trichotomy(kt, p);
      EXPECT_NE(cls, Trichotomy::UnitTimesCyclotomicQuadratic) << "n=" << n << " p=" << p;
    }
  }
}

TEST(CoprimeCertificate, SoundOnCoprimeInputs) {
  EXPECT_TRUE(kappa::coprime_certificate_modp(IntPoly{1, 0, 1}, IntPoly{-1, 1}));
  // shared factor: no prime can certify coprimality
  IntPoly common{1, 1, 1};
  EXPECT_FALSE(kappa::coprime_certificate_modp(common * IntPoly{1, 1}, common * IntPoly{3, 1}));
}
