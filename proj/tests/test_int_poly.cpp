#include "kappa/int_poly.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "kappa/kfamily.hpp"
#include "oracles.hpp"

using kappa::BigInt;
using kappa::IntPoly;
using kappa::Moebius;

namespace {

// Deterministic small random polynomials for property tests.
IntPoly random_poly(std::mt19937& rng, int max_deg, int max_coeff, bool nonzero = true) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
  for (;;) {
    int d = deg_dist(rng);
    std::vector<BigInt> c(d + 1);
    for (auto& v : c) v = coeff_dist(rng);
    IntPoly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

const IntPoly kK6{2, -6, 15, -20, 15, -6, 2};

}  // namespace

TEST(Content, PaperAndDerivedValues) {
  EXPECT_EQ(kappa::content(kK6), 1);
  EXPECT_EQ(kappa::content(IntPoly{5}), 5);
  IntPoly k9{0, -9, 36, -84, 126, -126, 84, -36, 9};
  EXPECT_EQ(kappa::content(k9), 3);
  EXPECT_THROW(kappa::content(IntPoly{}), std::invalid_argument);
}

TEST(Content, GaussLemmaMultiplicative) {
  std::mt19937 rng(12345);
  for (int it = 0; it < 300; ++it) {
    IntPoly p = random_poly(rng, 5, 8);
    IntPoly q = random_poly(rng, 5, 8);
    EXPECT_EQ(kappa::content(p * q), kappa::content(p) * kappa::content(q));
  }
}

TEST(SubresultantGcd, KFamilyCases) {
  IntPoly k7 = kappa::k_poly(7);
  IntPoly quad{1, -1, 1};
  EXPECT_EQ(kappa::subresultant_gcd(k7, k7.derivative()), quad);
  EXPECT_EQ(oracle::primitive_prs_gcd(k7, k7.derivative()), quad);
  EXPECT_EQ(kappa::subresultant_gcd(kK6, kK6.derivative()), IntPoly{1});
  IntPoly p{-6, 0, 9};
  EXPECT_EQ(kappa::subresultant_gcd(p, IntPoly{}), (IntPoly{-2, 0, 3}));
  EXPECT_THROW(kappa::subresultant_gcd(IntPoly{}, IntPoly{}), std::invalid_argument);
}

TEST(SubresultantGcd, MatchesPrimitivePrsOracle) {
  std::mt19937 rng(777);
  for (int it = 0; it < 200; ++it) {
    IntPoly p = random_poly(rng, 6, 6);
    IntPoly q = random_poly(rng, 6, 6);
    IntPoly common = random_poly(rng, 2, 3);
    EXPECT_EQ(kappa::subresultant_gcd(p * common, q * common),
              oracle::primitive_prs_gcd(p * common, q * common));
  }
}

TEST(Resultant, SmallCases) {
  EXPECT_EQ(kappa::resultant(IntPoly{-2, 1}, IntPoly{1, 0, 1}), 5);
  IntPoly p{3, 1, 4, 1};
  EXPECT_EQ(kappa::resultant(p, IntPoly{7}), BigInt(343));
  EXPECT_EQ(kappa::resultant(kK6, kK6.derivative()), BigInt(372594816));
  EXPECT_THROW(kappa::resultant(p, IntPoly{}), std::invalid_argument);
}

TEST(Resultant, MatchesSylvesterOracle) {
  std::mt19937 rng(4242);
  for (int it = 0; it < 250; ++it) {
    IntPoly p = random_poly(rng, 6, 9);
    IntPoly q = random_poly(rng, 6, 9);
    if (p.degree() < 1 && q.degree() < 1) continue;
    EXPECT_EQ(kappa::resultant(p, q), oracle::sylvester_resultant(p, q))
        << p.str() << " ; " << q.str();
  }
  // shared factors force zero
  for (int it = 0; it < 60; ++it) {
    IntPoly p = random_poly(rng, 4, 5);
    IntPoly q = random_poly(rng, 4, 5);
    IntPoly common = random_poly(rng, 2, 4);
    if (common.degree() < 1) continue;
    EXPECT_EQ(kappa::resultant(p * common, q * common), 0);
  }
}

TEST(Resultant, ZeroIffGcdNonconstant) {
  std::mt19937 rng(90125);
  for (int it = 0; it < 200; ++it) {
    IntPoly p = random_poly(rng, 5, 6);
    IntPoly q = random_poly(rng, 5, 6);
    if (p.degree() < 1 || q.degree() < 1) continue;
    bool res_zero = kappa::resultant(p, q) == 0;
    bool gcd_big = kappa::subresultant_gcd(p, q).degree() >= 1;
    EXPECT_EQ(res_zero, gcd_big);
  }
}

TEST(Discriminant, KnownValues) {
  EXPECT_EQ(kappa::discriminant(IntPoly{1, -1, 1}), -3);
  EXPECT_EQ(kappa::discriminant(IntPoly{-1, 0, 1}), 4);
  EXPECT_EQ(kappa::discriminant(kK6), BigInt(-186297408));
  EXPECT_THROW(kappa::discriminant(IntPoly{3}), std::invalid_argument);
}

TEST(Discriminant, NonzeroIffSquarefree) {
  std::mt19937 rng(5150);
  for (int it = 0; it < 150; ++it) {
    IntPoly p = random_poly(rng, 5, 6);
    if (p.degree() < 1) continue;
    bool disc_nonzero = kappa::discriminant(p) != 0;
    bool gcd_const = kappa::subresultant_gcd(p, p.derivative()).degree() == 0;
    EXPECT_EQ(disc_nonzero, gcd_const);
  }
}

TEST(SubstitutePair, NamedCases) {
  IntPoly quad{1, -1, 1};
  EXPECT_EQ(kappa::substitute_pair(quad, Moebius{-1, 1, 0, 1}), quad);
  EXPECT_EQ(kappa::substitute_pair(kK6, Moebius{0, 1, 1, 0}), kK6);
  EXPECT_EQ(kappa::substitute_pair(IntPoly{1, 2}, Moebius{0, 1, 1, 0}), (IntPoly{2, 1}));
  EXPECT_THROW(kappa::substitute_pair(quad, Moebius{1, 1, 1, 1}), std::invalid_argument);
}

TEST(SubstitutePair, HCompositionExact) {
  // For |det| = 1 maps and polynomials without roots at 0 or 1 the chained
  // substitution equals the substitution of the matrix product exactly.
  const std::array<Moebius, 6> h{Moebius{1, 0, 0, 1},  Moebius{-1, 1, 0, 1}, Moebius{0, 1, 1, 0},
                                 Moebius{1, 0, 1, -1}, Moebius{0, 1, -1, 1}, Moebius{1, -1, 1, 0}};
  std::mt19937 rng(31415);
  for (int it = 0; it < 40; ++it) {
    IntPoly p = random_poly(rng, 5, 7);
    if (p.degree() < 1 || p.eval(0) == 0 || p.eval(1) == 0) continue;
    for (const Moebius& m1 : h) {
      for (const Moebius& m2 : h) {
        IntPoly chained = kappa::substitute_pair(kappa::substitute_pair(p, m1), m2);
        EXPECT_EQ(chained, kappa::substitute_pair(p, m1 * m2));
      }
    }
  }
}

TEST(Cyclotomic, SmallIndicesAndProduct) {
  EXPECT_EQ(kappa::cyclotomic(1), (IntPoly{-1, 1}));
  EXPECT_EQ(kappa::cyclotomic(3), (IntPoly{1, 1, 1}));
  EXPECT_EQ(kappa::cyclotomic(12), (IntPoly{1, 0, -1, 0, 1}));
  for (int n = 1; n <= 64; ++n) {
    IntPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * kappa::cyclotomic(d);
    EXPECT_EQ(prod, IntPoly::monomial(1, n) - IntPoly{1}) << "n=" << n;
  }
}

TEST(SquarefreeInteger, Values) {
  EXPECT_TRUE(kappa::squarefree_integer(2));
  EXPECT_TRUE(kappa::squarefree_integer(15));
  EXPECT_FALSE(kappa::squarefree_integer(12));
  EXPECT_TRUE(kappa::squarefree_integer(1));
  EXPECT_TRUE(kappa::squarefree_integer(-15));
  EXPECT_THROW(kappa::squarefree_integer(0), std::invalid_argument);
}

TEST(IntPoly, ShiftAndEval) {
  IntPoly p{1, 0, 1};  // x^2 + 1
  EXPECT_EQ(p.shift(1), (IntPoly{2, 2, 1}));
  EXPECT_EQ(p.eval(BigInt(3)), 10);
  EXPECT_EQ(p.eval_homogeneous(BigInt(1), BigInt(2)), 5);  // 4*(1/4+1)
  EXPECT_EQ((IntPoly{0, -3, 3}).eval_homogeneous(BigInt(1), BigInt(1)), 0);
}
