#include <gtest/gtest.h>

#include "hypfib/ff.hpp"
#include "hypfib/poly.hpp"
#include "oracles.hpp"

using namespace hypfib;

TEST(Ff, LegendreMatchesEulerCriterion) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    for (std::int64_t a = -30; a < 130; ++a) EXPECT_EQ(Legendre(a, p), oracle::Legendre(a, p)) << a << " " << p;
  }
}

TEST(Ff, JacobiIsProductOverFactors) {
  for (std::uint64_t r : {1, 15, 21, 105, 1155, 3 * 7 * 11 * 13}) {
    for (std::int64_t a = -50; a < 200; a += 7) EXPECT_EQ(Jacobi(a, r), oracle::Jacobi(a, r));
  }
}

TEST(Ff, CrtData) {
  EXPECT_EQ(CrtData(7, 11), std::make_pair(std::uint64_t{2}, std::uint64_t{8}));
  const auto [a, b] = CrtData(1, 9);
  EXPECT_EQ(a, 0u);
  EXPECT_EQ(b, 1u);
  EXPECT_THROW(CrtData(6, 9), InputError);
}

TEST(Ff, InvModRejectsNonUnits) {
  EXPECT_EQ(InvMod(3, 7), 5u);
  EXPECT_EQ(InvMod(-1, 7), 6u);
  EXPECT_THROW(InvMod(14, 21), InputError);
}

TEST(Ff, PrimalityAndSquarefree) {
  EXPECT_TRUE(IsPrime(2));
  EXPECT_TRUE(IsPrime(59));
  EXPECT_FALSE(IsPrime(1));
  EXPECT_FALSE(IsPrime(91));
  EXPECT_TRUE(IsSquarefree(105));
  EXPECT_FALSE(IsSquarefree(45));
  EXPECT_EQ(PrimeFactors(1155), (std::vector<std::uint64_t>{3, 5, 7, 11}));
}

TEST(Ff, NonSquareIsLeast) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 23}) EXPECT_EQ(NonSquare(p), static_cast<std::uint64_t>(oracle::NonResidue(p)));
}

TEST(Ff, ExtensionFieldAxioms) {
  for (std::uint64_t p : {5, 7, 11}) {
    const ExtCtx c(p, 2);
    ASSERT_EQ(c.q(), p * p);
    EXPECT_EQ(c.mul(c.theta(), c.theta()), c.from_int(static_cast<std::int64_t>(c.gamma())));
    for (Fq x = 1; x < c.q(); ++x) EXPECT_EQ(c.mul(x, c.inv(x)), c.one());
    // Frobenius is an automorphism, so the trace is additive and lands in F_p.
    for (Fq x = 0; x < c.q(); x += 3) {
      for (Fq y = 0; y < c.q(); y += 5) EXPECT_EQ(c.trace(c.add(x, y)), (c.trace(x) + c.trace(y)) % p);
    }
    EXPECT_THROW(c.inv(0), InputError);
  }
}

TEST(Ff, PowerCountTableSumsToQ) {
  const ExtCtx c(5, 2);
  const auto cnt = PowerCountTable(c, 6);
  std::uint64_t total = 0;
  for (auto k : cnt) total += k;
  EXPECT_EQ(total, 25u);
  EXPECT_EQ(cnt[0], 1u);
  // gcd(6, 24) = 6 sixth roots of unity.
  EXPECT_EQ(cnt[1], 6u);
}

TEST(Ff, PolyDivisionAndGcd) {
  const std::uint64_t p = 7;
  const PolyP a{1, 2, 1};  // (x + 1)^2
  const PolyP b{1, 1};
  const auto [quo, rem] = PolyDivMod(a, b, p);
  EXPECT_EQ(quo, (PolyP{1, 1}));
  EXPECT_TRUE(rem.empty());
  EXPECT_EQ(PolyGcd(a, PolyDerivative(a, p), p), (PolyP{1, 1}));
  EXPECT_THROW(PolyDivMod(a, PolyP{}, p), InputError);
  EXPECT_EQ(PolyEval(PolyPow(b, 3, p), 2, p), 27 % 7u);
}

TEST(Ff, SumValueTolerance) {
  SumValue a(cplx(1.0, 0.0), 10), b(cplx(1.0 + 1e-9, 0.0), 10);
  EXPECT_TRUE(ApproxEqual(a, b));
  EXPECT_FALSE(ApproxEqual(a, cplx(1.1, 0.0)));
}
