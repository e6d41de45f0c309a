#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hypfib/forms.hpp"
#include "hypfib/surface_io.hpp"
#include "oracles.hpp"

using namespace hypfib;

TEST(Forms, DerivativeOfMonomial) {
  const BinaryForm F = BinaryForm::Monomial(6, 2, 5);  // 5 S1^4 S2^2
  EXPECT_EQ(DerivativeForm(F, Axis::kS1), BinaryForm::Monomial(5, 2, 20));
  EXPECT_EQ(DerivativeForm(F, Axis::kS2), BinaryForm::Monomial(5, 1, 10));
  EXPECT_TRUE(DerivativeForm(BinaryForm::Monomial(0, 0, 3), Axis::kS1).IsZero());
}

TEST(Forms, EvalMatchesOracle) {
  const Surface s = fixture::RawSurface(1, 0);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) EXPECT_EQ(s.g.Eval(a, b), oracle::EvalForm(s.g, a, b));
  }
}

TEST(Forms, Separability) {
  EXPECT_TRUE(IsSeparableModP(SampleSurface().g, 5));
  EXPECT_EQ(CheckSeparableModP(fixture::SquaredFactorSurface().g, 7).reason, SepReason::kRepeatedFinite);
  // S1 S2^5: the root S2 = 0 has multiplicity 5.
  const auto rep = CheckSeparableModP(BinaryForm(6, {0, 1, 0, 0, 0, 0, 0}), 7);
  EXPECT_FALSE(rep.separable);
  EXPECT_EQ(CheckSeparableModP(BinaryForm(6, {7, 0, 0, 0, 0, 0, 14}), 7).reason, SepReason::kZeroModP);
}

TEST(Forms, ProjectiveRootsOfSample) {
  const ExtCtx c(5, 1);
  const auto roots = ProjectiveRoots(SampleSurface().g, c);
  for (const auto& r : roots) EXPECT_EQ(EvalForm(SampleSurface().g, r.s1, r.s2, c), 0u);
  const ExtCtx c2(5, 2);
  EXPECT_EQ(ProjectiveRoots(SampleSurface().g, c2).size(), 6u);
}

TEST(Forms, SmoothnessAgreesWithGradientSearch) {
  std::vector<Surface> surfaces{SampleSurface(), fixture::SquaredFactorSurface()};
  for (int k = 0; k < 12; ++k) surfaces.push_back(fixture::RawSurface(11, k));
  int singular_seen = 0;
  for (const auto& s : surfaces) {
    for (std::uint64_t p : {5, 7, 11}) {
      const bool oracle_singular = oracle::HasSingularPoint(s, p, 1) || oracle::HasSingularPoint(s, p, 2);
      const bool smooth = IsSmoothModP(s, p);
      singular_seen += oracle_singular;
      // A singular point over F_{p^2} is always found; one over a larger field only
      // shows up in IsSmoothModP.
      if (oracle_singular) {
        EXPECT_FALSE(smooth);
      }
    }
  }
  EXPECT_GT(singular_seen, 0);
}

TEST(Forms, SmoothnessRejectsBadPrimes) {
  EXPECT_THROW(IsSmoothModP(SampleSurface(), 3), InputError);  // divides 2n
  EXPECT_FALSE(GoodPrime(SampleSurface(), 3, false));
  EXPECT_TRUE(GoodPrime(SampleSurface(), 5, true));
  EXPECT_FALSE(GoodPrime(SampleSurface(), 7, true));  // 7 = 1 mod 3
  EXPECT_TRUE(GoodPrime(SampleSurface(), 7, false));
}

TEST(Forms, ShiftedFormDerivative) {
  const ExtCtx c(11, 1);
  const Surface s = fixture::RawSurface(2, 3);
  const ShiftedForm F(s.g, 3, 5, c);
  // d/dT by a finite identity: F_h(s, t) as a polynomial in t over F_p.
  const PolyP line = RestrictToLine(s.g, 2, 7, 3, 5, 11);
  const PolyP d = PolyDerivative(line, 11);
  for (Fq t = 0; t < 11; ++t) {
    EXPECT_EQ(F.eval(2, 7, t), PolyEval(line, t, 11));
    EXPECT_EQ(F.d_dt(2, 7, t), PolyEval(d, t, 11));
  }
}

TEST(Forms, RootGradientDetIsAntisymmetric) {
  const ExtCtx c(5, 2);
  const auto roots = ProjectiveRoots(SampleSurface().g, c);
  ASSERT_GE(roots.size(), 2u);
  const Fq a = RootGradientDet(SampleSurface().g, roots[0], roots[1], c);
  const Fq b = RootGradientDet(SampleSurface().g, roots[1], roots[0], c);
  EXPECT_EQ(c.add(a, b), 0u);
  EXPECT_EQ(RootGradientDet(SampleSurface().g, roots[0], roots[0], c), 0u);
}

TEST(SurfaceIo, RoundTrip) {
  const Surface s = fixture::RawSurface(5, 1);
  EXPECT_EQ(ParseSurface(SurfaceToJson(s)).g, s.g);
  EXPECT_EQ(ParseSurface(SurfaceToJson(s)).f, s.f);
}

TEST(SurfaceIo, RejectsMalformed) {
  EXPECT_THROW(ParseSurface("{"), InputError);
  EXPECT_THROW(ParseSurface(R"({"n": 3, "f": ["0","0"], "g": ["1","0","0","0","0","0","1"]})"), InputError);
  EXPECT_THROW(ParseSurface(R"({"n": 2, "f": ["0","0","0"], "g": ["1","0","0","0","1"]})"), InputError);
  EXPECT_NO_THROW(ParseSurface(R"({"n": 3, "f": ["0","0","0","0","0"], "g": ["1","0","0","0","0","0","1"]})"));
}
