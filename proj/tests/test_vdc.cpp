#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hypfib/vdc.hpp"
#include "oracles.hpp"

using namespace hypfib;

TEST(Vdc, FactorsMatchLiteralS) {
  const Surface s = fixture::RawSurface(61, 0);
  const VdcContext v(s, 3, 5, 7, 11, 2, 77);
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      const cplx got = (v.S0(a, b) * v.S1(a, b)).value();
      const cplx want = oracle::S(15 * 77, 2, a, b, s);
      EXPECT_NEAR(got.real(), want.real(), 1e-6);
      EXPECT_NEAR(got.imag(), want.imag(), 1e-6);
    }
  }
}

TEST(Vdc, UMatchesDirectSum) {
  const Surface s = fixture::RawSurface(61, 0);
  const VdcContext v(s, 3, 5, 7, 11, 2, 80);
  const SumValue U = VdcU(v);
  const SumValue direct = SumU(15 * 77, 2, 80, s);
  EXPECT_NEAR(U.re, direct.re, 1e-6 * (1 + direct.abs()));
  EXPECT_NEAR(U.im, direct.im, 1e-6 * (1 + direct.abs()));
}

TEST(Vdc, ReconstructionAndInequalities) {
  for (int k = 0; k < 3; ++k) {
    const Surface s = SeededSurface(62, k);
    const VdcContext v(s, 3, 7, 5, 11, 1 + k, 60 + 10 * k);
    const VdcReport rep = AuditVdc(v);
    EXPECT_LE(rep.reconstruction_residual, 1e-6 * (1 + rep.lhs));
    EXPECT_TRUE(rep.differencing_union);
    EXPECT_TRUE(rep.sigma2_ok);
    EXPECT_LE(rep.sigma1, rep.sigma1_union + 1e-9);
  }
}

TEST(Vdc, H4Rule) {
  const VdcContext a(SampleSurface(), 3, 7, 5, 11, 1, 60);
  const VdcContext b(SampleSurface(), 3, 7, 5, 11, 1, 60, HRule::kFloor4B);
  EXPECT_EQ(a.H(), 1);
  EXPECT_EQ(b.H(), 4);
}

TEST(Vdc, A0IsTruncated) {
  const VdcContext v(SampleSurface(), 3, 7, 5, 11, 1, 60);
  EXPECT_EQ(v.A0(61, 0).abs(), 0.0);
  EXPECT_EQ(v.A0(60, -60).abs(), v.S0(60, -60).abs());
  EXPECT_TRUE(v.InBox(-60, 60));
  EXPECT_FALSE(v.InBox(0, 61));
}

TEST(Vdc, RejectsBadInput) {
  EXPECT_THROW(VdcContext(SampleSurface(), 3, 3, 5, 11, 1, 60), InputError);
  EXPECT_THROW(VdcContext(SampleSurface(), 3, 5, 5, 7, 1, 60), InputError);
  EXPECT_THROW(VdcContext(SampleSurface(), 3, 7, 5, 11, 1, 54), InputError);
  EXPECT_THROW(VdcContext(SampleSurface(), 3, 9, 5, 11, 1, 60), InputError);
  const VdcContext v(SampleSurface(), 3, 7, 5, 11, 1, 60);
  EXPECT_THROW(SumT(v, 0, 0), InputError);
}
