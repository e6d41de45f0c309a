#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "hypfib/moments.hpp"
#include "oracles.hpp"

using namespace hypfib;

TEST(Moments, HooleySumByDefinition) {
  const ExtCtx c(5, 2);
  std::vector<std::uint64_t> counts(25);
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] = (k * 7) % 11;
  for (Fq t : {0u, 1u, 7u, 24u}) {
    cplx want = 0;
    for (Fq tau = 0; tau < 25; ++tau) {
      // psi(t tau) = e_5(2 Re(t tau)), t tau computed by hand in F_5[w]/(w^2 - 2).
      const std::int64_t a = t % 5, b = t / 5, x = tau % 5, y = tau / 5;
      const std::int64_t re = oracle::Md(a * x + 2 * b * y, 5);
      want += static_cast<double>(counts[tau]) * oracle::E(2 * re, 5);
    }
    const SumValue got = HooleyS(c, counts, t);
    EXPECT_NEAR(got.re, want.real(), 1e-9);
    EXPECT_NEAR(got.im, want.imag(), 1e-9);
  }
  EXPECT_THROW(HooleyS(c, std::vector<std::uint64_t>(5), 0), InputError);
}

TEST(Moments, ParsevalOnRealCounts) {
  for (int r : {1, 2}) {
    const TauSpec spec = fixture::RandomSpec(SeededSurface(51, r), 5, r, 51, r);
    const auto counts = CountTable(spec, CountKind::kSix);
    const ParsevalCheck pc = Parseval(*spec.ctx, counts);
    EXPECT_LE(pc.residual(), 1e-3L);
  }
}

TEST(Moments, FiveAndSixVariableCountsBothAvailable) {
  const TauSpec spec = fixture::RandomSpec(SampleSurface(), 5, 1, 52, 0);
  const auto six = CountTable(spec, CountKind::kSix);
  const auto five = CountTable(spec, CountKind::kFive);
  ASSERT_EQ(six.size(), five.size());
  for (Fq tau = 0; tau < 5; ++tau) EXPECT_EQ(five[tau], CountN5(spec, tau));
}

TEST(Moments, ReportFields) {
  const TauSpec spec = fixture::RandomSpec(SampleSurface(), 5, 1, 53, 0);
  const MomentReport rep = MomentBoundReport(spec);
  EXPECT_EQ(rep.q, 5u);
  EXPECT_DOUBLE_EQ(rep.reference, 125.0);
  EXPECT_TRUE(rep.moment_bound_ok);
  long double sm = 0;
  for (auto v : rep.per_tau) sm += (static_cast<long double>(v) - 125) * (static_cast<long double>(v) - 125);
  EXPECT_NEAR(static_cast<double>(rep.second_moment), static_cast<double>(sm), 1e-6);
  const auto j = nlohmann::json::parse(MomentJson(rep));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["per_tau"].size(), 5u);
}

TEST(Moments, RequiresGoodPrimeAndShift) {
  EXPECT_THROW(MomentBoundReport(MakeTauSpec(SampleSurface(), 7, 1, 1, 1, 0, 0, 0)), InputError);
  EXPECT_THROW(MomentBoundReport(MakeTauSpec(SampleSurface(), 5, 1, 1, 0, 0, 0, 0)), InputError);
}
