#include "hypfib/vdc.hpp"

#include <algorithm>
#include <cmath>

#include "hypfib/errors.hpp"

namespace hypfib {

namespace {

std::uint64_t ResM(std::int64_t v, std::uint64_t m) {
  return static_cast<std::uint64_t>(Mod(v, static_cast<std::int64_t>(m)));
}

std::vector<SumValue> ResidueTable(const Surface& s, std::uint64_t r, std::int64_t c) {
  const ModChars mc(r);
  const FormMod f = ReduceForm(s.f, r), g = ReduceForm(s.g, r);
  std::vector<SumValue> out(r * r);
  for (std::uint64_t s1 = 0; s1 < r; ++s1) {
    for (std::uint64_t s2 = 0; s2 < r; ++s2) out[s1 * r + s2] = SumSResidue(mc, s.n, f, g, c, s1, s2);
  }
  return out;
}

double Norm2(const SumValue& v) { return std::norm(v.value()); }

}  // namespace

VdcContext::VdcContext(const Surface& s, std::uint64_t p, std::uint64_t pp, std::uint64_t q, std::uint64_t qq,
                       std::int64_t c, std::uint64_t B, HRule rule)
    : p_(p), pp_(pp), q_(q), qq_(qq), c_(c), B_(B) {
  for (std::uint64_t v : {p, pp, q, qq}) {
    Require(v >= 3 && IsPrime(v), "vdc: " + std::to_string(v) + " is not an odd prime");
  }
  Require(p != pp && q != qq, "vdc: r0 and r1 must each be products of two distinct primes");
  r0_ = p * pp;
  r1_ = q * qq;
  Require(Gcd(r0_, r1_) == 1, "vdc: r0 and r1 must be coprime");
  H_ = static_cast<std::int64_t>((rule == HRule::kFloorB ? B : 4 * B) / r1_);
  Require(H_ >= 1, "vdc: H = 0 (need r1 <= B); got r1 = " + std::to_string(r1_) + ", B = " + std::to_string(B));
  const auto [r1bar, r0bar] = CrtData(r0_, r1_);
  s0_ = ResidueTable(s, r0_, static_cast<std::int64_t>(ResM(c, r0_) * r1bar % r0_));
  s1_ = ResidueTable(s, r1_, static_cast<std::int64_t>(ResM(c, r1_) * r0bar % r1_));
}

std::uint64_t VdcContext::Res0(std::int64_t v) const { return ResM(v, r0_); }

SumValue VdcContext::S0(std::int64_t u1, std::int64_t u2) const {
  return s0_[ResM(u1, r0_) * r0_ + ResM(u2, r0_)];
}

SumValue VdcContext::S1(std::int64_t u1, std::int64_t u2) const {
  return s1_[ResM(u1, r1_) * r1_ + ResM(u2, r1_)];
}

bool VdcContext::InBox(std::int64_t u1, std::int64_t u2) const {
  const auto b = static_cast<std::int64_t>(B_);
  return u1 >= -b && u1 <= b && u2 >= -b && u2 <= b;
}

SumValue VdcContext::A0(std::int64_t u1, std::int64_t u2) const {
  return InBox(u1, u2) ? S0(u1, u2) : SumValue();
}

double Sigma1(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  const auto r1 = static_cast<std::int64_t>(v.r1());
  double best = 0;
  for (std::int64_t h1 = 1; h1 <= v.H(); ++h1) {
    for (std::int64_t h2 = 1; h2 <= v.H(); ++h2) {
      double sum = 0;
      for (std::int64_t w1 = -b; w1 <= b; ++w1) {
        for (std::int64_t w2 = -b; w2 <= b; ++w2) sum += Norm2(v.S1(w1 - h1 * r1, w2 - h2 * r1));
      }
      best = std::max(best, sum);
    }
  }
  return best;
}

double Sigma1Union(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  const auto r1 = static_cast<std::int64_t>(v.r1());
  double sum = 0;
  for (std::int64_t u1 = -b - v.H() * r1; u1 <= b - r1; ++u1) {
    for (std::int64_t u2 = -b - v.H() * r1; u2 <= b - r1; ++u2) sum += Norm2(v.S1(u1, u2));
  }
  return sum;
}

namespace {

// sum_{h in [1,H]^2} A0(u + h r1)
cplx ShiftedA0Sum(const VdcContext& v, std::int64_t u1, std::int64_t u2) {
  const auto r1 = static_cast<std::int64_t>(v.r1());
  cplx acc = 0;
  for (std::int64_t h1 = 1; h1 <= v.H(); ++h1) {
    for (std::int64_t h2 = 1; h2 <= v.H(); ++h2) acc += v.A0(u1 + h1 * r1, u2 + h2 * r1).value();
  }
  return acc;
}

}  // namespace

double Sigma2Exact(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  const auto r1 = static_cast<std::int64_t>(v.r1());
  double sum = 0;
  for (std::int64_t u1 = -b - v.H() * r1; u1 <= b - r1; ++u1) {
    for (std::int64_t u2 = -b - v.H() * r1; u2 <= b - r1; ++u2) sum += std::norm(ShiftedA0Sum(v, u1, u2));
  }
  return sum;
}

double Sigma2A(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  double sum = 0;
  for (std::int64_t u1 = -b; u1 <= b; ++u1) {
    for (std::int64_t u2 = -b; u2 <= b; ++u2) sum += Norm2(v.S0(u1, u2));
  }
  return sum;
}

SumValue SumT(const VdcContext& v, std::int64_t h1, std::int64_t h2) {
  Require(h1 != 0 || h2 != 0, "sum_T: h = (0,0) belongs to sigma2A");
  const auto b = static_cast<std::int64_t>(v.B());
  const auto r1 = static_cast<std::int64_t>(v.r1());
  const std::int64_t d1 = h1 * r1, d2 = h2 * r1;
  cplx acc = 0;
  std::uint64_t terms = 0;
  for (std::int64_t u1 = std::max(-b, -b - d1); u1 <= std::min(b, b - d1); ++u1) {
    for (std::int64_t u2 = std::max(-b, -b - d2); u2 <= std::min(b, b - d2); ++u2) {
      const SumValue a = v.S0(u1 + d1, u2 + d2);
      const SumValue c = v.S0(u1, u2);
      acc += a.value() * std::conj(c.value());
      terms += a.terms * c.terms;
    }
  }
  return SumValue(acc, terms);
}

double Sigma2B(const VdcContext& v) {
  double sum = 0;
  for (std::int64_t h1 = -v.H(); h1 <= v.H(); ++h1) {
    for (std::int64_t h2 = -v.H(); h2 <= v.H(); ++h2) {
      if (h1 != 0 || h2 != 0) sum += SumT(v, h1, h2).abs();
    }
  }
  return sum;
}

SumValue VdcU(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  SumValue acc;
  for (std::int64_t u1 = -b; u1 <= b; ++u1) {
    for (std::int64_t u2 = -b; u2 <= b; ++u2) acc += v.S0(u1, u2) * v.S1(u1, u2);
  }
  return acc;
}

SumValue VdcReconstruction(const VdcContext& v) {
  const auto b = static_cast<std::int64_t>(v.B());
  const auto r1 = static_cast<std::int64_t>(v.r1());
  cplx acc = 0;
  for (std::int64_t u1 = -b - v.H() * r1; u1 <= b - r1; ++u1) {
    for (std::int64_t u2 = -b - v.H() * r1; u2 <= b - r1; ++u2) {
      acc += v.S1(u1, u2).value() * ShiftedA0Sum(v, u1, u2);
    }
  }
  const double cells = static_cast<double>(v.H() * v.H()) * std::pow(2.0 * b + 1, 2);
  return SumValue(acc, static_cast<std::uint64_t>(cells * static_cast<double>(v.r0() * v.r1())));
}

VdcReport AuditVdc(const VdcContext& v) {
  VdcReport rep;
  const SumValue U = VdcU(v);
  const double H2 = static_cast<double>(v.H() * v.H());
  const double B = static_cast<double>(v.B());
  const double r0 = static_cast<double>(v.r0()), r1 = static_cast<double>(v.r1());
  rep.U_abs = U.abs();
  rep.sigma1 = Sigma1(v);
  rep.sigma1_union = Sigma1Union(v);
  rep.sigma2 = Sigma2Exact(v);
  rep.sigma2A = Sigma2A(v);
  rep.sigma2B = Sigma2B(v);
  rep.lhs = H2 * rep.U_abs;
  rep.rhs_literal = std::sqrt(rep.sigma1 * rep.sigma2);
  rep.rhs_union = std::sqrt(rep.sigma1_union * rep.sigma2);
  rep.sigma2_bound = 2 * H2 * (rep.sigma2A + rep.sigma2B);
  const SumValue rec = VdcReconstruction(v);
  rep.reconstruction_residual = std::abs(rec.value() - H2 * U.value());
  constexpr double kRel = 1e-6;
  rep.differencing_literal = rep.lhs <= rep.rhs_literal * (1 + kRel) + kRel;
  rep.differencing_union = rep.lhs <= rep.rhs_union * (1 + kRel) + kRel;
  rep.sigma2_ok = rep.sigma2 <= rep.sigma2_bound * (1 + kRel) + kRel;
  rep.sigma1_ratio = rep.sigma1 / (B * B * r1);
  rep.sigma2A_ratio = rep.sigma2A / (B * B * r0);
  rep.sigma2B_ratio = rep.sigma2B / (H2 * std::pow(r0, 2.5) * std::pow(std::log(r0), 2));
  rep.U_bound_ratio = v.coprime_c()
                    ? rep.U_abs / (B * std::sqrt(r0) * std::pow(r1, 1.5) + B * std::pow(r0, 1.25) * std::sqrt(r1) * std::log(r0))
                    : rep.U_abs / (B * B * std::sqrt(r0 * r1));
  return rep;
}

}  // namespace hypfib
