#include "hypfib/moments.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <json.hpp>

#include "hypfib/errors.hpp"
#include "hypfib/rng.hpp"

namespace hypfib {

namespace {

using lcplx = std::complex<long double>;

lcplx HooleyExact(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts, Fq twist) {
  const std::uint32_t p = ctx.p();
  std::vector<std::uint64_t> bins(p, 0);
  for (Fq tau = 0; tau < counts.size(); ++tau) bins[ctx.trace(ctx.mul(twist, tau))] += counts[tau];
  lcplx acc = 0;
  for (std::uint32_t k = 0; k < p; ++k) {
    if (bins[k] == 0) continue;
    const long double ang = 2 * std::numbers::pi_v<long double> * k / p;
    acc += static_cast<long double>(bins[k]) * lcplx(std::cos(ang), std::sin(ang));
  }
  return acc;
}

}  // namespace

std::vector<std::uint64_t> CountTable(const TauSpec& spec, CountKind kind, bool force) {
  if (kind == CountKind::kSix) return CountN6All(spec, force);
  const std::uint32_t q = spec.ctx->q();
  std::vector<std::uint64_t> out(q);
  ParallelFor(q, [&](std::size_t k) { out[k] = CountN5(spec, static_cast<Fq>(k), force); });
  return out;
}

SumValue HooleyS(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts, Fq twist) {
  Require(counts.size() == ctx.q(), "hooley_S: count table has the wrong length");
  Require(twist < ctx.q(), "hooley_S: twist out of range");
  const lcplx s = HooleyExact(ctx, counts, twist);
  return SumValue(cplx(static_cast<double>(s.real()), static_cast<double>(s.imag())), ctx.q());
}

double MomentM(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts) {
  long double m = 0;
  for (Fq tw = 1; tw < ctx.q(); ++tw) m += std::norm(HooleyExact(ctx, counts, tw));
  return static_cast<double>(m);
}

ParsevalCheck Parseval(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts) {
  ParsevalCheck out;
  for (Fq tw = 0; tw < ctx.q(); ++tw) out.lhs += std::norm(HooleyExact(ctx, counts, tw));
  unsigned __int128 sq = 0;
  for (std::uint64_t v : counts) sq += static_cast<unsigned __int128>(v) * v;
  out.rhs = static_cast<long double>(ctx.q()) * static_cast<long double>(sq);
  return out;
}

MomentReport MomentBoundReport(const TauSpec& spec, CountKind kind, bool force) {
  const ExtCtx& ctx = *spec.ctx;
  Require(GoodPrime(spec.surface, ctx.p(), true),
          "moment_bound_report: p = " + std::to_string(ctx.p()) + " is not a good prime with p = 2 mod n");
  Require(spec.h1 != 0 || spec.h2 != 0 || spec.mu1 != 0 || spec.mu2 != 0,
          "moment_bound_report: (h, mu) must be nonzero");
  MomentReport rep;
  rep.q = ctx.q();
  rep.r = ctx.degree();
  rep.kind = kind;
  const long double q = ctx.q();
  rep.reference = static_cast<double>(q * q * q);
  rep.per_tau = CountTable(spec, kind, force);
  for (std::uint64_t v : rep.per_tau) {
    const long double d = static_cast<long double>(v) - q * q * q;
    rep.second_moment += d * d;
  }
  rep.ratio_kappa5 = static_cast<double>(rep.second_moment / std::pow(q, 5.0L));
  std::vector<long double> norms(ctx.q(), 0);
  ParallelFor(ctx.q(), [&](std::size_t tw) {
    if (tw != 0) norms[tw] = std::abs(HooleyExact(ctx, rep.per_tau, static_cast<Fq>(tw)));
  });
  long double m = 0, mx = 0;
  for (std::size_t tw = 1; tw < norms.size(); ++tw) {
    m += norms[tw] * norms[tw];
    mx = std::max(mx, norms[tw]);
  }
  rep.M = static_cast<double>(m);
  rep.max_S = static_cast<double>(mx);
  rep.ratio_kappa25 = static_cast<double>(mx / std::pow(q, 2.5L));
  rep.parseval_residual = Parseval(ctx, rep.per_tau).residual();
  rep.moment_bound_ok = m <= q * rep.second_moment * (1 + 1e-12L) + 1e-6L;
  return rep;
}

std::string MomentJson(const MomentReport& rep, int indent) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["count"] = rep.kind == CountKind::kSix ? "six" : "five";
  j["reference"] = rep.reference;
  j["second_moment"] = static_cast<double>(rep.second_moment);
  j["ratio_kappa5"] = rep.ratio_kappa5;
  j["M"] = rep.M;
  j["moment_bound_ok"] = rep.moment_bound_ok;
  j["max_S"] = rep.max_S;
  j["ratio_kappa25"] = rep.ratio_kappa25;
  j["parseval_residual"] = static_cast<double>(rep.parseval_residual);
  j["note"] = "finite verification for r in {1,2}, not a proof";
  j["per_tau"] = rep.per_tau;
  return j.dump(indent);
}

}  // namespace hypfib
