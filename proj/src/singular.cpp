#include "hypfib/singular.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hypfib/errors.hpp"
#include "hypfib/poly.hpp"
#include "hypfib/rng.hpp"

namespace hypfib {

namespace {

constexpr std::uint32_t kMaxLocusQ = 169;

void RequireLocusField(const TauSpec& spec, bool force, double per_point, const char* what) {
  const double q = spec.ctx->q();
  Require(spec.ctx->q() <= kMaxLocusQ,
          std::string(what) + ": q = " + std::to_string(spec.ctx->q()) + " exceeds 13^2");
  CheckBudget(q * q * q * q * per_point, force, what);
}

// Calls body(coords) for every canonical representative of P^{k-1}(F_q)
// given as k coordinates with the last nonzero one equal to 1.
template <std::size_t K, typename Body>
void ForEachProjective(std::uint32_t q, Body&& body) {
  for (std::size_t lead = K; lead-- > 0;) {
    std::array<Fq, K> a{};
    a[lead] = 1;
    std::size_t total = 1;
    for (std::size_t k = 0; k < lead; ++k) total *= q;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (std::size_t k = lead; k-- > 0;) {
        a[k] = static_cast<Fq>(rest % q);
        rest /= q;
      }
      body(a);
    }
  }
}

Fq Small(const ExtCtx& c, std::int64_t v) { return c.from_int(v); }

}  // namespace

JacobianRows Jacobian(const TauTables& tt, Fq tau, const P5Point& P) {
  const ExtCtx& c = tt.ctx();
  const int n = tt.n();
  const Fq two_n = Small(c, 2 * n);
  const Fq x2 = c.mul(P.x, P.x);
  const std::size_t k = tt.idx(P.s1, P.s2);
  const std::size_t kh = tt.shifted(P.s1, P.s2, P.t);
  JacobianRows J{};
  J.a[0] = c.neg(c.mul(two_n, c.pow(P.u, 2 * n - 1)));
  J.a[1] = 0;
  J.a[2] = c.add(c.mul(c.mul(two_n, tt.gni()), c.pow(P.x, 2 * n - 1)),
                 c.mul(c.mul(Small(c, 2), tt.gi()), c.mul(P.x, tt.f(k))));
  J.a[3] = c.add(c.mul(c.mul(tt.gi(), x2), tt.f1(k)), tt.g1(k));
  J.a[4] = c.add(c.mul(c.mul(tt.gi(), x2), tt.f2(k)), tt.g2(k));
  J.a[5] = 0;

  const Fq W = tt.W(P.x, P.s1, P.s2, P.t, tau);
  const Fq D = c.add(c.mul(Small(c, n), c.pow(W, n - 1)), tt.f(kh));
  const Fq lt = c.mul(tt.lambda_bar(), P.t);
  const TauSpec& sp = tt.spec();
  J.b[0] = 0;
  J.b[1] = c.neg(c.mul(two_n, c.pow(P.v, 2 * n - 1)));
  J.b[2] = c.mul(D, c.mul(c.mul(Small(c, 2), tt.gi()), P.x));
  J.b[3] = c.add(c.mul(D, c.mul(lt, sp.mu1)), c.add(c.mul(W, tt.f1(kh)), tt.g1(kh)));
  J.b[4] = c.add(c.mul(D, c.mul(lt, sp.mu2)), c.add(c.mul(W, tt.f2(kh)), tt.g2(kh)));
  const Fq dW = c.mul(tt.lambda_bar(), c.sub(tt.mu_dot(P.s1, P.s2), c.mul(Small(c, 2), c.mul(tau, P.t))));
  J.b[5] = c.add(c.mul(D, dW), c.add(c.mul(W, tt.hf(kh)), tt.hg(kh)));
  return J;
}

bool RankAtMostOne(const JacobianRows& J, const ExtCtx& c) {
  for (int k = 0; k < 6; ++k) {
    for (int l = k + 1; l < 6; ++l) {
      if (c.sub(c.mul(J.a[k], J.b[l]), c.mul(J.a[l], J.b[k])) != 0) return false;
    }
  }
  return true;
}

LocusAtTau EnumerateLocus(const TauSpec& spec, Fq tau, bool force) {
  RequireLocusField(spec, force, 8, "sing_vtau_points");
  Require(tau < spec.ctx->q(), "sing_vtau_points: tau out of range");
  const TauTables tt(spec);
  const ExtCtx& c = tt.ctx();
  LocusAtTau out;
  out.tau = tau;
  // u, v come first in the coordinate order, so the chart is decided by (x, s1, s2, t).
  ForEachProjective<4>(tt.q(), [&](const std::array<Fq, 4>& a) {
    const Fq x = a[0], s1 = a[1], s2 = a[2], t = a[3];
    const Fq r = tt.R1(x, s1, s2);
    if (tt.cnt(r) == 0) return;
    const Fq hr = tt.HRest(x, s1, s2, t, tau);
    if (tt.cnt(hr) == 0) return;
    for (Fq u : tt.roots(r)) {
      for (Fq v : tt.roots(hr)) {
        const P5Point P{u, v, x, s1, s2, t};
        const JacobianRows J = Jacobian(tt, tau, P);
        const bool row1 = std::all_of(J.a, J.a + 6, [](Fq e) { return e == 0; });
        const bool row2 = std::all_of(J.b, J.b + 6, [](Fq e) { return e == 0; });
        const bool sing = RankAtMostOne(J, c);
        const bool sys0 = u == 0 && v == 0 && J.b[5] == 0 &&
                          c.sub(c.mul(J.a[3], J.b[4]), c.mul(J.a[4], J.b[3])) == 0;
        if (sing) out.sing.push_back(P);
        if (row1) out.k1.push_back(P);
        if (row2) out.k2.push_back(P);
        if (sys0) out.sys0.push_back(P);
        if (sys0 && sing) out.l.push_back(P);
        if (u == 0 && x == 0 && s1 == 0 && s2 == 0) out.baseline.push_back(P);
      }
    }
  });
  for (auto* v : {&out.sing, &out.k1, &out.k2, &out.sys0, &out.l, &out.baseline}) std::sort(v->begin(), v->end());
  return out;
}

std::vector<P5Point> SystemPoints(const TauSpec& spec, LocusSystem system, Fq tau, bool force) {
  LocusAtTau loc = EnumerateLocus(spec, tau, force);
  switch (system) {
    case LocusSystem::kSing: return std::move(loc.sing);
    case LocusSystem::kK1: return std::move(loc.k1);
    case LocusSystem::kK2: return std::move(loc.k2);
    case LocusSystem::kL: return std::move(loc.l);
    case LocusSystem::kSys0: return std::move(loc.sys0);
  }
  return {};
}

bool DecompositionHolds(const LocusAtTau& loc) {
  std::vector<P5Point> uni;
  for (const auto* v : {&loc.k1, &loc.k2, &loc.l}) uni.insert(uni.end(), v->begin(), v->end());
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  return uni == loc.sing;
}

AuxValues EvalAux(const TauTables& tt, const P4Point& P) {
  const ExtCtx& c = tt.ctx();
  const int n = tt.n();
  const Fq gx2 = c.mul(tt.gi(), c.mul(P.x, P.x));
  const std::size_t k = tt.idx(P.s1, P.s2);
  const std::size_t kh = tt.shifted(P.s1, P.s2, P.t);
  AuxValues r{};
  r.W = c.add(gx2, c.mul(P.t, P.z));
  r.e1 = tt.R1(P.x, P.s1, P.s2);
  r.e2 = c.add(c.add(c.pow(r.W, n), c.mul(r.W, tt.f(kh))), tt.g(kh));
  const Fq lead = c.sub(c.mul(Small(c, 2), P.z), c.mul(tt.lambda_bar(), tt.mu_dot(P.s1, P.s2)));
  const Fq D = c.add(c.mul(Small(c, n), c.pow(r.W, n - 1)), tt.f(kh));
  r.e3 = c.add(c.mul(lead, D), c.add(c.mul(r.W, tt.hf(kh)), tt.hg(kh)));
  const Fq G1 = c.add(c.mul(gx2, tt.f1(k)), tt.g1(k));
  const Fq G2 = c.add(c.mul(gx2, tt.f2(k)), tt.g2(k));
  const Fq H1 = c.add(c.mul(r.W, tt.f1(kh)), tt.g1(kh));
  const Fq H2 = c.add(c.mul(r.W, tt.f2(kh)), tt.g2(kh));
  r.e4 = c.sub(c.mul(G1, H2), c.mul(G2, H1));
  r.U1 = c.add(c.mul(gx2, c.sub(c.mul(tt.f2(kh), tt.f1(k)), c.mul(tt.f1(kh), tt.f2(k)))),
               c.sub(c.mul(tt.f2(kh), tt.g1(k)), c.mul(tt.f1(kh), tt.g2(k))));
  r.U2 = c.add(c.mul(gx2, c.sub(c.mul(tt.g2(kh), tt.f1(k)), c.mul(tt.g1(kh), tt.f2(k)))),
               c.sub(c.mul(tt.g2(kh), tt.g1(k)), c.mul(tt.g1(kh), tt.g2(k))));
  return r;
}

namespace {

bool OnAux(const AuxValues& r) { return r.e1 == 0 && r.e2 == 0 && r.e3 == 0 && r.e4 == 0; }

}  // namespace

std::vector<P4Point> AuxPoints(const TauSpec& spec, bool force) {
  RequireLocusField(spec, force, 4, "system_points(V)");
  const TauTables tt(spec);
  std::vector<P4Point> out;
  ForEachProjective<5>(tt.q(), [&](const std::array<Fq, 5>& a) {
    const P4Point P{a[0], a[1], a[2], a[3], a[4]};
    if (OnAux(EvalAux(tt, P))) out.push_back(P);
  });
  return out;
}

MinorSignCheck CheckMinorSign(const TauSpec& spec, bool force) {
  const TauTables tt(spec);
  const ExtCtx& c = tt.ctx();
  MinorSignCheck out;
  for (const P4Point& P : AuxPoints(spec, force)) {
    const AuxValues r = EvalAux(tt, P);
    const Fq wu1 = c.mul(r.W, r.U1);
    ++out.points;
    if (wu1 != c.neg(r.U2)) ++out.corrected_violations;
    if (wu1 != r.U2) ++out.literal_violations;
  }
  return out;
}

Sys0VsAux CompareSys0WithAux(const TauSpec& spec, Fq tau, bool force) {
  const TauTables tt(spec);
  const ExtCtx& c = tt.ctx();
  Sys0VsAux out;
  for (const P5Point& P : EnumerateLocus(spec, tau, force).sys0) {
    if (P.t == 0) continue;
    ++out.sys0_t_nonzero;
    const Fq z = c.mul(tt.lambda_bar(), c.sub(tt.mu_dot(P.s1, P.s2), c.mul(tau, P.t)));
    if (!OnAux(EvalAux(tt, P4Point{P.x, z, P.s1, P.s2, P.t}))) ++out.missing_from_v;
  }
  return out;
}

EliminantCheck CheckEliminant(const TauSpec& spec, int samples, std::uint64_t seed) {
  Require(spec.ctx->degree() == 1, "eliminant check: only implemented over F_p");
  const TauTables tt(spec);
  const std::uint64_t p = tt.q();
  const auto n = static_cast<std::uint64_t>(tt.n());
  const std::uint64_t gi = tt.gi(), gni = tt.gni();
  KeyedRng rng(seed, "eliminant");
  auto mulp = [p](std::uint64_t a, std::uint64_t b) { return a * b % p; };
  auto subp = [p](std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; };
  EliminantCheck out;
  for (int k = 0; k < samples; ++k) {
    const auto s1 = static_cast<Fq>(rng.Below(p)), s2 = static_cast<Fq>(rng.Below(p)),
               t = static_cast<Fq>(rng.Below(p));
    const std::size_t i0 = tt.idx(s1, s2), ih = tt.shifted(s1, s2, t);
    PolyP U1 = {subp(mulp(tt.f2(ih), tt.g1(i0)), mulp(tt.f1(ih), tt.g2(i0))), 0,
                mulp(gi, subp(mulp(tt.f2(ih), tt.f1(i0)), mulp(tt.f1(ih), tt.f2(i0))))};
    PolyP U2 = {subp(mulp(tt.g2(ih), tt.g1(i0)), mulp(tt.g1(ih), tt.g2(i0))), 0,
                mulp(gi, subp(mulp(tt.g2(ih), tt.f1(i0)), mulp(tt.g1(ih), tt.f2(i0))))};
    Trim(U1);
    Trim(U2);
    const PolyP a = PolyPow(U2, n, p);
    const PolyP b = PolyScale(PolyMul(U2, PolyPow(U1, n - 1, p), p), tt.f(ih), p);
    const PolyP cterm = PolyScale(PolyPow(U1, n, p), tt.g(ih), p);
    const PolyP literal = PolyAdd(PolyAdd(a, b, p), cterm, p);
    const PolyP corrected = PolySub(cterm, PolyAdd(a, b, p), p);
    PolyP D(2 * n + 1, 0);
    D[0] = tt.g(i0);
    D[2] = mulp(gi, tt.f(i0));
    D[2 * n] = gni;
    Trim(D);
    ++out.samples;
    if (!PolyDivMod(corrected, D, p).second.empty()) ++out.corrected_nonzero;
    if (!PolyDivMod(literal, D, p).second.empty()) ++out.literal_nonzero;
  }
  return out;
}

BadTauReport CountBadTau(const TauSpec& spec, bool force) {
  const std::uint32_t q = spec.ctx->q();
  BadTauReport out;
  out.sing_counts.assign(q, 0);
  ParallelFor(q, [&](std::size_t k) {
    out.sing_counts[k] = EnumerateLocus(spec, static_cast<Fq>(k), force).sing.size();
  });
  const auto limit = static_cast<std::size_t>(2 * spec.surface.n);
  for (std::size_t s : out.sing_counts) {
    if (s > limit) ++out.bad;
    out.max_sing = std::max(out.max_sing, s);
  }
  return out;
}

}  // namespace hypfib
