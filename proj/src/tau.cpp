#include "hypfib/tau.hpp"

#include <string>

#include "hypfib/errors.hpp"
#include "hypfib/rng.hpp"
#include "hypfib/singular.hpp"

namespace hypfib {

TauSpec MakeTauSpec(const Surface& s, std::uint64_t p, int r, Fq lambda, Fq h1, Fq h2, Fq mu1, Fq mu2, int i,
                    int j) {
  ValidateSurface(s);
  Require(p >= 3 && IsPrime(p), "tau_spec: p = " + std::to_string(p) + " is not an odd prime");
  Require(r == 1 || r == 2, "tau_spec: r must be 1 or 2");
  Require((i == 0 || i == 1) && (j == 0 || j == 1), "tau_spec: sector indices must be 0 or 1");
  auto ctx = std::make_shared<const ExtCtx>(p, r);
  for (Fq v : {lambda, h1, h2, mu1, mu2}) Require(v < ctx->q(), "tau_spec: field element out of range");
  Require(lambda != 0, "tau_spec: lambda must be invertible");
  return TauSpec{ctx, s, lambda, h1, h2, mu1, mu2, i, j};
}

TauSpec TauSpecForSector(const WpParams& w, const Surface& s) {
  const auto p = static_cast<std::int64_t>(w.p);
  auto el = [&](std::int64_t v) { return static_cast<Fq>(Mod(v, p)); };
  return MakeTauSpec(s, w.p, 1, el(-w.lambda), el(w.h1), el(w.h2), el(w.mu1), el(w.mu2), w.i, w.j);
}

TauTables::TauTables(const TauSpec& spec) : spec_(spec), q_(spec.ctx->q()) {
  const ExtCtx& c = *spec.ctx;
  const auto n = static_cast<std::uint64_t>(spec.surface.n);
  const Fq gamma = c.from_int(c.gamma());
  gi_ = spec.i ? gamma : c.one();
  gj_ = spec.j ? gamma : c.one();
  gni_ = c.pow(gi_, n);
  gnj_ = c.pow(gj_, n);
  lambda_bar_ = c.inv(spec.lambda);
  const Surface& s = spec.surface;
  f_ = FormTable(s.f, c);
  g_ = FormTable(s.g, c);
  f1_ = FormTable(DerivativeForm(s.f, Axis::kS1), c);
  f2_ = FormTable(DerivativeForm(s.f, Axis::kS2), c);
  g1_ = FormTable(DerivativeForm(s.g, Axis::kS1), c);
  g2_ = FormTable(DerivativeForm(s.g, Axis::kS2), c);
  cnt_.assign(q_, 0);
  roots_.assign(q_, {});
  for (Fq u = 0; u < q_; ++u) {
    const Fq a = c.pow(u, 2 * n);
    ++cnt_[a];
    roots_[a].push_back(u);
  }
}

std::size_t TauTables::shifted(Fq s1, Fq s2, Fq t) const {
  const ExtCtx& c = ctx();
  return idx(c.add(s1, c.mul(spec_.h1, t)), c.add(s2, c.mul(spec_.h2, t)));
}

Fq TauTables::hf(std::size_t k) const {
  const ExtCtx& c = ctx();
  return c.add(c.mul(spec_.h1, f1_[k]), c.mul(spec_.h2, f2_[k]));
}

Fq TauTables::hg(std::size_t k) const {
  const ExtCtx& c = ctx();
  return c.add(c.mul(spec_.h1, g1_[k]), c.mul(spec_.h2, g2_[k]));
}

Fq TauTables::mu_dot(Fq s1, Fq s2) const {
  const ExtCtx& c = ctx();
  return c.add(c.mul(spec_.mu1, s1), c.mul(spec_.mu2, s2));
}

Fq TauTables::R1(Fq x, Fq s1, Fq s2) const {
  const ExtCtx& c = ctx();
  const Fq x2 = c.mul(x, x);
  const std::size_t k = idx(s1, s2);
  return c.add(c.add(c.mul(gni_, c.pow(x2, n())), c.mul(c.mul(gi_, x2), f_[k])), g_[k]);
}

Fq TauTables::W(Fq x, Fq s1, Fq s2, Fq t, Fq tau) const {
  const ExtCtx& c = ctx();
  const Fq lin = c.sub(c.mul(t, mu_dot(s1, s2)), c.mul(tau, c.mul(t, t)));
  return c.add(c.mul(gi_, c.mul(x, x)), c.mul(lambda_bar_, lin));
}

Fq TauTables::HRest(Fq x, Fq s1, Fq s2, Fq t, Fq tau) const {
  const ExtCtx& c = ctx();
  const Fq w = W(x, s1, s2, t, tau);
  const std::size_t k = shifted(s1, s2, t);
  return c.add(c.add(c.pow(w, n()), c.mul(w, f_[k])), g_[k]);
}

Fq EvalG(const TauTables& tt, Fq u, Fq x, Fq s1, Fq s2) {
  const ExtCtx& c = tt.ctx();
  return c.sub(tt.R1(x, s1, s2), c.pow(u, 2 * tt.n()));
}

Fq EvalH(const TauTables& tt, Fq tau, Fq v, Fq x, Fq s1, Fq s2, Fq t) {
  const ExtCtx& c = tt.ctx();
  return c.sub(tt.HRest(x, s1, s2, t, tau), c.pow(v, 2 * tt.n()));
}

namespace {

double Q4(const TauSpec& spec) {
  const double q = spec.ctx->q();
  return q * q * q * q;
}

// cnt[R1(x, s)] for all (x, s), indexed (x * q + s1) * q + s2.
std::vector<std::uint32_t> R1Counts(const TauTables& tt) {
  const std::uint32_t q = tt.q();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(q) * q * q);
  for (Fq x = 0; x < q; ++x) {
    for (Fq s1 = 0; s1 < q; ++s1) {
      for (Fq s2 = 0; s2 < q; ++s2) out[(static_cast<std::size_t>(x) * q + s1) * q + s2] = tt.cnt(tt.R1(x, s1, s2));
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> CountN6All(const TauSpec& spec, bool force) {
  CheckBudget(Q4(spec), force, "count_Ntau(six)");
  const TauTables tt(spec);
  const ExtCtx& c = tt.ctx();
  const std::uint32_t q = tt.q();
  const auto n = static_cast<std::uint64_t>(tt.n());
  const std::vector<std::uint32_t> c1 = R1Counts(tt);
  // lambda gamma^i x^2 and lambda gamma^j y^2
  std::vector<Fq> ax(q), by(q);
  for (Fq x = 0; x < q; ++x) {
    const Fq x2 = c.mul(x, x);
    ax[x] = c.mul(spec.lambda, c.mul(tt.gi(), x2));
    by[x] = c.mul(spec.lambda, c.mul(tt.gj(), x2));
  }
  std::vector<std::vector<std::uint64_t>> partial(q, std::vector<std::uint64_t>(q, 0));
  ParallelFor(q, [&](std::size_t s1i) {
    const auto s1 = static_cast<Fq>(s1i);
    auto& acc = partial[s1i];
    std::vector<std::uint32_t> c2(q);
    for (Fq s2 = 0; s2 < q; ++s2) {
      const std::size_t kh = tt.shifted(s1, s2, c.one());
      for (Fq y = 0; y < q; ++y) {
        const Fq y2 = c.mul(tt.gj(), c.mul(y, y));
        c2[y] = tt.cnt(c.add(c.add(c.mul(tt.gnj(), c.pow(c.mul(y, y), n)), c.mul(y2, tt.f(kh))), tt.g(kh)));
      }
      const Fq m = tt.mu_dot(s1, s2);
      for (Fq x = 0; x < q; ++x) {
        const std::uint32_t w1 = c1[(static_cast<std::size_t>(x) * q + s1) * q + s2];
        if (w1 == 0) continue;
        const Fq base = c.add(ax[x], m);
        for (Fq y = 0; y < q; ++y) {
          if (c2[y] != 0) acc[c.sub(base, by[y])] += std::uint64_t{w1} * c2[y];
        }
      }
    }
  });
  std::vector<std::uint64_t> out(q, 0);
  for (const auto& row : partial) {
    for (Fq t = 0; t < q; ++t) out[t] += row[t];
  }
  return out;
}

std::uint64_t CountN6(const TauSpec& spec, Fq tau, bool force) {
  Require(tau < spec.ctx->q(), "count_Ntau: tau out of range");
  return CountN6All(spec, force)[tau];
}

std::uint64_t CountPairSolutions(const TauSpec& spec, bool force) {
  std::uint64_t total = 0;
  for (std::uint64_t v : CountN6All(spec, force)) total += v;
  return total;
}

std::uint64_t CountN5(const TauSpec& spec, Fq tau, bool force) {
  const double q = spec.ctx->q();
  CheckBudget(q * q * q, force, "count_Ntau(five)");
  Require(tau < spec.ctx->q(), "count_Ntau: tau out of range");
  const TauTables tt(spec);
  std::uint64_t total = 0;
  for (Fq x = 0; x < tt.q(); ++x) {
    for (Fq s1 = 0; s1 < tt.q(); ++s1) {
      for (Fq s2 = 0; s2 < tt.q(); ++s2) {
        const std::uint32_t w1 = tt.cnt(tt.R1(x, s1, s2));
        if (w1 != 0) total += std::uint64_t{w1} * tt.cnt(tt.HRest(x, s1, s2, tt.ctx().one(), tau));
      }
    }
  }
  return total;
}

std::uint64_t CountN1(const TauSpec& spec, Fq tau, bool force) {
  CheckBudget(Q4(spec), force, "count_N1");
  Require(tau < spec.ctx->q(), "count_N1: tau out of range");
  const TauTables tt(spec);
  const std::uint32_t q = tt.q();
  const std::vector<std::uint32_t> c1 = R1Counts(tt);
  std::vector<std::uint64_t> partial(q, 0);
  ParallelFor(q, [&](std::size_t xi) {
    const auto x = static_cast<Fq>(xi);
    std::uint64_t acc = 0;
    for (Fq s1 = 0; s1 < q; ++s1) {
      for (Fq s2 = 0; s2 < q; ++s2) {
        const std::uint32_t w1 = c1[(static_cast<std::size_t>(x) * q + s1) * q + s2];
        if (w1 == 0) continue;
        for (Fq t = 0; t < q; ++t) acc += std::uint64_t{w1} * tt.cnt(tt.HRest(x, s1, s2, t, tau));
      }
    }
    partial[xi] = acc;
  });
  std::uint64_t total = 0;
  for (std::uint64_t v : partial) total += v;
  return total;
}

std::uint64_t CountN2(const TauSpec& spec, bool force) {
  const double q = spec.ctx->q();
  CheckBudget(q * q * q, force, "count_N2");
  const TauTables tt(spec);
  std::uint64_t total = 0;
  for (Fq x = 0; x < tt.q(); ++x) {
    for (Fq s1 = 0; s1 < tt.q(); ++s1) {
      for (Fq s2 = 0; s2 < tt.q(); ++s2) {
        const std::uint64_t w = tt.cnt(tt.R1(x, s1, s2));
        total += w * w;
      }
    }
  }
  return total;
}

std::vector<TauRow> TauProfile(const TauSpec& spec, bool with_locus, bool force) {
  const std::uint32_t q = spec.ctx->q();
  CheckBudget(Q4(spec) * q, force, "tau_profile");
  const std::vector<std::uint64_t> n6 = CountN6All(spec, force);
  const std::uint64_t n2 = CountN2(spec, force);
  std::vector<TauRow> rows(q);
  ParallelFor(q, [&](std::size_t k) {
    const auto tau = static_cast<Fq>(k);
    TauRow& row = rows[k];
    row.tau = tau;
    row.n6 = n6[k];
    row.n5 = CountN5(spec, tau, force);
    row.n1 = CountN1(spec, tau, force);
    row.n2 = n2;
    if (with_locus) {
      const LocusAtTau loc = EnumerateLocus(spec, tau, force);
      row.sing = static_cast<std::int64_t>(loc.sing.size());
      row.k1 = static_cast<std::int64_t>(loc.k1.size());
      row.k2 = static_cast<std::int64_t>(loc.k2.size());
      row.l = static_cast<std::int64_t>(loc.l.size());
    }
  });
  return rows;
}

}  // namespace hypfib
