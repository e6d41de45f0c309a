#include "hypfib/charsums.hpp"

#include <cmath>
#include <numeric>

#include "hypfib/errors.hpp"

namespace hypfib {

namespace {

std::uint64_t PowN(std::uint64_t a, int n, std::uint64_t m) {
  std::uint64_t v = 1 % m;
  for (int k = 0; k < n; ++k) v = v * a % m;
  return v;
}

std::uint64_t Res(std::int64_t v, std::uint64_t m) {
  return static_cast<std::uint64_t>(Mod(v, static_cast<std::int64_t>(m)));
}

void RequirePrime(std::uint64_t p, const char* what) {
  Require(p >= 3 && p % 2 == 1 && IsPrime(p), std::string(what) + ": " + std::to_string(p) + " is not an odd prime");
}

}  // namespace

void RequireOddSquarefree(std::uint64_t r, const char* what) {
  Require(r >= 1 && r % 2 == 1 && IsSquarefree(r),
          std::string(what) + ": modulus " + std::to_string(r) + " must be odd and squarefree");
  Require(r < (1ULL << 31), std::string(what) + ": modulus too large");
}

ModChars::ModChars(std::uint64_t r) : r_(r) {
  RequireOddSquarefree(r, "character table");
  jac_.resize(r);
  roots_.resize(r);
  for (std::uint64_t a = 0; a < r; ++a) {
    jac_[a] = static_cast<std::int8_t>(Jacobi(static_cast<std::int64_t>(a), r));
    roots_[a] = AddChar(r, static_cast<std::int64_t>(a));
  }
}

SumValue RiemSum(std::uint64_t p, int n, std::int64_t a, std::int64_t b, std::int64_t c) {
  RequirePrime(p, "riem_sum");
  Require(n >= 1, "riem_sum: n must be positive");
  const PrimeCtx ctx(p);
  const std::uint64_t A = Res(a, p), Bv = Res(b, p), C = Res(c, p);
  cplx acc = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = (PowN(x, n, p) + A * x + Bv) % p;
    const int chi = ctx.chi(v);
    if (chi != 0) acc += static_cast<double>(chi) * ctx.e(static_cast<std::int64_t>(C * x % p));
  }
  return SumValue(acc, p);
}

double RiemBound(std::uint64_t p, int n) { return (n + 1) * std::sqrt(static_cast<double>(p)) + n; }

SumValue SumSResidue(const ModChars& mc, int n, const FormMod& f, const FormMod& g, std::int64_t c,
                     std::uint64_t s1, std::uint64_t s2) {
  const std::uint64_t r = mc.r();
  const std::uint64_t F = f(s1, s2), G = g(s1, s2);
  const std::uint64_t cc = Res(c, r);
  cplx acc = 0;
  for (std::uint64_t a = 0; a < r; ++a) {
    const int j = mc.jacobi((PowN(a, n, r) + a * F + G) % r);
    if (j != 0) acc += static_cast<double>(j) * mc.e(static_cast<std::int64_t>(cc * a % r));
  }
  return SumValue(acc, r);
}

SumValue SumS(std::uint64_t r, std::int64_t c, std::int64_t u1, std::int64_t u2, const Surface& s,
              SMethod method) {
  RequireOddSquarefree(r, "sum_S");
  if (r == 1) return SumValue(1.0, 1);
  if (method == SMethod::kDirect) {
    const ModChars mc(r);
    return SumSResidue(mc, s.n, ReduceForm(s.f, r), ReduceForm(s.g, r), c, Res(u1, r), Res(u2, r));
  }
  SumValue prod(1.0, 1);
  for (std::uint64_t q : PrimeFactors(r)) {
    const std::uint64_t rest = r / q;
    const std::int64_t cq = static_cast<std::int64_t>(Res(c, q) * InvMod(static_cast<std::int64_t>(rest % q), q) % q);
    prod = prod * SumS(q, cq, u1, u2, s, SMethod::kDirect);
  }
  return prod;
}

SumValue SumSSplit(std::uint64_t r0, std::uint64_t r1, std::int64_t c, std::int64_t u1, std::int64_t u2,
                   const Surface& s) {
  const auto [r1bar, r0bar] = CrtData(r0, r1);
  const std::int64_t c0 = static_cast<std::int64_t>(Res(c, r0) * r1bar % r0);
  const std::int64_t c1 = static_cast<std::int64_t>(Res(c, r1) * r0bar % r1);
  return SumS(r0, c0, u1, u2, s) * SumS(r1, c1, u1, u2, s);
}

SumValue SumU(std::uint64_t r, std::int64_t c, std::uint64_t B, const Surface& s) {
  RequireOddSquarefree(r, "sum_U");
  const auto b = static_cast<std::int64_t>(B);
  if (r == 1) {
    const double cells = static_cast<double>((2 * b + 1) * (2 * b + 1));
    return SumValue(cells, static_cast<std::uint64_t>(cells));
  }
  const ModChars mc(r);
  const FormMod f = ReduceForm(s.f, r), g = ReduceForm(s.g, r);
  std::vector<SumValue> memo(r * r);
  std::vector<bool> have(r * r, false);
  SumValue total;
  for (std::int64_t u1 = -b; u1 <= b; ++u1) {
    for (std::int64_t u2 = -b; u2 <= b; ++u2) {
      const std::uint64_t s1 = Res(u1, r), s2 = Res(u2, r);
      const std::size_t idx = s1 * r + s2;
      if (!have[idx]) {
        memo[idx] = SumSResidue(mc, s.n, f, g, c, s1, s2);
        have[idx] = true;
      }
      total += memo[idx];
    }
  }
  return total;
}

double UBoxRatio(const SumValue& U, std::uint64_t B, std::uint64_t r) {
  const double b = static_cast<double>(std::max<std::uint64_t>(B, 1));
  return U.abs() / (b * b * std::sqrt(static_cast<double>(r)));
}

SumValue SumC(std::uint64_t r, std::uint64_t B, const Surface& s, CMethod method, const OmegaTable* omega,
              bool force) {
  RequireOddSquarefree(r, "sum_C");
  Require(B >= 1, "sum_C: B must be >= 1");
  const auto b = static_cast<std::int64_t>(B);
  const std::int64_t xm = b * b;
  const auto cells = static_cast<std::uint64_t>((2 * xm + 1) * (2 * b + 1) * (2 * b + 1));
  const ModChars mc(r);
  std::int64_t acc = 0;
  if (method == CMethod::kWeighted) {
    Require(omega != nullptr && omega->B() == B, "sum_C weighted: omega table for the same B required");
    for (std::size_t i = 0; i < omega->size(); ++i) {
      acc += static_cast<std::int64_t>(omega->count(i)) * mc.jacobi(omega->residue(i, r));
    }
    return SumValue(static_cast<double>(acc), cells);
  }
  CheckBudget(static_cast<double>(cells), force, "sum_C");
  const FormMod f = ReduceForm(s.f, r), g = ReduceForm(s.g, r);
  for (std::int64_t u1 = -b; u1 <= b; ++u1) {
    for (std::int64_t u2 = -b; u2 <= b; ++u2) {
      const std::uint64_t F = f(Res(u1, r), Res(u2, r)), G = g(Res(u1, r), Res(u2, r));
      for (std::int64_t x = -xm; x <= xm; ++x) {
        const std::uint64_t a = Res(x, r);
        acc += mc.jacobi((PowN(a, s.n, r) + a * F + G) % r);
      }
    }
  }
  return SumValue(static_cast<double>(acc), cells);
}

WpHypotheses CheckWpHypotheses(const WpParams& w, const Surface& s) {
  WpHypotheses h;
  h.good_prime = GoodPrime(s, w.p, true);
  h.lambda_nonzero = Res(w.lambda, w.p) != 0;
  h.shift_nonzero = Res(w.h1, w.p) != 0 || Res(w.h2, w.p) != 0 || Res(w.mu1, w.p) != 0 || Res(w.mu2, w.p) != 0;
  return h;
}

WpEvaluator::WpEvaluator(const Surface& s, std::uint64_t p) : p_(p), ctx_((RequirePrime(p, "W_p"), p)) {
  Require(p < 2048, "W_p: p too large for the tabulated evaluator");
  const FormMod f = ReduceForm(s.f, p), g = ReduceForm(s.g, p);
  std::vector<std::uint64_t> an(p);
  for (std::uint64_t a = 0; a < p; ++a) an[a] = PowN(a, s.n, p);
  chi_.resize(p * p * p);
  for (std::uint64_t s1 = 0; s1 < p; ++s1) {
    for (std::uint64_t s2 = 0; s2 < p; ++s2) {
      const std::uint64_t F = f(s1, s2), G = g(s1, s2);
      std::int8_t* row = &chi_[(s1 * p + s2) * p];
      for (std::uint64_t a = 0; a < p; ++a) row[a] = static_cast<std::int8_t>(ctx_.chi((an[a] + a * F + G) % p));
    }
  }
}

SumValue WpEvaluator::Naive(std::int64_t lambda, std::int64_t h1, std::int64_t h2, std::int64_t mu1,
                            std::int64_t mu2) const {
  const std::uint64_t p = p_;
  const std::uint64_t L = Res(lambda, p), H1 = Res(h1, p), H2 = Res(h2, p), M1 = Res(mu1, p), M2 = Res(mu2, p);
  cplx acc = 0;
  for (std::uint64_t s1 = 0; s1 < p; ++s1) {
    for (std::uint64_t s2 = 0; s2 < p; ++s2) {
      const std::int8_t* ca = &chi_[(((s1 + H1) % p) * p + (s2 + H2) % p) * p];
      const std::int8_t* cb = &chi_[(s1 * p + s2) * p];
      const std::uint64_t ms = (M1 * s1 + M2 * s2) % p;
      for (std::uint64_t a = 0; a < p; ++a) {
        if (ca[a] == 0) continue;
        for (std::uint64_t b = 0; b < p; ++b) {
          if (cb[b] == 0) continue;
          const std::uint64_t phase = (L * ((a + p - b) % p) + ms) % p;
          acc += static_cast<double>(ca[a] * cb[b]) * ctx_.e(static_cast<std::int64_t>(phase));
        }
      }
    }
  }
  return SumValue(acc, p * p * p * p);
}

const std::vector<cplx>& WpEvaluator::TTable(std::int64_t lambda) {
  const std::uint64_t p = p_;
  const auto L = static_cast<std::int64_t>(Res(lambda, p));
  if (L == cached_lambda_) return t_;
  t_.assign(p * p, cplx(0));
  for (std::uint64_t s = 0; s < p * p; ++s) {
    const std::int8_t* row = &chi_[s * p];
    cplx acc = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
      if (row[a] != 0) acc += static_cast<double>(row[a]) * ctx_.e(static_cast<std::int64_t>(L * a % p));
    }
    t_[s] = acc;
  }
  cached_lambda_ = L;
  return t_;
}

SumValue WpEvaluator::Factored(std::int64_t lambda, std::int64_t h1, std::int64_t h2, std::int64_t mu1,
                               std::int64_t mu2) {
  const std::uint64_t p = p_;
  const std::uint64_t H1 = Res(h1, p), H2 = Res(h2, p), M1 = Res(mu1, p), M2 = Res(mu2, p);
  const std::vector<cplx>& T = TTable(lambda);
  cplx acc = 0;
  for (std::uint64_t s1 = 0; s1 < p; ++s1) {
    for (std::uint64_t s2 = 0; s2 < p; ++s2) {
      const cplx shifted = T[((s1 + H1) % p) * p + (s2 + H2) % p];
      acc += shifted * std::conj(T[s1 * p + s2]) * ctx_.e(static_cast<std::int64_t>((M1 * s1 + M2 * s2) % p));
    }
  }
  return SumValue(acc, p * p * p * p);
}

SumValue SumWp(const WpParams& w, const Surface& s, WpAlgorithm algorithm) {
  WpEvaluator ev(s, w.p);
  const bool naive = algorithm == WpAlgorithm::kNaive || (algorithm == WpAlgorithm::kAuto && w.p <= 31);
  return naive ? ev.Naive(w.lambda, w.h1, w.h2, w.mu1, w.mu2) : ev.Factored(w.lambda, w.h1, w.h2, w.mu1, w.mu2);
}

SumValue SumWpij(const WpParams& w, const Surface& s) {
  const std::uint64_t p = w.p;
  RequirePrime(p, "W_pij");
  Require((w.i == 0 || w.i == 1) && (w.j == 0 || w.j == 1), "W_pij: sector indices must be 0 or 1");
  const ExtCtx ctx(p, 1);
  const PrimeCtx& base = ctx.base();
  const std::vector<std::uint32_t> cnt = PowerCountTable(ctx, 2 * static_cast<std::uint64_t>(s.n));
  const std::uint64_t gamma = base.gamma();
  const std::uint64_t gi = w.i ? gamma : 1, gj = w.j ? gamma : 1;
  const std::uint64_t gni = PowN(gi, s.n, p), gnj = PowN(gj, s.n, p);
  const FormMod f = ReduceForm(s.f, p), g = ReduceForm(s.g, p);
  const std::uint64_t L = Res(w.lambda, p), H1 = Res(w.h1, p), H2 = Res(w.h2, p);
  const std::uint64_t M1 = Res(w.mu1, p), M2 = Res(w.mu2, p);

  std::vector<std::uint64_t> x2(p), x2n(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    x2[x] = x * x % p;
    x2n[x] = PowN(x2[x], s.n, p);
  }
  std::vector<std::uint32_t> wx(p), wy(p);
  cplx acc = 0;
  for (std::uint64_t s1 = 0; s1 < p; ++s1) {
    for (std::uint64_t s2 = 0; s2 < p; ++s2) {
      const std::uint64_t F = f(s1, s2), G = g(s1, s2);
      const std::uint64_t Fh = f(s1 + H1, s2 + H2), Gh = g(s1 + H1, s2 + H2);
      for (std::uint64_t x = 0; x < p; ++x) {
        wx[x] = cnt[(gni * x2n[x] + gi * x2[x] % p * F + G) % p];
        wy[x] = cnt[(gnj * x2n[x] + gj * x2[x] % p * Fh + Gh) % p];
      }
      const std::uint64_t ms = (M1 * s1 + M2 * s2) % p;
      for (std::uint64_t x = 0; x < p; ++x) {
        if (wx[x] == 0) continue;
        const std::uint64_t ax = gi * x2[x] % p;
        for (std::uint64_t y = 0; y < p; ++y) {
          if (wy[y] == 0) continue;
          const std::uint64_t diff = (ax + p - gj * x2[y] % p) % p;
          const std::uint64_t phase = (ms + p - L * diff % p) % p;
          acc += static_cast<double>(wx[x]) * wy[y] * base.e(static_cast<std::int64_t>(phase));
        }
      }
    }
  }
  const double np = static_cast<double>(p);
  return SumValue(acc, static_cast<std::uint64_t>(np * np * np * np * 4 * s.n * s.n));
}

WkFactor WkFactorize(std::uint64_t p, std::uint64_t pp, std::int64_t k1, std::int64_t k2, std::int64_t c,
                     std::uint64_t r1, std::int64_t h1, std::int64_t h2, const Surface& s, bool force) {
  RequirePrime(p, "wk_factor");
  RequirePrime(pp, "wk_factor");
  Require(p != pp, "wk_factor: p and p' must be distinct");
  const std::uint64_t r0 = p * pp;
  Require(r1 >= 1 && Gcd(r1, r0) == 1, "wk_factor: r1 must be coprime to p p'");
  CheckBudget(static_cast<double>(r0) * r0 * r0, force, "wk_factor");

  const std::uint64_t r1bar = InvMod(static_cast<std::int64_t>(r1 % r0), r0);
  const std::uint64_t lam0 = Res(c, r0) * r1bar % r0;
  const ModChars mc(r0);
  const FormMod f = ReduceForm(s.f, r0), g = ReduceForm(s.g, r0);
  std::vector<cplx> T(r0 * r0);
  for (std::uint64_t s1 = 0; s1 < r0; ++s1) {
    for (std::uint64_t s2 = 0; s2 < r0; ++s2) {
      const std::uint64_t F = f(s1, s2), G = g(s1, s2);
      cplx acc = 0;
      for (std::uint64_t a = 0; a < r0; ++a) {
        const int j = mc.jacobi((PowN(a, s.n, r0) + a * F + G) % r0);
        if (j != 0) acc += static_cast<double>(j) * mc.e(static_cast<std::int64_t>(lam0 * a % r0));
      }
      T[s1 * r0 + s2] = acc;
    }
  }
  const std::uint64_t sh1 = Res(h1, r0) * (r1 % r0) % r0, sh2 = Res(h2, r0) * (r1 % r0) % r0;
  const std::uint64_t K1 = Res(k1, r0), K2 = Res(k2, r0);
  cplx direct = 0;
  for (std::uint64_t s1 = 0; s1 < r0; ++s1) {
    for (std::uint64_t s2 = 0; s2 < r0; ++s2) {
      direct += T[((s1 + sh1) % r0) * r0 + (s2 + sh2) % r0] * std::conj(T[s1 * r0 + s2]) *
                mc.e(static_cast<std::int64_t>((K1 * s1 + K2 * s2) % r0));
    }
  }
  const double n0 = static_cast<double>(r0);

  auto factor = [&](std::uint64_t q, std::uint64_t other) {
    const std::uint64_t inv_other = InvMod(static_cast<std::int64_t>(other % q), q);
    const std::uint64_t inv_r1 = InvMod(static_cast<std::int64_t>(r1 % q), q);
    WpParams w;
    w.p = q;
    w.lambda = static_cast<std::int64_t>(Res(c, q) * inv_r1 % q * inv_other % q);
    w.h1 = static_cast<std::int64_t>(Res(h1, q) * (r1 % q) % q);
    w.h2 = static_cast<std::int64_t>(Res(h2, q) * (r1 % q) % q);
    w.mu1 = static_cast<std::int64_t>(Res(k1, q) * inv_other % q);
    w.mu2 = static_cast<std::int64_t>(Res(k2, q) * inv_other % q);
    return SumWp(w, s, WpAlgorithm::kFactored);
  };
  return {SumValue(direct, static_cast<std::uint64_t>(n0 * n0 * n0 * n0)), factor(p, pp), factor(pp, p)};
}

}  // namespace hypfib
