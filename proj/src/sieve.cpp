#include "hypfib/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hypfib/charsums.hpp"
#include "hypfib/errors.hpp"
#include "hypfib/rng.hpp"

namespace hypfib {

namespace {

// Least integer v >= 1 with v^a >= B^b.
std::uint64_t CeilRootPow(std::uint64_t B, unsigned b, unsigned a) {
  const BigInt target = boost::multiprecision::pow(BigInt(B), b);
  std::uint64_t v = 1;
  while (boost::multiprecision::pow(BigInt(v), a) < target) ++v;
  return v;
}

std::uint64_t FloorSqrt(std::uint64_t B) {
  std::uint64_t v = 0;
  while ((v + 1) * (v + 1) <= B) ++v;
  return v;
}

}  // namespace

SievePlan BuildPlan(const Surface& s, std::uint64_t B) {
  ValidateSurface(s);
  Require(B >= 16, "build_plan: B must be >= 16, got " + std::to_string(B));
  SievePlan plan;
  plan.B = B;
  plan.P = CeilRootPow(B, 3, 5);
  plan.Q = CeilRootPow(B, 9, 20);
  if (plan.Q > FloorSqrt(B)) {
    plan.Q = FloorSqrt(B);
    plan.q_capped = true;
  }
  const auto n = static_cast<std::uint64_t>(s.n);
  for (std::uint64_t p = plan.P; p <= 2 * plan.P; ++p) {
    if (p % n == 2 % n && GoodPrime(s, p, true)) plan.primes_p.push_back(p);
  }
  for (std::uint64_t q = std::max<std::uint64_t>(plan.Q, 3); q <= 2 * plan.Q; ++q) {
    if (IsPrime(q) && std::find(plan.primes_p.begin(), plan.primes_p.end(), q) == plan.primes_p.end()) {
      plan.primes_q.push_back(q);
    }
  }
  Require(!plan.primes_p.empty(), "build_plan: no good prime p = 2 mod n in [" + std::to_string(plan.P) + ", " +
                                      std::to_string(2 * plan.P) + "]");
  Require(!plan.primes_q.empty(),
          "build_plan: no odd prime in [" + std::to_string(plan.Q) + ", " + std::to_string(2 * plan.Q) + "]");
  Require(PlanConstraintsHold(plan), "build_plan: Q <= sqrt(B) <= P <= B, PQ >= B violated");
  return plan;
}

bool PlanConstraintsHold(const SievePlan& plan) {
  const std::uint64_t B = plan.B;
  return plan.Q * plan.Q <= B && B <= plan.P * plan.P && plan.P <= B && plan.P * plan.Q >= B;
}

std::int64_t SumCFromTable(const OmegaTable& omega, std::uint64_t r) {
  const ModChars mc(r);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    acc += static_cast<std::int64_t>(omega.count(i)) * mc.jacobi(omega.residue(i, r));
  }
  return acc;
}

namespace {

// sum over l in L, (a, a') distinct pairs in S of sum_{l | m} omega(m) (m / a a').
std::int64_t ErrorSum(const OmegaTable& omega, const std::vector<std::uint64_t>& L,
                      const std::vector<std::uint64_t>& S) {
  if (S.size() < 2) return 0;
  std::int64_t total = 0;
  for (std::uint64_t l : L) {
    for (std::uint64_t a : S) {
      for (std::uint64_t b : S) {
        if (a == b) continue;
        const ModChars mc(a * b);
        for (std::size_t i = 0; i < omega.size(); ++i) {
          if (omega.residue(i, l) == 0) {
            total += static_cast<std::int64_t>(omega.count(i)) * mc.jacobi(omega.residue(i, a * b));
          }
        }
      }
    }
  }
  return total;
}

}  // namespace

ErrorTerms ComputeErrorTerms(const SievePlan& plan, const OmegaTable& omega) {
  return ErrorTerms{ErrorSum(omega, plan.primes_q, plan.primes_p), ErrorSum(omega, plan.primes_p, plan.primes_q)};
}

SieveReport SieveAudit(const Surface& s, std::uint64_t B, bool force, std::uint64_t seed) {
  SieveReport rep;
  rep.plan = BuildPlan(s, B);
  const SievePlan& pl = rep.plan;
  const OmegaTable omega = OmegaTable::Build(s, B, force);
  rep.count_N = CountN(s, B, force);
  rep.omega0 = omega.at(0);
  rep.lhs_box = omega.SquareMass(boost::multiprecision::pow(BigInt(B), static_cast<unsigned>(s.n)));
  rep.lhs_full = omega.SquareMass(-1);
  rep.box_identity = 2 * rep.lhs_box == rep.count_N + rep.omega0;

  const auto& Ps = pl.primes_p;
  const auto& Qs = pl.primes_q;
  const double nP = Ps.size(), nQ = Qs.size(), nA = static_cast<double>(pl.A());
  const double b = static_cast<double>(B), P = static_cast<double>(pl.P), Q = static_cast<double>(pl.Q);
  const double lg = std::log(b);
  const double lead = std::pow(b, 4) * lg * lg / (P * Q);
  const double b4pq = std::pow(b, 4) / (P * Q);

  // Moduli pp'qq' for ordered distinct pairs; |C| is symmetric in each pair.
  struct Quad {
    std::uint64_t r;
    double weight;
  };
  std::vector<Quad> quads;
  for (std::size_t a = 0; a < Ps.size(); ++a) {
    for (std::size_t a2 = a + 1; a2 < Ps.size(); ++a2) {
      for (std::size_t c = 0; c < Qs.size(); ++c) {
        for (std::size_t c2 = 0; c2 < Qs.size(); ++c2) {
          if (c != c2) quads.push_back({Ps[a] * Ps[a2] * Qs[c] * Qs[c2], 2});
        }
      }
    }
  }
  const double table_cost = static_cast<double>(omega.size());
  std::size_t keep = quads.size();
  if (!force && table_cost * static_cast<double>(quads.size()) > kLoopBudget) {
    keep = std::max<std::size_t>(1, static_cast<std::size_t>(kLoopBudget / table_cost));
    KeyedRng rng(seed, "sieve/sample");
    for (std::size_t k = 0; k < keep; ++k) std::swap(quads[k], quads[k + rng.Below(quads.size() - k)]);
    const double scale = static_cast<double>(quads.size()) / static_cast<double>(keep);
    quads.resize(keep);
    for (auto& qd : quads) qd.weight *= scale;
    rep.sampled = true;
  }
  std::vector<double> cvals(quads.size());
  ParallelFor(quads.size(), [&](std::size_t k) {
    cvals[k] = std::abs(static_cast<double>(SumCFromTable(omega, quads[k].r)));
  });
  double t2 = 0;
  for (std::size_t k = 0; k < quads.size(); ++k) t2 += quads[k].weight * cvals[k];
  t2 /= nA * nA;

  auto pair_sum = [&](const std::vector<std::uint64_t>& S) {
    double acc = 0;
    for (std::size_t a = 0; a < S.size(); ++a) {
      for (std::size_t a2 = a + 1; a2 < S.size(); ++a2) {
        acc += 2 * std::abs(static_cast<double>(SumCFromTable(omega, S[a] * S[a2])));
      }
    }
    return acc;
  };
  const double t3 = nQ / (nA * nA) * pair_sum(Ps);
  const double t5 = nP / (nA * nA) * pair_sum(Qs);
  const ErrorTerms E = ComputeErrorTerms(pl, omega);

  rep.terms = {
      {"lead", static_cast<double>(omega.total()) / nA, lead},
      {"C_ppqq", t2, (b * P * Q * Q * Q + b * std::pow(P, 2.5) * Q + b4pq) * lg * lg},
      {"C_pp", t3, lead},
      {"E_P", std::abs(static_cast<double>(E.E_P)) / (nA * nA), lg / Q * (b4pq + b * b * P * P)},
      {"C_qq", t5, lead},
      {"E_Q", std::abs(static_cast<double>(E.E_Q)) / (nA * nA), lg / P * (b4pq + b * b * Q * Q)},
  };
  for (const auto& t : rep.terms) rep.rhs += t.exact;

  // Cross-check the table against the literal triple sum on the smallest moduli.
  const double cells = (2 * b * b + 1) * (2 * b + 1) * (2 * b + 1);
  if (force || cells * 2 <= kLoopBudget) {
    rep.direct_checked = true;
    rep.direct_agrees = true;
    std::vector<std::uint64_t> moduli = {Qs.front()};
    if (Qs.size() >= 2) moduli.push_back(Qs[0] * Qs[1]);
    for (std::uint64_t r : moduli) {
      const SumValue d = SumC(r, B, s, CMethod::kDirect, nullptr, force);
      if (d.re != static_cast<double>(SumCFromTable(omega, r))) rep.direct_agrees = false;
    }
  }
  return rep;
}

std::string SieveCsv(const SieveReport& rep) {
  std::ostringstream os;
  os << std::setprecision(12);
  os << "term_name,exact_value,paper_majorant,ratio\n";
  for (const auto& t : rep.terms) os << t.name << ',' << t.exact << ',' << t.majorant << ',' << t.ratio() << '\n';
  os << "lhs_full," << rep.lhs_full << ',' << rep.rhs << ',' << rep.ratio() << '\n';
  os << "lhs_box," << rep.lhs_box << ",," << '\n';
  return os.str();
}

std::vector<TrendRow> CountTrend(const Surface& s, const std::vector<std::uint64_t>& Bs, bool force) {
  std::vector<TrendRow> out;
  for (std::uint64_t B : Bs) {
    Require(B >= 2, "count trend: B must be >= 2");
    TrendRow row{B, CountN(s, B, force), 0};
    const double b = static_cast<double>(B);
    row.normalized = static_cast<double>(row.count_N) / (std::pow(b, 3.0 - 1.0 / 20) * std::pow(std::log(b), 2));
    out.push_back(row);
  }
  return out;
}

}  // namespace hypfib
