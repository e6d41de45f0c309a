#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypfib/tau.hpp"

namespace hypfib {

enum class CountKind { kSix, kFive };

// N(tau) for every tau, indexed by the F_q encoding.
std::vector<std::uint64_t> CountTable(const TauSpec& spec, CountKind kind, bool force = false);

// sum_tau N(tau) psi(twist tau), psi = e_p o Tr.
SumValue HooleyS(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts, Fq twist);
// sum over twist != 0 of |S(twist)|^2.
double MomentM(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts);

struct ParsevalCheck {
  long double lhs = 0;  // sum over all twists of |S|^2
  long double rhs = 0;  // q sum N^2
  long double residual() const { return lhs > rhs ? lhs - rhs : rhs - lhs; }
};
ParsevalCheck Parseval(const ExtCtx& ctx, const std::vector<std::uint64_t>& counts);

struct MomentReport {
  std::uint32_t q = 0;
  int r = 1;
  CountKind kind = CountKind::kSix;
  double reference = 0;  // q^3
  std::vector<std::uint64_t> per_tau;
  long double second_moment = 0;  // sum_tau |N(tau) - q^3|^2
  double ratio_kappa5 = 0;        // second_moment / q^5
  double M = 0;
  double max_S = 0;  // over twist != 0
  double ratio_kappa25 = 0;  // max_S / q^{5/2}
  long double parseval_residual = 0;
  bool moment_bound_ok = false;  // M <= q second_moment
};

// Requires p good with p = 2 mod n and (h, mu) != 0.
MomentReport MomentBoundReport(const TauSpec& spec, CountKind kind = CountKind::kSix, bool force = false);
std::string MomentJson(const MomentReport& rep, int indent = 2);

}  // namespace hypfib
