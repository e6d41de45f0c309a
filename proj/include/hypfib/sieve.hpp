#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypfib/counting.hpp"
#include "hypfib/forms.hpp"

namespace hypfib {

struct SievePlan {
  std::uint64_t B = 0;
  std::uint64_t P = 0;  // least integer with P^5 >= B^3
  std::uint64_t Q = 0;  // least integer with Q^20 >= B^9, capped at floor(sqrt B)
  bool q_capped = false;
  std::vector<std::uint64_t> primes_p;  // p = 2 mod n, good, P <= p <= 2P
  std::vector<std::uint64_t> primes_q;  // odd, Q <= q <= 2Q, not in primes_p
  std::size_t A() const { return primes_p.size() * primes_q.size(); }
};

// Requires B >= 16; throws if either prime range is empty.
SievePlan BuildPlan(const Surface& s, std::uint64_t B);
// Q <= sqrt(B) <= P <= B and PQ >= B.
bool PlanConstraintsHold(const SievePlan& plan);

struct ErrorTerms {
  std::int64_t E_P = 0;
  std::int64_t E_Q = 0;
};
ErrorTerms ComputeErrorTerms(const SievePlan& plan, const OmegaTable& omega);

// C(r) = sum_m omega(m) (m / r) from the omega table.
std::int64_t SumCFromTable(const OmegaTable& omega, std::uint64_t r);

struct SieveTerm {
  std::string name;
  double exact = 0;
  double majorant = 0;
  double ratio() const { return majorant > 0 ? exact / majorant : 0; }
};

struct SieveReport {
  SievePlan plan;
  std::uint64_t count_N = 0;
  std::uint64_t omega0 = 0;
  std::uint64_t lhs_box = 0;   // sum over 0 <= m <= B^n of omega(m^2)
  std::uint64_t lhs_full = 0;  // sum over all m >= 0 of omega(m^2)
  bool box_identity = false;   // 2 lhs_box = count_N + omega(0)
  std::vector<SieveTerm> terms;  // the six right-hand terms
  double rhs = 0;
  bool sampled = false;  // some C-terms were estimated from a seeded sample
  bool direct_agrees = false;  // C from the table equals the direct triple sum
  bool direct_checked = false;
  double ratio() const { return rhs > 0 ? static_cast<double>(lhs_full) / rhs : 0; }
};

SieveReport SieveAudit(const Surface& s, std::uint64_t B, bool force = false, std::uint64_t seed = 0);
std::string SieveCsv(const SieveReport& rep);

struct TrendRow {
  std::uint64_t B = 0;
  std::uint64_t count_N = 0;
  double normalized = 0;  // count_N / (B^{3 - 1/20} (log B)^2)
};
std::vector<TrendRow> CountTrend(const Surface& s, const std::vector<std::uint64_t>& Bs, bool force = false);

}  // namespace hypfib
