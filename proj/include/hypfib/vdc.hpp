#pragma once

#include <cstdint>
#include <vector>

#include "hypfib/charsums.hpp"

namespace hypfib {

enum class HRule { kFloorB, kFloor4B };  // H = floor(B/r1) or floor(4B/r1)

// Data for the differencing chain with r0 = p p', r1 = q q', r = r0 r1.
class VdcContext {
 public:
  VdcContext(const Surface& s, std::uint64_t p, std::uint64_t pp, std::uint64_t q, std::uint64_t qq,
             std::int64_t c, std::uint64_t B, HRule rule = HRule::kFloorB);

  std::uint64_t r0() const { return r0_; }
  std::uint64_t r1() const { return r1_; }
  std::uint64_t B() const { return B_; }
  std::int64_t H() const { return H_; }
  std::int64_t c() const { return c_; }
  bool coprime_c() const { return Gcd(Res0(c_), r0_) == 1; }

  // S(r0, c/r1, u) and S(r1, c/r0, u) for any integer u (periodic tables).
  SumValue S0(std::int64_t u1, std::int64_t u2) const;
  SumValue S1(std::int64_t u1, std::int64_t u2) const;
  // A0 is S0 restricted to the box |u| <= B.
  SumValue A0(std::int64_t u1, std::int64_t u2) const;
  bool InBox(std::int64_t u1, std::int64_t u2) const;

 private:
  std::uint64_t Res0(std::int64_t v) const;
  std::uint64_t p_, pp_, q_, qq_;
  std::uint64_t r0_, r1_;
  std::int64_t c_;
  std::uint64_t B_;
  std::int64_t H_;
  std::vector<SumValue> s0_, s1_;
};

// max over h in [1,H]^2 of the |S1|^2 mass over the single shifted box.
double Sigma1(const VdcContext& v);
// |S1|^2 mass over the union of all shifted boxes, which is what Cauchy-Schwarz needs.
double Sigma1Union(const VdcContext& v);
double Sigma2Exact(const VdcContext& v);
double Sigma2A(const VdcContext& v);
double Sigma2B(const VdcContext& v);
// Truncated-box correlation of A0 with its shift by h r1; h != 0.
SumValue SumT(const VdcContext& v, std::int64_t h1, std::int64_t h2);

// U(r0 r1, c, B) assembled from the CRT factors on the box.
SumValue VdcU(const VdcContext& v);
// sum_u S1(u) sum_h A0(u + h r1), equal to H^2 U.
SumValue VdcReconstruction(const VdcContext& v);

struct VdcReport {
  double U_abs = 0;
  double sigma1 = 0, sigma1_union = 0, sigma2 = 0, sigma2A = 0, sigma2B = 0;
  double lhs = 0;            // H^2 |U|
  double rhs_literal = 0;    // sqrt(sigma1 * sigma2)
  double rhs_union = 0;      // sqrt(sigma1_union * sigma2)
  double sigma2_bound = 0;   // 2 H^2 (sigma2A + sigma2B)
  double reconstruction_residual = 0;
  double sigma1_ratio = 0, sigma2A_ratio = 0, sigma2B_ratio = 0, U_bound_ratio = 0;
  bool differencing_literal = false, differencing_union = false, sigma2_ok = false;
};

VdcReport AuditVdc(const VdcContext& v);

}  // namespace hypfib
