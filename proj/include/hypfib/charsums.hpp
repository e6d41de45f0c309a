#pragma once

#include <cstdint>
#include <vector>

#include "hypfib/counting.hpp"
#include "hypfib/ff.hpp"
#include "hypfib/forms.hpp"

namespace hypfib {

// Jacobi symbols and additive characters modulo an odd squarefree r, tabulated.
class ModChars {
 public:
  explicit ModChars(std::uint64_t r);

  std::uint64_t r() const { return r_; }
  int jacobi(std::uint64_t a) const { return jac_[a % r_]; }
  cplx e(std::int64_t t) const { return roots_[static_cast<std::size_t>(Mod(t, static_cast<std::int64_t>(r_)))]; }

 private:
  std::uint64_t r_;
  std::vector<std::int8_t> jac_;
  std::vector<cplx> roots_;
};

void RequireOddSquarefree(std::uint64_t r, const char* what);

// sum_x (x^n + a x + b / p) e_p(c x). Even n is computable but outside the
// hypotheses of the square-root bound.
SumValue RiemSum(std::uint64_t p, int n, std::int64_t a, std::int64_t b, std::int64_t c);
// (n+1) sqrt(p) + n
double RiemBound(std::uint64_t p, int n);
inline bool RiemWithinHypotheses(int n) { return n % 2 == 1; }

enum class SMethod { kDirect, kCrt };

// S(r,c,u) = sum_{alpha mod r} (alpha^n + alpha f(u) + g(u) / r) e_r(c alpha).
SumValue SumS(std::uint64_t r, std::int64_t c, std::int64_t u1, std::int64_t u2, const Surface& s,
              SMethod method = SMethod::kDirect);
// S(r0, c r1^{-1}, u) * S(r1, c r0^{-1}, u) for coprime r0, r1.
SumValue SumSSplit(std::uint64_t r0, std::uint64_t r1, std::int64_t c, std::int64_t u1, std::int64_t u2,
                   const Surface& s);
// Same sum with precomputed tables; s1, s2 are residues mod mc.r().
SumValue SumSResidue(const ModChars& mc, int n, const FormMod& f, const FormMod& g, std::int64_t c,
                     std::uint64_t s1, std::uint64_t s2);

// U(r,c,B) = sum_{|u1|,|u2| <= B} S(r,c,u).
SumValue SumU(std::uint64_t r, std::int64_t c, std::uint64_t B, const Surface& s);
// |U| / (B^2 r^{1/2}).
double UBoxRatio(const SumValue& U, std::uint64_t B, std::uint64_t r);

enum class CMethod { kDirect, kWeighted };

// C(r) = sum over the box of (x^n + x f(u) + g(u) / r). The weighted method
// regroups by value through the omega table, which must then be supplied.
SumValue SumC(std::uint64_t r, std::uint64_t B, const Surface& s, CMethod method,
              const OmegaTable* omega = nullptr, bool force = false);

struct WpParams {
  std::uint64_t p = 5;
  std::int64_t lambda = 1;
  std::int64_t h1 = 0, h2 = 0;
  std::int64_t mu1 = 0, mu2 = 0;
  int i = 0, j = 0;  // sector for the split sums
};

struct WpHypotheses {
  bool good_prime = false;  // good, including p = 2 mod n
  bool lambda_nonzero = false;
  bool shift_nonzero = false;  // (h, mu) != 0
  bool within() const { return good_prime && lambda_nonzero && shift_nonzero; }
};

WpHypotheses CheckWpHypotheses(const WpParams& w, const Surface& s);

enum class WpAlgorithm { kNaive, kFactored, kAuto };

// Evaluates W_p for one prime and surface, caching T_s(lambda) tables.
class WpEvaluator {
 public:
  WpEvaluator(const Surface& s, std::uint64_t p);

  std::uint64_t p() const { return p_; }
  SumValue Naive(std::int64_t lambda, std::int64_t h1, std::int64_t h2, std::int64_t mu1, std::int64_t mu2) const;
  SumValue Factored(std::int64_t lambda, std::int64_t h1, std::int64_t h2, std::int64_t mu1, std::int64_t mu2);
  // T_s(lambda) for all s, indexed s1 * p + s2.
  const std::vector<cplx>& TTable(std::int64_t lambda);

 private:
  std::uint64_t p_;
  PrimeCtx ctx_;
  std::vector<std::int8_t> chi_;  // chi(alpha^n + alpha f(s) + g(s)) at (s1 * p + s2) * p + alpha
  std::int64_t cached_lambda_ = -1;
  std::vector<cplx> t_;
};

SumValue SumWp(const WpParams& w, const Surface& s, WpAlgorithm algorithm = WpAlgorithm::kAuto);

// Split sum over solutions of G1^(i) = G2^(j) = 0 in F_p^6 with phase
// e_p(-lambda(gamma^i x^2 - gamma^j y^2) + mu . s); the four sectors average to W_p(lambda).
SumValue SumWpij(const WpParams& w, const Surface& s);

// W(k) modulo r0 = p p' computed directly, and its two prime factors
// W_p(c/(r1 p'), h r1, k/p') and W_p'(c/(r1 p), h r1, k/p) (inverses taken mod p, p').
struct WkFactor {
  SumValue direct;
  SumValue wp;
  SumValue wpp;
};

WkFactor WkFactorize(std::uint64_t p, std::uint64_t pp, std::int64_t k1, std::int64_t k2, std::int64_t c,
                     std::uint64_t r1, std::int64_t h1, std::int64_t h2, const Surface& s, bool force = false);

}  // namespace hypfib
