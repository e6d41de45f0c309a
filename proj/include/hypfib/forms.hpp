#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypfib/ff.hpp"
#include "hypfib/poly.hpp"

namespace hypfib {

using BigInt = boost::multiprecision::cpp_int;

// sum_i c_i S1^{d-i} S2^i with exact integer coefficients.
struct BinaryForm {
  int degree = 0;
  std::vector<BigInt> coeffs{0};

  BinaryForm() = default;
  BinaryForm(int d, std::vector<BigInt> c);
  static BinaryForm Zero(int d);
  // c * S1^{d-i} S2^i
  static BinaryForm Monomial(int d, int i, BigInt c = 1);

  bool IsZero() const;
  BigInt Eval(const BigInt& s1, const BigInt& s2) const;
  BigInt Height() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);

enum class Axis { kS1, kS2 };

// Degree d-1 form; the zero form of degree 0 when d == 0.
BinaryForm DerivativeForm(const BinaryForm& F, Axis axis);

std::uint64_t ReduceMod(const BigInt& v, std::uint64_t p);

// Form with coefficients reduced modulo an arbitrary m < 2^32.
struct FormMod {
  std::uint64_t m = 1;
  int degree = 0;
  std::vector<std::uint64_t> c{0};
  std::uint64_t operator()(std::uint64_t s1, std::uint64_t s2) const;
};

FormMod ReduceForm(const BinaryForm& F, std::uint64_t m);

// Coefficients of a form reduced into F_p (and embedded in F_q).
struct ReducedForm {
  int degree = 0;
  std::vector<Fq> c;
};

ReducedForm Reduce(const BinaryForm& F, const ExtCtx& ctx);
Fq EvalForm(const ReducedForm& F, Fq s1, Fq s2, const ExtCtx& ctx);
Fq EvalForm(const BinaryForm& F, Fq s1, Fq s2, const ExtCtx& ctx);

// F at every point of F_q^2, indexed s1 * q + s2.
std::vector<Fq> FormTable(const BinaryForm& F, const ExtCtx& ctx);

// F_h(S1, S2, T) = F(S1 + h1 T, S2 + h2 T).
class ShiftedForm {
 public:
  ShiftedForm(const BinaryForm& base, Fq h1, Fq h2, const ExtCtx& ctx);

  Fq eval(Fq s1, Fq s2, Fq t) const;
  // dF_h/dT = (h . grad F)(s + h t)
  Fq d_dt(Fq s1, Fq s2, Fq t) const;
  Fq d_ds1(Fq s1, Fq s2, Fq t) const;
  Fq d_ds2(Fq s1, Fq s2, Fq t) const;

 private:
  const ExtCtx* ctx_;
  Fq h1_, h2_;
  ReducedForm f_, f1_, f2_;
};

Fq ShiftedEval(const BinaryForm& F, Fq h1, Fq h2, Fq s1, Fq s2, Fq t, const ExtCtx& ctx);

// Canonical representative of a point of P^1: [x:1] or [1:0].
struct ProjPoint {
  Fq s1 = 0;
  Fq s2 = 1;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Throws InputError if F vanishes identically mod p.
std::vector<ProjPoint> ProjectiveRoots(const BinaryForm& F, const ExtCtx& ctx);

// dF/dS1(P1) dF/dS2(P2) - dF/dS2(P1) dF/dS1(P2). Inputs must be roots of F.
Fq RootGradientDet(const BinaryForm& F, ProjPoint P1, ProjPoint P2, const ExtCtx& ctx);

// G(T) = F(s1 + h1 T, s2 + h2 T) over F_p.
PolyP RestrictToLine(const BinaryForm& F, std::uint64_t s1, std::uint64_t s2, std::uint64_t h1,
                     std::uint64_t h2, std::uint64_t p);

enum class SepReason { kSeparable, kZeroModP, kRepeatedAtInfinity, kRepeatedFinite };

struct Separability {
  bool separable = false;
  SepReason reason = SepReason::kZeroModP;
};

Separability CheckSeparableModP(const BinaryForm& g, std::uint64_t p);
bool IsSeparableModP(const BinaryForm& g, std::uint64_t p);
std::string ToString(SepReason r);

struct Surface {
  int n = 3;
  BinaryForm f;
  BinaryForm g;
};

// Throws InputError naming the violated constraint.
void ValidateSurface(const Surface& s);
Surface MakeSurface(int n, BinaryForm f, BinaryForm g);
// n = 3, f = 0, g = S1^6 + S2^6.
Surface SampleSurface();

// Exact over the algebraic closure of F_p. Requires p odd prime, p not dividing 2n(n-1).
bool IsSmoothModP(const Surface& s, std::uint64_t p);
bool GoodPrime(const Surface& s, std::uint64_t p, bool require_congruence);

}  // namespace hypfib
