#include "hypfib/forms.hpp"

#include <algorithm>

#include "hypfib/errors.hpp"

namespace hypfib {

namespace {

// Form of degree d over F_p, coefficients c_0..c_d as in BinaryForm.
struct FormP {
  int d = 0;
  std::vector<std::uint64_t> c{0};
};

FormP ToFormP(const BinaryForm& F, std::uint64_t p) {
  FormP out;
  out.d = F.degree;
  out.c.resize(F.coeffs.size());
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) out.c[i] = ReduceMod(F.coeffs[i], p);
  return out;
}

bool IsZero(const FormP& F) {
  return std::all_of(F.c.begin(), F.c.end(), [](std::uint64_t v) { return v == 0; });
}

FormP Mul(const FormP& a, const FormP& b, std::uint64_t p) {
  FormP out;
  out.d = a.d + b.d;
  out.c.assign(out.d + 1, 0);
  for (int i = 0; i <= a.d; ++i) {
    for (int j = 0; j <= b.d; ++j) out.c[i + j] = (out.c[i + j] + a.c[i] * b.c[j]) % p;
  }
  return out;
}

FormP Pow(const FormP& a, int e, std::uint64_t p) {
  FormP out;
  out.c = {1 % p};
  for (int k = 0; k < e; ++k) out = Mul(out, a, p);
  return out;
}

FormP Scale(FormP a, std::uint64_t k, std::uint64_t p) {
  for (auto& v : a.c) v = v * (k % p) % p;
  return a;
}

FormP Sub(const FormP& a, const FormP& b, std::uint64_t p) {
  Require(a.d == b.d, "form subtraction needs equal degrees");
  FormP out = a;
  for (int i = 0; i <= a.d; ++i) out.c[i] = (a.c[i] + p - b.c[i]) % p;
  return out;
}

FormP Add(const FormP& a, const FormP& b, std::uint64_t p) {
  Require(a.d == b.d, "form addition needs equal degrees");
  FormP out = a;
  for (int i = 0; i <= a.d; ++i) out.c[i] = (a.c[i] + b.c[i]) % p;
  return out;
}

FormP Deriv(const FormP& F, Axis axis, std::uint64_t p) {
  FormP out;
  if (F.d == 0) return out;
  out.d = F.d - 1;
  out.c.assign(F.d, 0);
  for (int i = 0; i <= F.d; ++i) {
    if (axis == Axis::kS1 && i < F.d) out.c[i] = F.c[i] * ((F.d - i) % p) % p;
    if (axis == Axis::kS2 && i > 0) out.c[i - 1] = F.c[i] * (i % p) % p;
  }
  return out;
}

// F(T, 1) as a polynomial in T.
PolyP Dehomogenize(const FormP& F) {
  PolyP out(F.d + 1);
  for (int i = 0; i <= F.d; ++i) out[F.d - i] = F.c[i];
  Trim(out);
  return out;
}

// True if the forms share a root in P^1 over the algebraic closure.
bool CommonRoot(const std::vector<FormP>& forms, std::uint64_t p) {
  bool at_infinity = true;
  for (const auto& F : forms) at_infinity = at_infinity && F.c[0] == 0;
  if (at_infinity) return true;
  PolyP g;
  for (const auto& F : forms) g = PolyGcd(g, Dehomogenize(F), p);
  return g.empty() || Degree(g) >= 1;
}

}  // namespace

BinaryForm::BinaryForm(int d, std::vector<BigInt> c) : degree(d), coeffs(std::move(c)) {
  Require(d >= 0, "binary form degree must be non-negative");
  Require(static_cast<int>(coeffs.size()) == d + 1,
          "binary form of degree " + std::to_string(d) + " needs " + std::to_string(d + 1) +
              " coefficients, got " + std::to_string(coeffs.size()));
}

BinaryForm BinaryForm::Zero(int d) { return BinaryForm(d, std::vector<BigInt>(d + 1, 0)); }

BinaryForm BinaryForm::Monomial(int d, int i, BigInt c) {
  Require(i >= 0 && i <= d, "monomial index out of range");
  BinaryForm F = Zero(d);
  F.coeffs[i] = std::move(c);
  return F;
}

bool BinaryForm::IsZero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& v) { return v == 0; });
}

BigInt BinaryForm::Eval(const BigInt& s1, const BigInt& s2) const {
  BigInt acc = coeffs[0];
  BigInt pw = 1;
  for (int i = 1; i <= degree; ++i) {
    pw *= s2;
    acc = acc * s1 + coeffs[i] * pw;
  }
  return acc;
}

BigInt BinaryForm::Height() const {
  BigInt h = 0;
  for (const auto& c : coeffs) h = std::max(h, BigInt(abs(c)));
  return h;
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  Require(a.degree == b.degree, "form addition needs equal degrees");
  BinaryForm out = a;
  for (int i = 0; i <= a.degree; ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

BinaryForm DerivativeForm(const BinaryForm& F, Axis axis) {
  if (F.degree == 0) return BinaryForm::Zero(0);
  BinaryForm out = BinaryForm::Zero(F.degree - 1);
  for (int i = 0; i <= F.degree; ++i) {
    if (axis == Axis::kS1 && i < F.degree) out.coeffs[i] = F.coeffs[i] * (F.degree - i);
    if (axis == Axis::kS2 && i > 0) out.coeffs[i - 1] = F.coeffs[i] * i;
  }
  return out;
}

std::uint64_t ReduceMod(const BigInt& v, std::uint64_t p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t FormMod::operator()(std::uint64_t s1, std::uint64_t s2) const {
  s1 %= m;
  s2 %= m;
  std::uint64_t acc = c[0];
  std::uint64_t pw = 1 % m;
  for (int i = 1; i <= degree; ++i) {
    pw = pw * s2 % m;
    acc = (acc * s1 + c[i] * pw) % m;
  }
  return acc;
}

FormMod ReduceForm(const BinaryForm& F, std::uint64_t m) {
  Require(m >= 1 && m < (1ULL << 32), "form modulus out of range");
  FormMod out;
  out.m = m;
  out.degree = F.degree;
  out.c.clear();
  for (const auto& v : F.coeffs) out.c.push_back(ReduceMod(v, m));
  return out;
}

ReducedForm Reduce(const BinaryForm& F, const ExtCtx& ctx) {
  ReducedForm out;
  out.degree = F.degree;
  out.c.reserve(F.coeffs.size());
  for (const auto& v : F.coeffs) out.c.push_back(static_cast<Fq>(ReduceMod(v, ctx.p())));
  return out;
}

Fq EvalForm(const ReducedForm& F, Fq s1, Fq s2, const ExtCtx& ctx) {
  Fq acc = F.c[0];
  Fq pw = ctx.one();
  for (int i = 1; i <= F.degree; ++i) {
    pw = ctx.mul(pw, s2);
    acc = ctx.add(ctx.mul(acc, s1), ctx.mul(F.c[i], pw));
  }
  return acc;
}

Fq EvalForm(const BinaryForm& F, Fq s1, Fq s2, const ExtCtx& ctx) {
  return EvalForm(Reduce(F, ctx), s1, s2, ctx);
}

std::vector<Fq> FormTable(const BinaryForm& F, const ExtCtx& ctx) {
  const ReducedForm R = Reduce(F, ctx);
  const std::uint32_t q = ctx.q();
  std::vector<Fq> out(static_cast<std::size_t>(q) * q);
  for (Fq s1 = 0; s1 < q; ++s1) {
    for (Fq s2 = 0; s2 < q; ++s2) out[static_cast<std::size_t>(s1) * q + s2] = EvalForm(R, s1, s2, ctx);
  }
  return out;
}

ShiftedForm::ShiftedForm(const BinaryForm& base, Fq h1, Fq h2, const ExtCtx& ctx)
    : ctx_(&ctx),
      h1_(h1),
      h2_(h2),
      f_(Reduce(base, ctx)),
      f1_(Reduce(DerivativeForm(base, Axis::kS1), ctx)),
      f2_(Reduce(DerivativeForm(base, Axis::kS2), ctx)) {}

Fq ShiftedForm::eval(Fq s1, Fq s2, Fq t) const {
  const ExtCtx& c = *ctx_;
  return EvalForm(f_, c.add(s1, c.mul(h1_, t)), c.add(s2, c.mul(h2_, t)), c);
}

Fq ShiftedForm::d_ds1(Fq s1, Fq s2, Fq t) const {
  const ExtCtx& c = *ctx_;
  return EvalForm(f1_, c.add(s1, c.mul(h1_, t)), c.add(s2, c.mul(h2_, t)), c);
}

Fq ShiftedForm::d_ds2(Fq s1, Fq s2, Fq t) const {
  const ExtCtx& c = *ctx_;
  return EvalForm(f2_, c.add(s1, c.mul(h1_, t)), c.add(s2, c.mul(h2_, t)), c);
}

Fq ShiftedForm::d_dt(Fq s1, Fq s2, Fq t) const {
  const ExtCtx& c = *ctx_;
  return c.add(c.mul(h1_, d_ds1(s1, s2, t)), c.mul(h2_, d_ds2(s1, s2, t)));
}

Fq ShiftedEval(const BinaryForm& F, Fq h1, Fq h2, Fq s1, Fq s2, Fq t, const ExtCtx& ctx) {
  return EvalForm(F, ctx.add(s1, ctx.mul(h1, t)), ctx.add(s2, ctx.mul(h2, t)), ctx);
}

std::vector<ProjPoint> ProjectiveRoots(const BinaryForm& F, const ExtCtx& ctx) {
  const ReducedForm R = Reduce(F, ctx);
  Require(std::any_of(R.c.begin(), R.c.end(), [](Fq v) { return v != 0; }),
          "projective_roots: form vanishes identically mod " + std::to_string(ctx.p()));
  std::vector<ProjPoint> roots;
  for (Fq x = 0; x < ctx.q(); ++x) {
    if (EvalForm(R, x, ctx.one(), ctx) == 0) roots.push_back({x, ctx.one()});
  }
  if (R.c[0] == 0) roots.push_back({ctx.one(), ctx.zero()});
  return roots;
}

Fq RootGradientDet(const BinaryForm& F, ProjPoint P1, ProjPoint P2, const ExtCtx& ctx) {
  const ReducedForm R = Reduce(F, ctx);
  Require(EvalForm(R, P1.s1, P1.s2, ctx) == 0 && EvalForm(R, P2.s1, P2.s2, ctx) == 0,
          "polf_det: arguments must be roots of the form");
  const ReducedForm F1 = Reduce(DerivativeForm(F, Axis::kS1), ctx);
  const ReducedForm F2 = Reduce(DerivativeForm(F, Axis::kS2), ctx);
  return ctx.sub(ctx.mul(EvalForm(F1, P1.s1, P1.s2, ctx), EvalForm(F2, P2.s1, P2.s2, ctx)),
                 ctx.mul(EvalForm(F2, P1.s1, P1.s2, ctx), EvalForm(F1, P2.s1, P2.s2, ctx)));
}

PolyP RestrictToLine(const BinaryForm& F, std::uint64_t s1, std::uint64_t s2, std::uint64_t h1,
                     std::uint64_t h2, std::uint64_t p) {
  PolyP a{s1 % p, h1 % p};
  PolyP b{s2 % p, h2 % p};
  Trim(a);
  Trim(b);
  PolyP out;
  for (int i = 0; i <= F.degree; ++i) {
    const std::uint64_t c = ReduceMod(F.coeffs[i], p);
    if (c == 0) continue;
    PolyP term = PolyMul(PolyPow(a, F.degree - i, p), PolyPow(b, i, p), p);
    out = PolyAdd(out, PolyScale(term, c, p), p);
  }
  return out;
}

Separability CheckSeparableModP(const BinaryForm& g, std::uint64_t p) {
  Require(p >= 3 && p % 2 == 1 && IsPrime(p), "separability needs an odd prime, got " + std::to_string(p));
  const FormP G = ToFormP(g, p);
  if (IsZero(G)) return {false, SepReason::kZeroModP};
  const PolyP A = Dehomogenize(G);
  if (Degree(A) < g.degree - 1) return {false, SepReason::kRepeatedAtInfinity};
  if (Degree(PolyGcd(A, PolyDerivative(A, p), p)) > 0) return {false, SepReason::kRepeatedFinite};
  return {true, SepReason::kSeparable};
}

bool IsSeparableModP(const BinaryForm& g, std::uint64_t p) { return CheckSeparableModP(g, p).separable; }

std::string ToString(SepReason r) {
  switch (r) {
    case SepReason::kSeparable:
      return "separable";
    case SepReason::kZeroModP:
      return "zero_mod_p";
    case SepReason::kRepeatedAtInfinity:
      return "repeated_root_at_infinity";
    case SepReason::kRepeatedFinite:
      return "repeated_finite_root";
  }
  return "unknown";
}

void ValidateSurface(const Surface& s) {
  Require(s.n >= 3 && s.n % 2 == 1, "surface: n must be odd and >= 3, got " + std::to_string(s.n));
  Require(s.f.degree == 2 * s.n - 2 && static_cast<int>(s.f.coeffs.size()) == 2 * s.n - 1,
          "surface: f must have degree 2n-2 = " + std::to_string(2 * s.n - 2) + " (" +
              std::to_string(2 * s.n - 1) + " coefficients)");
  Require(s.g.degree == 2 * s.n && static_cast<int>(s.g.coeffs.size()) == 2 * s.n + 1,
          "surface: g must have degree 2n = " + std::to_string(2 * s.n) + " (" + std::to_string(2 * s.n + 1) +
              " coefficients)");
  Require(!s.g.IsZero(), "surface: g must not be identically zero");
}

Surface MakeSurface(int n, BinaryForm f, BinaryForm g) {
  Surface s{n, std::move(f), std::move(g)};
  ValidateSurface(s);
  return s;
}

Surface SampleSurface() {
  return MakeSurface(3, BinaryForm::Zero(4), BinaryForm::Monomial(6, 0) + BinaryForm::Monomial(6, 6));
}

bool IsSmoothModP(const Surface& s, std::uint64_t p) {
  ValidateSurface(s);
  Require(p >= 3 && IsPrime(p), "is_smooth_mod_p: " + std::to_string(p) + " is not an odd prime");
  const auto n = static_cast<std::uint64_t>(s.n);
  Require((2 * n) % p != 0, "is_smooth_mod_p: p divides 2n");
  Require((n - 1) % p != 0, "is_smooth_mod_p: p divides n-1 (unsupported)");

  const FormP f = ToFormP(s.f, p);
  const FormP g = ToFormP(s.g, p);
  const FormP g1 = Deriv(g, Axis::kS1, p);
  const FormP g2 = Deriv(g, Axis::kS2, p);

  // Singular points with f(u) = 0 force x = 0 and grad g(u) = 0.
  if (CommonRoot({f, g1, g2}, p)) return false;
  if (IsZero(f)) return true;

  // Singular points with f(u) != 0: common roots of h and J off the zero set of f.
  const FormP h = Add(Scale(Pow(g, s.n - 1, p), PowMod(n % p, n, p), p),
                      Scale(Pow(f, s.n, p), PowMod((n - 1) % p, n - 1, p), p), p);
  const FormP f1 = Deriv(f, Axis::kS1, p);
  const FormP f2 = Deriv(f, Axis::kS2, p);
  const FormP J = Sub(Mul(f1, g2, p), Mul(f2, g1, p), p);

  if (h.c[0] == 0 && J.c[0] == 0 && f.c[0] != 0) return false;
  PolyP common = PolyGcd(Dehomogenize(h), Dehomogenize(J), p);
  const PolyP fa = Dehomogenize(f);
  if (common.empty()) return false;
  while (Degree(common) >= 1) {
    const PolyP d = PolyGcd(common, fa, p);
    if (Degree(d) < 1) break;
    common = PolyDivMod(common, d, p).first;
  }
  return Degree(common) < 1;
}

bool GoodPrime(const Surface& s, std::uint64_t p, bool require_congruence) {
  if (p < 3 || !IsPrime(p)) return false;
  const auto n = static_cast<std::uint64_t>(s.n);
  if ((2 * n) % p == 0 || (n - 1) % p == 0) return false;
  if (require_congruence && p % n != 2 % n) return false;
  return IsSeparableModP(s.g, p) && IsSmoothModP(s, p);
}

}  // namespace hypfib
