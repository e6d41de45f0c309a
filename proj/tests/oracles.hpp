#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except for the Surface container and BigInt.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "hypfib/forms.hpp"

namespace oracle {

using hypfib::BigInt;
using hypfib::Surface;
using cplx = std::complex<double>;

inline std::int64_t Md(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t PowM(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = Md(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Euler's criterion.
inline int Legendre(std::int64_t a, std::int64_t p) {
  a = Md(a, p);
  if (a == 0) return 0;
  return PowM(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline std::vector<std::int64_t> Factor(std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= r; ++d) {
    while (r % d == 0) {
      out.push_back(d);
      r /= d;
    }
  }
  if (r > 1) out.push_back(r);
  return out;
}

inline int Jacobi(std::int64_t a, std::int64_t r) {
  int s = 1;
  for (std::int64_t p : Factor(r)) s *= Legendre(a, p);
  return s;
}

inline BigInt EvalForm(const hypfib::BinaryForm& F, const BigInt& s1, const BigInt& s2) {
  BigInt acc = 0;
  for (int i = 0; i <= F.degree; ++i) {
    BigInt term = F.coeffs[i];
    for (int k = 0; k < F.degree - i; ++k) term *= s1;
    for (int k = 0; k < i; ++k) term *= s2;
    acc += term;
  }
  return acc;
}

inline std::int64_t EvalMod(const hypfib::BinaryForm& F, std::int64_t s1, std::int64_t s2, std::int64_t m) {
  BigInt v = EvalForm(F, s1, s2) % m;
  if (v < 0) v += m;
  return static_cast<std::int64_t>(v);
}

inline BigInt SurfaceValue(const Surface& s, std::int64_t x, std::int64_t u1, std::int64_t u2) {
  BigInt X = x, xn = 1;
  for (int k = 0; k < s.n; ++k) xn *= X;
  return xn + X * EvalForm(s.f, u1, u2) + EvalForm(s.g, u1, u2);
}

// Literal count of (x, y, u) with y^2 = value, |x| <= B^2, |y| <= B^n, |u| <= B.
inline std::uint64_t CountN(const Surface& s, std::int64_t B) {
  std::int64_t Bn = 1;
  for (int k = 0; k < s.n; ++k) Bn *= B;
  std::uint64_t c = 0;
  for (std::int64_t x = -B * B; x <= B * B; ++x) {
    for (std::int64_t u1 = -B; u1 <= B; ++u1) {
      for (std::int64_t u2 = -B; u2 <= B; ++u2) {
        const BigInt v = SurfaceValue(s, x, u1, u2);
        for (std::int64_t y = -Bn; y <= Bn; ++y) c += (BigInt(y) * y == v);
      }
    }
  }
  return c;
}

inline std::map<BigInt, std::uint64_t> Omega(const Surface& s, std::int64_t B) {
  std::map<BigInt, std::uint64_t> m;
  for (std::int64_t x = -B * B; x <= B * B; ++x) {
    for (std::int64_t u1 = -B; u1 <= B; ++u1) {
      for (std::int64_t u2 = -B; u2 <= B; ++u2) ++m[SurfaceValue(s, x, u1, u2)];
    }
  }
  return m;
}

inline cplx E(std::int64_t t, std::int64_t r) {
  const double a = 2 * std::numbers::pi * static_cast<double>(Md(t, r)) / static_cast<double>(r);
  return {std::cos(a), std::sin(a)};
}

// S(r, c, u) straight from the definition.
inline cplx S(std::int64_t r, std::int64_t c, std::int64_t u1, std::int64_t u2, const Surface& s) {
  const std::int64_t F = EvalMod(s.f, u1, u2, r), G = EvalMod(s.g, u1, u2, r);
  cplx acc = 0;
  for (std::int64_t a = 0; a < r; ++a) {
    const std::int64_t v = Md(PowM(a, s.n, r) + a * F + G, r);
    acc += static_cast<double>(Jacobi(v, r)) * E(c * a, r);
  }
  return acc;
}

// W_p as the quadruple sum over (alpha, beta, s) with the shift on alpha.
inline cplx Wp(std::int64_t p, std::int64_t lam, std::int64_t h1, std::int64_t h2, std::int64_t m1,
               std::int64_t m2, const Surface& s) {
  cplx acc = 0;
  for (std::int64_t s1 = 0; s1 < p; ++s1) {
    for (std::int64_t s2 = 0; s2 < p; ++s2) {
      const std::int64_t f0 = EvalMod(s.f, s1, s2, p), g0 = EvalMod(s.g, s1, s2, p);
      const std::int64_t fh = EvalMod(s.f, s1 + h1, s2 + h2, p), gh = EvalMod(s.g, s1 + h1, s2 + h2, p);
      for (std::int64_t a = 0; a < p; ++a) {
        const int ca = Legendre(PowM(a, s.n, p) + a * fh + gh, p);
        if (ca == 0) continue;
        for (std::int64_t b = 0; b < p; ++b) {
          const int cb = Legendre(PowM(b, s.n, p) + b * f0 + g0, p);
          if (cb) acc += static_cast<double>(ca * cb) * E(lam * (a - b) + m1 * s1 + m2 * s2, p);
        }
      }
    }
  }
  return acc;
}

// Sum over the points of G1 = G2 = 0 in F_p^6 of e_p(lam (x - y) + mu . s), where
// G1 = -U^2 + X^n + X f(s) + g(s) and G2 carries the shift on Y.
inline cplx WpPoints(std::int64_t p, std::int64_t lam, std::int64_t h1, std::int64_t h2, std::int64_t m1,
                     std::int64_t m2, const Surface& s) {
  cplx acc = 0;
  for (std::int64_t s1 = 0; s1 < p; ++s1) {
    for (std::int64_t s2 = 0; s2 < p; ++s2) {
      const std::int64_t f0 = EvalMod(s.f, s1, s2, p), g0 = EvalMod(s.g, s1, s2, p);
      const std::int64_t fh = EvalMod(s.f, s1 + h1, s2 + h2, p), gh = EvalMod(s.g, s1 + h1, s2 + h2, p);
      for (std::int64_t x = 0; x < p; ++x) {
        for (std::int64_t u = 0; u < p; ++u) {
          if (Md(-u * u + PowM(x, s.n, p) + x * f0 + g0, p) != 0) continue;
          for (std::int64_t y = 0; y < p; ++y) {
            for (std::int64_t v = 0; v < p; ++v) {
              if (Md(-v * v + PowM(y, s.n, p) + y * fh + gh, p) != 0) continue;
              acc += E(lam * (x - y) + m1 * s1 + m2 * s2, p);
            }
          }
        }
      }
    }
  }
  return acc;
}

inline std::int64_t NonResidue(std::int64_t p) {
  for (std::int64_t a = 2;; ++a) {
    if (Legendre(a, p) == -1) return a;
  }
}

// Six-variable N(tau) over F_p by enumerating all of F_p^6:
// G1 = -u^{2n} + (g^i x^2)^n + g^i x^2 f(s) + g(s), G2 likewise with g^j, y and s + h,
// tau = lam (g^i x^2 - g^j y^2) + mu . s.
inline std::vector<std::uint64_t> N6(std::int64_t p, const Surface& s, std::int64_t lam, std::int64_t h1,
                                     std::int64_t h2, std::int64_t m1, std::int64_t m2, int i, int j) {
  const std::int64_t gam = NonResidue(p);
  const std::int64_t gi = i ? gam : 1, gj = j ? gam : 1;
  const int n = s.n;
  std::vector<std::uint64_t> out(p, 0);
  for (std::int64_t s1 = 0; s1 < p; ++s1) {
    for (std::int64_t s2 = 0; s2 < p; ++s2) {
      const std::int64_t f0 = EvalMod(s.f, s1, s2, p), g0 = EvalMod(s.g, s1, s2, p);
      const std::int64_t fh = EvalMod(s.f, s1 + h1, s2 + h2, p), gh = EvalMod(s.g, s1 + h1, s2 + h2, p);
      for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t X = gi * x % p * x % p;
        for (std::int64_t u = 0; u < p; ++u) {
          if (Md(-PowM(u, 2 * n, p) + PowM(X, n, p) + X * f0 + g0, p) != 0) continue;
          for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t Y = gj * y % p * y % p;
            for (std::int64_t v = 0; v < p; ++v) {
              if (Md(-PowM(v, 2 * n, p) + PowM(Y, n, p) + Y * fh + gh, p) != 0) continue;
              ++out[Md(lam * (X - Y) + m1 * s1 + m2 * s2, p)];
            }
          }
        }
      }
    }
  }
  return out;
}

// Arithmetic in F_p or F_{p^2} = F_p[w]/(w^2 - gamma), independent of the library.
struct Fld {
  std::int64_t p, gamma;
  int deg;
  struct El {
    std::int64_t a = 0, b = 0;
    bool operator==(const El&) const = default;
  };
  Fld(std::int64_t p_, int deg_) : p(p_), gamma(NonResidue(p_)), deg(deg_) {}
  std::int64_t size() const { return deg == 1 ? p : p * p; }
  El at(std::int64_t k) const { return deg == 1 ? El{k, 0} : El{k % p, k / p}; }
  El c(std::int64_t v) const { return {Md(v, p), 0}; }
  El add(El x, El y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  El mul(El x, El y) const { return {Md(x.a * y.a + gamma * (x.b * y.b % p), p), Md(x.a * y.b + x.b * y.a, p)}; }
  El pow(El x, int e) const {
    El r{1, 0};
    for (int k = 0; k < e; ++k) r = mul(r, x);
    return r;
  }
  El form(const hypfib::BinaryForm& F, El s1, El s2) const {
    El acc{0, 0};
    for (int i = 0; i <= F.degree; ++i) {
      acc = add(acc, mul(c(static_cast<std::int64_t>(Md(static_cast<std::int64_t>(F.coeffs[i] % p), p))),
                         mul(pow(s1, F.degree - i), pow(s2, i))));
    }
    return acc;
  }
};

// Search for a nonzero singular point of -Y^2 + X^n + X f + g over F_q. The Y-partial is
// -2Y, so only Y = 0 needs to be searched.
inline bool HasSingularPoint(const Surface& s, std::int64_t p, int deg) {
  const Fld F(p, deg);
  const auto f1 = hypfib::DerivativeForm(s.f, hypfib::Axis::kS1), f2 = hypfib::DerivativeForm(s.f, hypfib::Axis::kS2);
  const auto g1 = hypfib::DerivativeForm(s.g, hypfib::Axis::kS1), g2 = hypfib::DerivativeForm(s.g, hypfib::Axis::kS2);
  const Fld::El zero{0, 0};
  const std::int64_t q = F.size();
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      const Fld::El u1 = F.at(a), u2 = F.at(b);
      const Fld::El fv = F.form(s.f, u1, u2), gv = F.form(s.g, u1, u2);
      const Fld::El f1v = F.form(f1, u1, u2), f2v = F.form(f2, u1, u2);
      const Fld::El g1v = F.form(g1, u1, u2), g2v = F.form(g2, u1, u2);
      for (std::int64_t k = 0; k < q; ++k) {
        if (a == 0 && b == 0 && k == 0) continue;
        const Fld::El x = F.at(k);
        const Fld::El val = F.add(F.add(F.pow(x, s.n), F.mul(x, fv)), gv);
        if (!(val == zero)) continue;
        const Fld::El dx = F.add(F.mul(F.c(s.n), F.pow(x, s.n - 1)), fv);
        if (!(dx == zero)) continue;
        if (F.add(F.mul(x, f1v), g1v) == zero && F.add(F.mul(x, f2v), g2v) == zero) return true;
      }
    }
  }
  return false;
}

// Sparse polynomial in (U, V, X, S1, S2, T) over F_p.
struct MPoly {
  using Mono = std::array<std::uint8_t, 6>;
  std::int64_t p;
  std::map<Mono, std::int64_t> t;

  explicit MPoly(std::int64_t p_) : p(p_) {}
  static MPoly Const(std::int64_t p, std::int64_t c) {
    MPoly r(p);
    if (Md(c, p)) r.t[{}] = Md(c, p);
    return r;
  }
  static MPoly Var(std::int64_t p, int k) {
    MPoly r(p);
    Mono m{};
    m[k] = 1;
    r.t[m] = 1;
    return r;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.t) {
      auto& e = r.t[m];
      e = Md(e + c, p);
      if (e == 0) r.t.erase(m);
    }
    return r;
  }
  MPoly operator*(const MPoly& o) const {
    MPoly r(p);
    for (const auto& [m1, c1] : t) {
      for (const auto& [m2, c2] : o.t) {
        Mono m;
        for (int k = 0; k < 6; ++k) m[k] = static_cast<std::uint8_t>(m1[k] + m2[k]);
        auto& e = r.t[m];
        e = Md(e + c1 * c2, p);
        if (e == 0) r.t.erase(m);
      }
    }
    return r;
  }
  MPoly scale(std::int64_t c) const { return Const(p, c) * *this; }
  MPoly pow(int e) const {
    MPoly r = Const(p, 1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }
  MPoly diff(int k) const {
    MPoly r(p);
    for (const auto& [m, c] : t) {
      if (m[k] == 0) continue;
      Mono d = m;
      --d[k];
      const std::int64_t v = Md(c * m[k], p);
      if (v) r.t[d] = Md(r.t[d] + v, p);
    }
    return r;
  }
  std::int64_t eval(const std::array<std::int64_t, 6>& pt) const {
    std::int64_t acc = 0;
    for (const auto& [m, c] : t) {
      std::int64_t v = c;
      for (int k = 0; k < 6; ++k) v = v * PowM(pt[k], m[k], p) % p;
      acc = (acc + v) % p;
    }
    return acc;
  }
};

// F(A, B) for linear polynomials A, B.
inline MPoly Compose(const hypfib::BinaryForm& F, const MPoly& A, const MPoly& B, std::int64_t p) {
  MPoly r(p);
  for (int i = 0; i <= F.degree; ++i) {
    const std::int64_t c = Md(static_cast<std::int64_t>(F.coeffs[i] % p), p);
    if (c) r = r + (A.pow(F.degree - i) * B.pow(i)).scale(c);
  }
  return r;
}

// Singular points of {G = H_tau = 0} in P^5(F_p), from expanded polynomials and
// their formal derivatives. Coordinates (u, v, x, s1, s2, t), last nonzero = 1.
inline std::vector<std::array<std::int64_t, 6>> SingPoints(std::int64_t p, const Surface& s, std::int64_t lam,
                                                           std::int64_t h1, std::int64_t h2, std::int64_t m1,
                                                           std::int64_t m2, int i, std::int64_t tau) {
  const int n = s.n;
  const std::int64_t gi = i ? NonResidue(p) : 1;
  const std::int64_t lb = PowM(lam, p - 2, p);
  const MPoly U = MPoly::Var(p, 0), V = MPoly::Var(p, 1), X = MPoly::Var(p, 2), S1 = MPoly::Var(p, 3),
              S2 = MPoly::Var(p, 4), T = MPoly::Var(p, 5);
  const MPoly X2 = (X * X).scale(gi);
  const MPoly G = U.pow(2 * n).scale(-1) + X2.pow(n) + X2 * Compose(s.f, S1, S2, p) + Compose(s.g, S1, S2, p);
  const MPoly W = X2 + (T * (S1.scale(m1) + S2.scale(m2))).scale(lb) + (T * T).scale(Md(-lb * tau, p));
  const MPoly A = S1 + T.scale(h1), Bq = S2 + T.scale(h2);
  const MPoly H = V.pow(2 * n).scale(-1) + W.pow(n) + W * Compose(s.f, A, Bq, p) + Compose(s.g, A, Bq, p);
  std::array<MPoly, 6> dG{G, G, G, G, G, G}, dH{H, H, H, H, H, H};
  for (int k = 0; k < 6; ++k) {
    dG[k] = G.diff(k);
    dH[k] = H.diff(k);
  }
  std::vector<std::array<std::int64_t, 6>> out;
  for (int lead = 5; lead >= 0; --lead) {
    std::int64_t total = 1;
    for (int k = 0; k < lead; ++k) total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
      std::array<std::int64_t, 6> pt{};
      pt[lead] = 1;
      std::int64_t rest = code;
      for (int k = lead - 1; k >= 0; --k) {
        pt[k] = rest % p;
        rest /= p;
      }
      if (G.eval(pt) != 0 || H.eval(pt) != 0) continue;
      std::array<std::int64_t, 6> a, b;
      for (int k = 0; k < 6; ++k) {
        a[k] = dG[k].eval(pt);
        b[k] = dH[k].eval(pt);
      }
      bool rank1 = true;
      for (int k = 0; k < 6 && rank1; ++k) {
        for (int l = k + 1; l < 6; ++l) {
          if (Md(a[k] * b[l] - a[l] * b[k], p) != 0) {
            rank1 = false;
            break;
          }
        }
      }
      if (rank1) out.push_back(pt);
    }
  }
  return out;
}

}  // namespace oracle
