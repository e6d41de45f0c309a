#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypfib/errors.hpp"

namespace hypfib {

using cplx = std::complex<double>;

bool IsPrime(std::uint64_t n);
bool IsSquarefree(std::uint64_t n);
std::vector<std::uint64_t> PrimeFactors(std::uint64_t n);

// Non-negative residue of a modulo m (m >= 1).
inline std::int64_t Mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t Gcd(std::uint64_t a, std::uint64_t b);
// Inverse of a modulo m; throws InputError if gcd(a, m) != 1. Returns 0 for m == 1.
std::uint64_t InvMod(std::int64_t a, std::uint64_t m);

// Quadratic character (a/p) for an odd prime p.
int Legendre(std::int64_t a, std::uint64_t p);
// Jacobi symbol (a/r) for odd r >= 1. For squarefree r this is the product of
// Legendre symbols over the prime factors of r.
int Jacobi(std::int64_t a, std::uint64_t r);

// exp(2*pi*i*t/r).
cplx AddChar(std::uint64_t r, std::int64_t t);

// (inverse of r1 mod r0, inverse of r0 mod r1).
std::pair<std::uint64_t, std::uint64_t> CrtData(std::uint64_t r0, std::uint64_t r1);

// Least positive quadratic non-residue modulo the odd prime p.
std::uint64_t NonSquare(std::uint64_t p);

// Complex accumulator for sums of unit-bounded terms.
struct SumValue {
  double re = 0.0;
  double im = 0.0;
  std::uint64_t terms = 0;

  SumValue() = default;
  SumValue(cplx z, std::uint64_t n) : re(z.real()), im(z.imag()), terms(n) {}

  cplx value() const { return {re, im}; }
  double abs() const { return std::abs(value()); }
  // Tolerance used for every identity check: 1e-6 + 1e-12 * terms.
  double tolerance() const { return 1e-6 + 1e-12 * static_cast<double>(terms); }

  SumValue& operator+=(const SumValue& o) {
    re += o.re;
    im += o.im;
    terms += o.terms;
    return *this;
  }
};

SumValue operator*(const SumValue& a, const SumValue& b);
SumValue Conj(const SumValue& a);
bool ApproxEqual(const SumValue& a, const SumValue& b);
bool ApproxEqual(const SumValue& a, cplx b);

class PrimeCtx {
 public:
  explicit PrimeCtx(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t gamma() const { return gamma_; }
  int chi(std::uint64_t a) const { return legendre_[a % p_]; }
  std::span<const std::int8_t> legendre_table() const { return legendre_; }
  // e_p(t), table-driven.
  cplx e(std::int64_t t) const { return roots_[static_cast<std::size_t>(Mod(t, static_cast<std::int64_t>(p_)))]; }

 private:
  std::uint64_t p_;
  std::uint64_t gamma_ = 0;
  std::vector<std::int8_t> legendre_;
  std::vector<cplx> roots_;
};

// Element of F_q encoded as a + b*p, meaning a + b*theta with theta^2 = gamma.
using Fq = std::uint32_t;

class ExtCtx {
 public:
  ExtCtx(std::uint64_t p, int degree);

  const PrimeCtx& base() const { return base_; }
  int degree() const { return degree_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t gamma() const { return gamma_; }

  Fq make(std::uint32_t a, std::uint32_t b) const { return a + b * p_; }
  std::uint32_t re(Fq x) const { return x % p_; }
  std::uint32_t im(Fq x) const { return x / p_; }
  Fq from_int(std::int64_t v) const { return static_cast<Fq>(Mod(v, p_)); }
  Fq zero() const { return 0; }
  Fq one() const { return 1; }
  Fq theta() const;

  Fq add(Fq x, Fq y) const {
    if (degree_ == 1) return static_cast<Fq>((std::uint64_t{x} + y) % p_);
    return make((re(x) + re(y)) % p_, (im(x) + im(y)) % p_);
  }
  Fq neg(Fq x) const {
    if (degree_ == 1) return x == 0 ? 0 : p_ - x;
    return make(re(x) == 0 ? 0 : p_ - re(x), im(x) == 0 ? 0 : p_ - im(x));
  }
  Fq sub(Fq x, Fq y) const { return add(x, neg(y)); }
  Fq mul(Fq x, Fq y) const {
    if (degree_ == 1) return static_cast<Fq>(std::uint64_t{x} * y % p_);
    const std::uint64_t a = re(x), b = im(x), c = re(y), d = im(y);
    const std::uint64_t bd = b * d % p_;
    return make(static_cast<std::uint32_t>((a * c + gamma_ * bd) % p_),
                static_cast<std::uint32_t>((a * d + b * c) % p_));
  }
  Fq pow(Fq x, std::uint64_t e) const;
  Fq inv(Fq x) const;  // throws on zero

  // Trace to F_p: 2a for a + b*theta when degree 2, a itself when degree 1.
  std::uint32_t trace(Fq x) const {
    return degree_ == 1 ? x : static_cast<std::uint32_t>(2ULL * re(x) % p_);
  }
  // psi(x) = e_p(Tr x).
  cplx psi(Fq x) const { return base_.e(trace(x)); }

 private:
  PrimeCtx base_;
  int degree_;
  std::uint32_t p_;
  std::uint32_t q_;
  std::uint32_t gamma_;
};

// cnt[a] = #{u in F_q : u^k = a}.
std::vector<std::uint32_t> PowerCountTable(const ExtCtx& ctx, std::uint64_t k);

}  // namespace hypfib
