#include "hypfib/ff.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

namespace hypfib {

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool IsSquarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t InvMod(std::int64_t a, std::uint64_t m) {
  Require(m >= 1, "modulus must be positive");
  if (m == 1) return 0;
  std::int64_t old_r = Mod(a, static_cast<std::int64_t>(m)), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) {
    throw InputError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return static_cast<std::uint64_t>(Mod(old_s, static_cast<std::int64_t>(m)));
}

int Legendre(std::int64_t a, std::uint64_t p) {
  Require(p >= 3 && p % 2 == 1 && IsPrime(p),
          "legendre: modulus " + std::to_string(p) + " is not an odd prime");
  const std::uint64_t r = static_cast<std::uint64_t>(Mod(a, static_cast<std::int64_t>(p)));
  if (r == 0) return 0;
  return PowMod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int Jacobi(std::int64_t a, std::uint64_t r) {
  Require(r >= 1 && r % 2 == 1, "jacobi: modulus " + std::to_string(r) + " must be odd and positive");
  std::uint64_t n = r;
  std::uint64_t m = static_cast<std::uint64_t>(Mod(a, static_cast<std::int64_t>(r)));
  int result = 1;
  while (m != 0) {
    while (m % 2 == 0) {
      m /= 2;
      const std::uint64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(m, n);
    if (m % 4 == 3 && n % 4 == 3) result = -result;
    m %= n;
  }
  return n == 1 ? result : 0;
}

cplx AddChar(std::uint64_t r, std::int64_t t) {
  Require(r >= 1, "add_char: modulus must be >= 1");
  const std::int64_t k = Mod(t, static_cast<std::int64_t>(r));
  if (k == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r);
  return std::polar(1.0, angle);
}

std::pair<std::uint64_t, std::uint64_t> CrtData(std::uint64_t r0, std::uint64_t r1) {
  Require(r0 >= 1 && r1 >= 1, "crt_data: moduli must be positive");
  Require(Gcd(r0, r1) == 1,
          "crt_data: " + std::to_string(r0) + " and " + std::to_string(r1) + " are not coprime");
  return {InvMod(static_cast<std::int64_t>(r1 % r0), r0),
          InvMod(static_cast<std::int64_t>(r0 % r1), r1)};
}

std::uint64_t NonSquare(std::uint64_t p) {
  Require(p != 2, "nonsquare: p = 2 has no quadratic non-residue");
  for (std::uint64_t a = 2; a < p; ++a) {
    if (Legendre(static_cast<std::int64_t>(a), p) == -1) return a;
  }
  throw InputError("nonsquare: no non-residue found modulo " + std::to_string(p));
}

SumValue operator*(const SumValue& a, const SumValue& b) {
  return SumValue(a.value() * b.value(), a.terms * b.terms);
}

SumValue Conj(const SumValue& a) { return SumValue(std::conj(a.value()), a.terms); }

bool ApproxEqual(const SumValue& a, const SumValue& b) {
  const double tol = 1e-6 + 1e-12 * static_cast<double>(std::max(a.terms, b.terms));
  return std::abs(a.value() - b.value()) <= tol;
}

bool ApproxEqual(const SumValue& a, cplx b) { return std::abs(a.value() - b) <= a.tolerance(); }

PrimeCtx::PrimeCtx(std::uint64_t p) : p_(p) {
  Require(p >= 3 && p % 2 == 1 && IsPrime(p), "prime context: " + std::to_string(p) + " is not an odd prime");
  Require(p < (1ULL << 26), "prime context: p too large for tabulated characters");
  legendre_.assign(p, -1);
  legendre_[0] = 0;
  for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) legendre_[x * x % p] = 1;
  for (std::uint64_t a = 1; a < p; ++a) {
    if (legendre_[a] == -1) {
      gamma_ = a;
      break;
    }
  }
  roots_.resize(p);
  for (std::uint64_t k = 0; k < p; ++k) roots_[k] = AddChar(p, static_cast<std::int64_t>(k));
}

ExtCtx::ExtCtx(std::uint64_t p, int degree) : base_(p), degree_(degree) {
  Require(degree == 1 || degree == 2,
          "ext_field: degree " + std::to_string(degree) + " unsupported (only 1 or 2)");
  Require(degree == 1 || p < (1ULL << 16), "ext_field: p too large for a quadratic extension");
  p_ = static_cast<std::uint32_t>(p);
  q_ = degree == 1 ? p_ : p_ * p_;
  gamma_ = static_cast<std::uint32_t>(base_.gamma());
}

Fq ExtCtx::theta() const {
  Require(degree_ == 2, "theta only exists in the quadratic extension");
  return make(0, 1);
}

Fq ExtCtx::pow(Fq x, std::uint64_t e) const {
  Fq result = one();
  Fq b = x;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

Fq ExtCtx::inv(Fq x) const {
  Require(x != 0, "inverse of zero");
  return pow(x, std::uint64_t{q_} - 2);
}

std::vector<std::uint32_t> PowerCountTable(const ExtCtx& ctx, std::uint64_t k) {
  Require(k >= 1, "power_count_table: exponent must be >= 1");
  std::vector<std::uint32_t> cnt(ctx.q(), 0);
  for (Fq u = 0; u < ctx.q(); ++u) ++cnt[ctx.pow(u, k)];
  return cnt;
}

}  // namespace hypfib
