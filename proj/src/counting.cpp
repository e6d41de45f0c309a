#include "hypfib/counting.hpp"

#include <algorithm>
#include <cmath>

#include "hypfib/errors.hpp"

namespace hypfib {

namespace {

const BigInt kNarrowLimit = BigInt(1) << 125;

Int128 ToInt128(const BigInt& v) {
  const BigInt a = abs(v);
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<unsigned __int128>((a & mask).convert_to<std::uint64_t>());
  const auto hi = static_cast<unsigned __int128>((a >> 64).convert_to<std::uint64_t>());
  const auto mag = static_cast<Int128>((hi << 64) | lo);
  return v < 0 ? -mag : mag;
}

BigInt FromInt128(Int128 v) {
  const bool neg = v < 0;
  auto mag = static_cast<unsigned __int128>(neg ? -v : v);
  BigInt out = BigInt(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-out) : out;
}

// Calls visit(m) for every cell of the box, with m as Int128 or BigInt.
template <typename NarrowFn, typename WideFn>
void ForEachCell(const Surface& s, std::uint64_t B, bool narrow, NarrowFn&& on_narrow, WideFn&& on_wide) {
  const auto b = static_cast<std::int64_t>(B);
  const std::int64_t x_max = b * b;
  std::vector<Int128> xpow;
  if (narrow) {
    xpow.reserve(2 * x_max + 1);
    for (std::int64_t x = -x_max; x <= x_max; ++x) {
      Int128 v = 1;
      for (int k = 0; k < s.n; ++k) v *= x;
      xpow.push_back(v);
    }
  }
  for (std::int64_t u1 = -b; u1 <= b; ++u1) {
    for (std::int64_t u2 = -b; u2 <= b; ++u2) {
      const BigInt F = s.f.Eval(u1, u2);
      const BigInt G = s.g.Eval(u1, u2);
      if (narrow) {
        const Int128 Fi = ToInt128(F), Gi = ToInt128(G);
        for (std::int64_t x = -x_max; x <= x_max; ++x) on_narrow(xpow[x + x_max] + Fi * x + Gi);
      } else {
        for (std::int64_t x = -x_max; x <= x_max; ++x) {
          const BigInt X = x;
          on_wide(BigInt(pow(X, s.n) + X * F + G));
        }
      }
    }
  }
}

double CellCount(std::uint64_t B) {
  const double b = static_cast<double>(B);
  return (2 * b * b + 1) * (2 * b + 1) * (2 * b + 1);
}

}  // namespace

BigInt ValueBound(const Surface& s, std::uint64_t B) {
  const BigInt b = B;
  const BigInt b2n = pow(b, 2 * s.n);
  return b2n + (2 * s.n - 1) * s.f.Height() * b2n + (2 * s.n + 1) * s.g.Height() * b2n;
}

bool IsPerfectSquare(Int128 v, Int128* root) {
  if (v < 0) return false;
  auto r = static_cast<Int128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

bool IsPerfectSquare(const BigInt& v, BigInt* root) {
  if (v < 0) return false;
  const BigInt r = sqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

OmegaTable OmegaTable::Build(const Surface& s, std::uint64_t B, bool force) {
  ValidateSurface(s);
  CheckBudget(CellCount(B), force, "omega_table");
  OmegaTable t;
  t.B_ = B;
  t.wide_ = ValueBound(s, B) >= kNarrowLimit;
  if (!t.wide_) {
    std::vector<Int128> vals;
    vals.reserve(static_cast<std::size_t>(CellCount(B)));
    ForEachCell(s, B, true, [&](Int128 m) { vals.push_back(m); }, [](const BigInt&) {});
    std::sort(vals.begin(), vals.end());
    for (Int128 m : vals) {
      if (!t.small_.empty() && t.small_.back().first == m) {
        ++t.small_.back().second;
      } else {
        t.small_.emplace_back(m, 1);
      }
    }
  } else {
    std::vector<BigInt> vals;
    ForEachCell(s, B, false, [](Int128) {}, [&](const BigInt& m) { vals.push_back(m); });
    std::sort(vals.begin(), vals.end());
    for (auto& m : vals) {
      if (!t.big_.empty() && t.big_.back().first == m) {
        ++t.big_.back().second;
      } else {
        t.big_.emplace_back(std::move(m), 1);
      }
    }
  }
  return t;
}

std::uint64_t OmegaTable::total() const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < size(); ++i) sum += count(i);
  return sum;
}

BigInt OmegaTable::value(std::size_t i) const { return wide_ ? big_[i].first : FromInt128(small_[i].first); }

std::uint64_t OmegaTable::residue(std::size_t i, std::uint64_t r) const {
  if (wide_) return ReduceMod(big_[i].first, r);
  const Int128 rem = small_[i].first % static_cast<Int128>(r);
  return static_cast<std::uint64_t>(rem < 0 ? rem + static_cast<Int128>(r) : rem);
}

std::uint64_t OmegaTable::at(const BigInt& m) const {
  if (wide_) {
    auto it = std::lower_bound(big_.begin(), big_.end(), m,
                               [](const auto& e, const BigInt& v) { return e.first < v; });
    return it != big_.end() && it->first == m ? it->second : 0;
  }
  if (abs(m) >= kNarrowLimit) return 0;
  const Int128 key = ToInt128(m);
  auto it = std::lower_bound(small_.begin(), small_.end(), key,
                             [](const auto& e, Int128 v) { return e.first < v; });
  return it != small_.end() && it->first == key ? it->second : 0;
}

std::uint64_t OmegaTable::SquareMass(const BigInt& bound) const {
  std::uint64_t sum = 0;
  if (wide_) {
    BigInt root;
    for (const auto& [m, c] : big_) {
      if (IsPerfectSquare(m, &root) && (bound < 0 || root <= bound)) sum += c;
    }
    return sum;
  }
  const bool unlimited = bound < 0;
  const Int128 lim = unlimited ? 0 : (bound >= kNarrowLimit ? ToInt128(kNarrowLimit) : ToInt128(bound));
  Int128 root = 0;
  for (const auto& [m, c] : small_) {
    if (IsPerfectSquare(m, &root) && (unlimited || root <= lim)) sum += c;
  }
  return sum;
}

std::uint64_t CountN(const Surface& s, std::uint64_t B, bool force) {
  ValidateSurface(s);
  CheckBudget(CellCount(B), force, "count_N");
  const BigInt ybound = pow(BigInt(B), s.n);
  std::uint64_t total = 0;
  if (ValueBound(s, B) < kNarrowLimit) {
    const Int128 ylim = ToInt128(ybound);
    Int128 root = 0;
    ForEachCell(
        s, B, true,
        [&](Int128 m) {
          if (IsPerfectSquare(m, &root) && root <= ylim) total += root == 0 ? 1 : 2;
        },
        [](const BigInt&) {});
  } else {
    BigInt root;
    ForEachCell(
        s, B, false, [](Int128) {},
        [&](const BigInt& m) {
          if (IsPerfectSquare(m, &root) && root <= ybound) total += root == 0 ? 1 : 2;
        });
  }
  return total;
}

}  // namespace hypfib
