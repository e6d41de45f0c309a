#include "hypfib/poly.hpp"

#include <algorithm>

#include "hypfib/errors.hpp"
#include "hypfib/ff.hpp"

namespace hypfib {

void Trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int Degree(const PolyP& a) {
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

PolyP PolyAdd(const PolyP& a, const PolyP& b, std::uint64_t p) {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  Trim(out);
  return out;
}

PolyP PolySub(const PolyP& a, const PolyP& b, std::uint64_t p) {
  PolyP out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  Trim(out);
  return out;
}

PolyP PolyMul(const PolyP& a, const PolyP& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  Trim(out);
  return out;
}

PolyP PolyScale(const PolyP& a, std::uint64_t k, std::uint64_t p) {
  PolyP out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * (k % p) % p;
  Trim(out);
  return out;
}

PolyP PolyPow(const PolyP& a, std::uint64_t e, std::uint64_t p) {
  PolyP result{1 % p};
  PolyP b = a;
  while (e > 0) {
    if (e & 1) result = PolyMul(result, b, p);
    e >>= 1;
    if (e > 0) b = PolyMul(b, b, p);
  }
  Trim(result);
  return result;
}

PolyP PolyDerivative(const PolyP& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  PolyP out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % p) % p;
  Trim(out);
  return out;
}

std::pair<PolyP, PolyP> PolyDivMod(const PolyP& a, const PolyP& b, std::uint64_t p) {
  const int db = Degree(b);
  Require(db >= 0, "polynomial division by zero");
  PolyP rem = a;
  Trim(rem);
  if (Degree(rem) < db) return {{}, rem};
  const std::uint64_t lead_inv = InvMod(static_cast<std::int64_t>(b[db]), p);
  PolyP quot(rem.size() - db, 0);
  for (int k = Degree(rem); k >= db; --k) {
    const std::uint64_t coef = rem[k] * lead_inv % p;
    if (coef == 0) continue;
    quot[k - db] = coef;
    for (int j = 0; j <= db; ++j) {
      rem[k - db + j] = (rem[k - db + j] + p - coef * b[j] % p) % p;
    }
  }
  Trim(rem);
  Trim(quot);
  return {quot, rem};
}

PolyP PolyGcd(PolyP a, PolyP b, std::uint64_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    PolyP r = PolyDivMod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return PolyScale(a, InvMod(static_cast<std::int64_t>(a.back()), p), p);
}

std::uint64_t PolyEval(const PolyP& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i > 0; --i) acc = (acc * x + a[i - 1]) % p;
  return acc;
}

}  // namespace hypfib
