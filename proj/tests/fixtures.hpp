#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypfib/forms.hpp"
#include "hypfib/rng.hpp"
#include "hypfib/tau.hpp"

namespace fixture {

using hypfib::BigInt;
using hypfib::BinaryForm;
using hypfib::Surface;

// Random n = 3 surface with no goodness filter. Small coefficient range so that
// singular reductions show up often.
inline Surface RawSurface(std::uint64_t seed, int index) {
  hypfib::KeyedRng rng(seed, "raw/" + std::to_string(index));
  std::vector<BigInt> f(5), g(7);
  for (auto& c : f) c = rng.Below(2) == 0 ? BigInt(rng.Range(-1, 1)) : BigInt(0);
  for (auto& c : g) c = rng.Range(-1, 1);
  if (g.front() == 0) g.front() = 1;
  if (g.back() == 0) g.back() = -1;
  return {3, BinaryForm(4, f), BinaryForm(6, g)};
}

// f = 0 and g = S1^2 (S1 - S2)^2 (S1 + S2)(S1 - 2 S2): singular at every odd p > 3.
inline Surface SquaredFactorSurface() {
  return {3, BinaryForm::Zero(4), BinaryForm(6, {1, -3, 1, 3, -2, 0, 0})};
}

// One random twist (lambda, h, mu, i, j) over F_q with lambda != 0 and (h, mu) != 0.
inline hypfib::TauSpec RandomSpec(const Surface& s, std::uint64_t p, int r, std::uint64_t seed, int index) {
  hypfib::KeyedRng rng(seed, "spec/" + std::to_string(p) + "/" + std::to_string(r) + "/" + std::to_string(index));
  std::uint64_t q = p;
  if (r == 2) q *= p;
  auto el = [&] { return static_cast<hypfib::Fq>(rng.Below(q)); };
  const auto lambda = static_cast<hypfib::Fq>(1 + rng.Below(q - 1));
  hypfib::Fq h1, h2, m1, m2;
  do {
    h1 = el();
    h2 = el();
    m1 = el();
    m2 = el();
  } while (h1 == 0 && h2 == 0 && m1 == 0 && m2 == 0);
  const int i = static_cast<int>(rng.Below(2)), j = static_cast<int>(rng.Below(2));
  return hypfib::MakeTauSpec(s, p, r, lambda, h1, h2, m1, m2, i, j);
}

}  // namespace fixture
