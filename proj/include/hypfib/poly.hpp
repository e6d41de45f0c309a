#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hypfib {

// Dense polynomial over F_p, coefficients in [0,p), lowest degree first.
// The zero polynomial is the empty vector. p must be below 2^32.
using PolyP = std::vector<std::uint64_t>;

void Trim(PolyP& a);
int Degree(const PolyP& a);

PolyP PolyAdd(const PolyP& a, const PolyP& b, std::uint64_t p);
PolyP PolySub(const PolyP& a, const PolyP& b, std::uint64_t p);
PolyP PolyMul(const PolyP& a, const PolyP& b, std::uint64_t p);
PolyP PolyScale(const PolyP& a, std::uint64_t k, std::uint64_t p);
PolyP PolyPow(const PolyP& a, std::uint64_t e, std::uint64_t p);
PolyP PolyDerivative(const PolyP& a, std::uint64_t p);
// Throws InputError when b is zero.
std::pair<PolyP, PolyP> PolyDivMod(const PolyP& a, const PolyP& b, std::uint64_t p);
// Monic gcd; gcd(0, 0) = 0.
PolyP PolyGcd(PolyP a, PolyP b, std::uint64_t p);
std::uint64_t PolyEval(const PolyP& a, std::uint64_t x, std::uint64_t p);

}  // namespace hypfib
