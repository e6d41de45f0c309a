#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypfib/forms.hpp"

namespace hypfib {

using Int128 = __int128;

// omega(m) = #{(x,u1,u2): m = x^n + x f(u) + g(u), |x| <= B^2, |u1|,|u2| <= B},
// stored as sorted (m, omega(m)) pairs. Values are kept in 128-bit integers when
// the crude size bound allows, otherwise as big integers.
class OmegaTable {
 public:
  static OmegaTable Build(const Surface& s, std::uint64_t B, bool force = false);

  std::uint64_t B() const { return B_; }
  bool wide() const { return wide_; }
  std::size_t size() const { return wide_ ? big_.size() : small_.size(); }
  std::uint64_t total() const;

  BigInt value(std::size_t i) const;
  std::uint64_t count(std::size_t i) const { return wide_ ? big_[i].second : small_[i].second; }
  // Non-negative residue of the i-th value modulo r.
  std::uint64_t residue(std::size_t i, std::uint64_t r) const;
  std::uint64_t at(const BigInt& m) const;

  // sum over 0 <= m <= bound of omega(m^2); a negative bound means no limit.
  std::uint64_t SquareMass(const BigInt& bound) const;

 private:
  std::uint64_t B_ = 0;
  bool wide_ = false;
  std::vector<std::pair<Int128, std::uint64_t>> small_;
  std::vector<std::pair<BigInt, std::uint64_t>> big_;
};

// Crude bound on |x^n + x f(u) + g(u)| over the box.
BigInt ValueBound(const Surface& s, std::uint64_t B);

// N(S;B): integer points with |x| <= B^2, |y| <= B^n, |u1|,|u2| <= B.
std::uint64_t CountN(const Surface& s, std::uint64_t B, bool force = false);

// If v >= 0 is a perfect square, returns true and sets *root.
bool IsPerfectSquare(Int128 v, Int128* root);
bool IsPerfectSquare(const BigInt& v, BigInt* root);

}  // namespace hypfib
