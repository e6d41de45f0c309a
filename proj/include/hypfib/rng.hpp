#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "hypfib/forms.hpp"

namespace hypfib {

// Deterministic stream keyed by (seed, name); adding a stream never shifts another.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::string_view name);

  std::uint64_t Next() { return eng_(); }
  // Uniform on [0, n), n >= 1, by rejection (portable across standard libraries).
  std::uint64_t Below(std::uint64_t n);
  // Uniform on [lo, hi].
  std::int64_t Range(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

// Worker count used by ParallelFor; 1 runs inline.
void SetThreads(unsigned n);
unsigned Threads();
// Runs body(k) for k in [0, n). Callers write into per-index slots and merge in
// index order, so results do not depend on the worker count.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

// The index-th seeded n = 3 surface: small random f, g such that every prime in
// kSeedPrimes is good (with p = 2 mod 3). index is mixed into the stream name.
Surface SeededSurface(std::uint64_t seed, int index);
inline constexpr std::uint64_t kSeedPrimes[] = {5, 11, 17, 23, 41, 59};

}  // namespace hypfib
