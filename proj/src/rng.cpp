#include "hypfib/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hypfib {

namespace {

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::atomic<unsigned> g_threads{1};

}  // namespace

KeyedRng::KeyedRng(std::uint64_t seed, std::string_view name) : eng_(SplitMix(seed ^ SplitMix(Fnv1a(name)))) {}

std::uint64_t KeyedRng::Below(std::uint64_t n) {
  Require(n >= 1, "rng: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

std::int64_t KeyedRng::Range(std::int64_t lo, std::int64_t hi) {
  Require(lo <= hi, "rng: empty range");
  return lo + static_cast<std::int64_t>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

void SetThreads(unsigned n) { g_threads = std::max(1u, n); }
unsigned Threads() { return g_threads; }

void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned w = static_cast<unsigned>(std::min<std::size_t>(Threads(), n));
  if (w <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < n;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

Surface SeededSurface(std::uint64_t seed, int index) {
  KeyedRng rng(seed, "surface/" + std::to_string(index));
  for (;;) {
    std::vector<BigInt> f(5), g(7);
    // Sparse f keeps the values small; g gets both extreme monomials so it has full degree.
    for (auto& c : f) c = rng.Below(3) == 0 ? BigInt(rng.Range(-2, 2)) : BigInt(0);
    for (auto& c : g) c = rng.Range(-2, 2);
    if (g.front() == 0) g.front() = 1;
    if (g.back() == 0) g.back() = 1;
    Surface s{3, BinaryForm(4, f), BinaryForm(6, g)};
    if (std::all_of(std::begin(kSeedPrimes), std::end(kSeedPrimes),
                    [&](std::uint64_t p) { return GoodPrime(s, p, true); })) {
      return s;
    }
  }
}

}  // namespace hypfib
