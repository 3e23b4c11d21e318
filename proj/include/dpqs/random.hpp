#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

namespace dpqs {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Independent generator for (seed, stream, index). Each Monte Carlo sample
// owns its stream, so results do not depend on how samples are scheduled.
Rng derive_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Stream tags keeping experiment kinds decorrelated under one seed.
namespace streams {
inline constexpr std::uint64_t count_sort = 1;
inline constexpr std::uint64_t classic_sort = 2;
inline constexpr std::uint64_t rde = 3;
inline constexpr std::uint64_t qfirst_diagnostic = 4;
inline constexpr std::uint64_t tests = 5;
}  // namespace streams

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound], by rejection (exactly uniform).
std::uint64_t uniform_below_inclusive(Rng& rng, std::uint64_t bound);

// In-place Fisher-Yates shuffle.
template <typename T>
void fisher_yates(std::span<T> a, Rng& rng) {
  for (std::size_t i = a.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below_inclusive(rng, i - 1));
    std::swap(a[i - 1], a[j]);
  }
}

// Uniformly random permutation of 1..n.
template <typename T = std::int64_t>
std::vector<T> random_permutation(std::size_t n, Rng& rng) {
  std::vector<T> v(n);
  std::iota(v.begin(), v.end(), T{1});
  fisher_yates(std::span<T>(v), rng);
  return v;
}

}  // namespace dpqs
