#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dpqs/cost_profile.hpp"

namespace dpqs {

// Reference key type for all experiments.
using Key = std::int64_t;

enum class Branch : std::uint8_t { p_first, q_first };
enum class KeyClass : std::uint8_t { small, medium, large };

struct ClassificationStep {
  Branch branch;
  KeyClass cls;
};

namespace detail {

template <typename T>
inline bool counted_less(const T& a, const T& b, CostProfile& profile) {
  ++profile.comparisons;
  return a < b;
}

template <typename T>
inline void counted_swap(std::span<T> a, std::ptrdiff_t x, std::ptrdiff_t y, CostProfile& profile) {
  using std::swap;
  swap(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]);
  ++profile.plain_swaps;
}

inline void check_range(std::size_t size, std::size_t left, std::size_t right) {
  if (left >= right) throw std::invalid_argument("partition: requires left < right");
  if (right >= size) throw std::out_of_range("partition: index out of bounds");
}

struct NoObserver {
  void operator()(const PartitionOutcome&) const {}
};

}  // namespace detail

// tmp <- A[k]; A[k] <- A[j]; A[j] <- A[i]; A[i] <- tmp. Counted as one
// rotate3 (three half-swaps).
template <typename T>
void rotate3(std::span<T> a, std::size_t k, std::size_t j, std::size_t i, CostProfile& profile) {
  if (k >= a.size() || j >= a.size() || i >= a.size()) throw std::out_of_range("rotate3: index out of bounds");
  T tmp = std::move(a[k]);
  a[k] = std::move(a[j]);
  a[j] = std::move(a[i]);
  a[i] = std::move(tmp);
  ++profile.rotate3_ops;
}

// One partitioning stage of dual-pivot quicksort "Count" on a[left..right].
//
// The pivots are the end elements; they are read, not swapped. Each
// remaining element is classified against p first while at least as many
// small as large elements have been seen (d >= 0), and against q first
// (scanning from the right) otherwise. Keys must be pairwise distinct for
// the cost semantics; duplicates still partition correctly.
//
// If `trace` is non-null, one entry per classified element is appended.
template <std::totally_ordered T>
PartitionOutcome partition_count(std::span<T> a, std::size_t left, std::size_t right, CostProfile& profile,
                                 std::vector<ClassificationStep>* trace = nullptr) {
  detail::check_range(a.size(), left, right);
  CostProfile local;
  PartitionOutcome out;
  out.n = right - left + 1;

  const auto lo = static_cast<std::ptrdiff_t>(left);
  const auto hi = static_cast<std::ptrdiff_t>(right);
  auto at = [&](std::ptrdiff_t x) -> T& { return a[static_cast<std::size_t>(x)]; };

  T p, q;
  if (detail::counted_less(at(hi), at(lo), local)) {
    p = at(hi);
    q = at(lo);
  } else {
    p = at(lo);
    q = at(hi);
  }

  std::ptrdiff_t i = lo + 1;
  std::ptrdiff_t k = hi - 1;
  std::ptrdiff_t j = i;
  std::int64_t d = 0;
  auto record = [&](Branch b, KeyClass c) {
    if (trace) trace->push_back({b, c});
  };

  while (j <= k) {
    if (d >= 0) {
      if (detail::counted_less(at(j), p, local)) {
        detail::counted_swap(a, i, j, local);
        ++i;
        ++j;
        ++d;
        record(Branch::p_first, KeyClass::small);
      } else if (detail::counted_less(at(j), q, local)) {
        ++j;
        record(Branch::p_first, KeyClass::medium);
      } else {
        detail::counted_swap(a, j, k, local);
        --k;
        --d;
        record(Branch::p_first, KeyClass::large);
      }
    } else {
      if (detail::counted_less(q, at(k), local)) {
        --k;
        --d;
        ++out.l_plus;
        record(Branch::q_first, KeyClass::large);
      } else {
        if (detail::counted_less(at(k), p, local)) {
          rotate3(a, static_cast<std::size_t>(k), static_cast<std::size_t>(j), static_cast<std::size_t>(i), local);
          ++i;
          ++d;
          ++out.s_plus;
          record(Branch::q_first, KeyClass::small);
        } else {
          detail::counted_swap(a, j, k, local);
          ++out.m_plus;
          record(Branch::q_first, KeyClass::medium);
        }
        ++j;
      }
    }
  }

  // Pivot placement: two array writes each, charged as one swap apiece.
  at(lo) = std::move(at(i - 1));
  at(i - 1) = std::move(p);
  at(hi) = std::move(at(k + 1));
  at(k + 1) = std::move(q);
  local.plain_swaps += 2;

  out.i1 = static_cast<std::uint64_t>(i - lo - 1);
  out.i2 = static_cast<std::uint64_t>(k - i + 1);
  out.i3 = static_cast<std::uint64_t>(hi - k - 1);
  out.t_c = local.comparisons;
  out.t_s_half = local.half_swaps();
  out.p_index = static_cast<std::size_t>(i - 1);
  out.q_index = static_cast<std::size_t>(k + 1);
  profile += local;
  return out;
}

// Full dual-pivot "Count" quicksort. Recurses depth-first on the small,
// medium and large sublists (in that order) using an explicit stack; ranges
// of length < 2 cost nothing. `observer` sees every partition outcome.
template <std::totally_ordered T, typename Observer = detail::NoObserver>
CostProfile sort_count(std::span<T> a, Observer&& observer = {}) {
  CostProfile profile;
  if (a.size() < 2) return profile;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // half-open [lo, hi)
  stack.emplace_back(0, a.size());
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi - lo < 2) continue;
    const PartitionOutcome o = partition_count(a, lo, hi - 1, profile);
    observer(o);
    stack.emplace_back(o.q_index + 1, hi);
    stack.emplace_back(o.p_index + 1, o.q_index);
    stack.emplace_back(lo, o.p_index);
  }
  return profile;
}

template <std::totally_ordered T>
CostProfile sort_count(std::vector<T>& v) {
  return sort_count(std::span<T>(v));
}

// Classic single-pivot quicksort with Sedgewick's crossing-pointer
// partitioning; the first element of each range is the pivot. Scans stop on
// keys equal to the pivot, so duplicates are handled.
template <std::totally_ordered T>
CostProfile sort_classic(std::span<T> a) {
  CostProfile profile;
  if (a.size() < 2) return profile;
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> stack;  // closed [l, r]
  stack.emplace_back(0, static_cast<std::ptrdiff_t>(a.size()) - 1);
  auto at = [&](std::ptrdiff_t x) -> T& { return a[static_cast<std::size_t>(x)]; };
  while (!stack.empty()) {
    auto [l, r] = stack.back();
    stack.pop_back();
    if (r <= l) continue;
    const T p = at(l);
    std::ptrdiff_t i = l;
    std::ptrdiff_t j = r + 1;
    for (;;) {
      do {
        ++i;
      } while (i <= r && detail::counted_less(at(i), p, profile));
      do {
        --j;
      } while (detail::counted_less(p, at(j), profile));
      if (i >= j) break;
      detail::counted_swap(a, i, j, profile);
    }
    detail::counted_swap(a, l, j, profile);
    stack.emplace_back(j + 1, r);
    stack.emplace_back(l, j - 1);
  }
  return profile;
}

template <std::totally_ordered T>
CostProfile sort_classic(std::vector<T>& v) {
  return sort_classic(std::span<T>(v));
}

}  // namespace dpqs
