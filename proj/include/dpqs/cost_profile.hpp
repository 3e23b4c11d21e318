#pragma once

#include <cstdint>
#include <ostream>

namespace dpqs {

// Per-run cost tally. Swaps are tracked in half-swap units so that a
// rotate3 (charged as 3/2 of a swap) keeps the total integral.
struct CostProfile {
  std::uint64_t comparisons = 0;
  std::uint64_t plain_swaps = 0;
  std::uint64_t rotate3_ops = 0;

  std::uint64_t half_swaps() const { return 2 * plain_swaps + 3 * rotate3_ops; }
  double swaps() const { return static_cast<double>(half_swaps()) / 2.0; }

  CostProfile& operator+=(const CostProfile& o) {
    comparisons += o.comparisons;
    plain_swaps += o.plain_swaps;
    rotate3_ops += o.rotate3_ops;
    return *this;
  }
  friend bool operator==(const CostProfile&, const CostProfile&) = default;
};

std::ostream& operator<<(std::ostream& os, const CostProfile& p);

// Statistics of one partitioning stage of the dual-pivot "Count" scheme.
//
// i1, i2, i3 are the sizes of the small / medium / large sublists;
// s_plus, m_plus, l_plus count elements of each class that were compared
// to the larger pivot first. t_c and t_s_half are measured directly from the
// counter increments made during the stage.
struct PartitionOutcome {
  std::uint64_t n = 0;
  std::uint64_t i1 = 0, i2 = 0, i3 = 0;
  std::uint64_t s_plus = 0, m_plus = 0, l_plus = 0;
  std::uint64_t t_c = 0;
  std::uint64_t t_s_half = 0;
  // Final pivot positions (absolute array indices).
  std::size_t p_index = 0, q_index = 0;
};

// Closed forms the measured tolls must agree with (distinct keys only):
//   t_c      = (n-1) + i2 + i3 + s_plus - l_plus
//   t_s_half = 2 (2 + i1 + i3 + m_plus - l_plus) + s_plus
std::uint64_t closed_form_tc(const PartitionOutcome& o);
std::uint64_t closed_form_ts_half(const PartitionOutcome& o);
bool reconciles(const PartitionOutcome& o);

}  // namespace dpqs
