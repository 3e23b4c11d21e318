#include "dpqs/sort_core.hpp"

namespace dpqs {

std::ostream& operator<<(std::ostream& os, const CostProfile& p) {
  return os << "comparisons=" << p.comparisons << " plain_swaps=" << p.plain_swaps
            << " rotate3_ops=" << p.rotate3_ops << " half_swaps=" << p.half_swaps();
}

std::uint64_t closed_form_tc(const PartitionOutcome& o) {
  return (o.n - 1) + o.i2 + o.i3 + o.s_plus - o.l_plus;
}

std::uint64_t closed_form_ts_half(const PartitionOutcome& o) {
  return 2 * (2 + o.i1 + o.i3 + o.m_plus - o.l_plus) + o.s_plus;
}

bool reconciles(const PartitionOutcome& o) {
  return o.t_c == closed_form_tc(o) && o.t_s_half == closed_form_ts_half(o);
}

template PartitionOutcome partition_count<Key>(std::span<Key>, std::size_t, std::size_t, CostProfile&,
                                               std::vector<ClassificationStep>*);
template CostProfile sort_classic<Key>(std::span<Key>);

}  // namespace dpqs
