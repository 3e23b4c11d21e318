#include "dpqs/experiments.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <stdexcept>

#include "dpqs/exact_analysis.hpp"
#include "dpqs/parallel.hpp"
#include "dpqs/random.hpp"

namespace dpqs {
namespace {

void require_exhaustive_range(std::uint64_t n) {
  if (n < 2 || n > kMaxExhaustiveN) throw std::invalid_argument("exhaustive mode requires 2 <= n <= 10");
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return Rational(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
}

}  // namespace

PermutationIterator::PermutationIterator(std::size_t n) : perm_(n) {
  std::iota(perm_.begin(), perm_.end(), Key{1});
}

void PermutationIterator::next() {
  if (done_) return;
  ++index_;
  if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

ExhaustiveReport run_exhaustive(std::uint64_t n) {
  require_exhaustive_range(n);
  std::uint64_t sum_c = 0, sum_h = 0, count = 0;
  bool sorted_all = true;
  std::vector<Key> work(n);
  for (PermutationIterator it(n); !it.done(); it.next()) {
    std::copy(it.current().begin(), it.current().end(), work.begin());
    const CostProfile p = sort_count(std::span<Key>(work));
    sum_c += p.comparisons;
    sum_h += p.half_swaps();
    sorted_all = sorted_all && std::is_sorted(work.begin(), work.end()) && work.front() == 1 &&
                 work.back() == static_cast<Key>(n);
    ++count;
  }
  ExhaustiveReport r;
  r.n = n;
  r.permutations = count;
  r.mean_comparisons = ratio(sum_c, count);
  r.mean_half_swaps = ratio(sum_h, count);
  r.formula_comparisons = mean_comparisons(n);
  r.formula_swaps = mean_swaps(n);
  r.comparisons_match = r.mean_comparisons == r.formula_comparisons;
  r.swaps_match = r.mean_half_swaps == Rational(2) * r.formula_swaps;
  r.sorted_all = sorted_all && count == factorial(n);
  return r;
}

PartitionReport run_exhaustive_partition(std::uint64_t n) {
  require_exhaustive_range(n);
  std::uint64_t i1 = 0, i2 = 0, i3 = 0, sp = 0, mp = 0, lp = 0, tc = 0, ts = 0, count = 0;
  bool reconciled = true;
  std::vector<Key> work(n);
  for (PermutationIterator it(n); !it.done(); it.next()) {
    std::copy(it.current().begin(), it.current().end(), work.begin());
    CostProfile profile;
    const PartitionOutcome o = partition_count(std::span<Key>(work), 0, n - 1, profile);
    i1 += o.i1;
    i2 += o.i2;
    i3 += o.i3;
    sp += o.s_plus;
    mp += o.m_plus;
    lp += o.l_plus;
    tc += o.t_c;
    ts += o.t_s_half;
    reconciled = reconciled && reconciles(o);
    ++count;
  }
  PartitionReport r;
  r.n = n;
  r.permutations = count;
  r.mean_i1 = ratio(i1, count);
  r.mean_i2 = ratio(i2, count);
  r.mean_i3 = ratio(i3, count);
  r.mean_splus = ratio(sp, count);
  r.mean_mplus = ratio(mp, count);
  r.mean_lplus = ratio(lp, count);
  r.mean_tc = ratio(tc, count);
  r.mean_ts = ratio(ts, 2 * count);
  r.formula_ts = mean_partition_swaps(n);
  r.formula_splus = mean_splus(n);
  r.ts_match = r.mean_ts == r.formula_ts;
  r.splus_match = r.mean_splus == r.formula_splus;
  r.splus_equals_lplus_minus_mplus = r.mean_splus == r.mean_lplus - r.mean_mplus;
  r.all_reconciled = reconciled;
  return r;
}

std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, Rational> exhaustive_sublist_distribution(
    std::uint64_t n) {
  require_exhaustive_range(n);
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<Key> work(n);
  for (PermutationIterator it(n); !it.done(); it.next()) {
    std::copy(it.current().begin(), it.current().end(), work.begin());
    CostProfile profile;
    const PartitionOutcome o = partition_count(std::span<Key>(work), 0, n - 1, profile);
    ++counts[{o.i1, o.i2, o.i3}];
    ++total;
  }
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, Rational> out;
  for (const auto& [key, c] : counts) out.emplace(key, ratio(c, total));
  return out;
}

std::string to_string(Variant v) { return v == Variant::count ? "count" : "classic"; }

Variant parse_variant(const std::string& s) {
  if (s == "count") return Variant::count;
  if (s == "classic") return Variant::classic;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

std::vector<RunRecord> simulate(Variant variant, std::uint64_t n, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers) {
  if (n < 1) throw std::invalid_argument("simulate: n must be positive");
  std::vector<RunRecord> records(samples);
  const std::uint64_t stream = variant == Variant::count ? streams::count_sort : streams::classic_sort;
  parallel_for(samples, workers, [&](std::size_t i) {
    Rng rng = derive_rng(seed, stream, i);
    std::vector<Key> a = random_permutation<Key>(n, rng);
    const CostProfile p = variant == Variant::count ? sort_count(std::span<Key>(a)) : sort_classic(std::span<Key>(a));
    records[i] = RunRecord{variant, n, i, p.comparisons, p.half_swaps(), 0.0, 0.0};
  });

  double center_c = 0, center_s = 0;
  if (variant == Variant::count) {
    center_c = mean_comparisons(n).to_double();
    center_s = mean_swaps(n).to_double();
  } else if (!records.empty()) {
    for (const RunRecord& r : records) {
      center_c += static_cast<double>(r.comparisons);
      center_s += static_cast<double>(r.half_swaps) / 2.0;
    }
    center_c /= static_cast<double>(records.size());
    center_s /= static_cast<double>(records.size());
  }
  const double nn = static_cast<double>(n);
  for (RunRecord& r : records) {
    r.norm_c = (static_cast<double>(r.comparisons) - center_c) / nn;
    r.norm_s = (static_cast<double>(r.half_swaps) / 2.0 - center_s) / nn;
  }
  return records;
}

MonteCarloReport summarize(Variant variant, std::uint64_t n, const std::vector<RunRecord>& records) {
  std::vector<double> c, s;
  c.reserve(records.size());
  s.reserve(records.size());
  for (const RunRecord& r : records) {
    c.push_back(static_cast<double>(r.comparisons));
    s.push_back(static_cast<double>(r.half_swaps) / 2.0);
  }
  MonteCarloReport rep;
  rep.variant = variant;
  rep.n = n;
  rep.samples = records.size();
  rep.moments = bivariate_moments(c, s);
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  rep.var_c_over_n2 = rep.moments.var_x / n2;
  rep.var_s_over_n2 = rep.moments.var_y / n2;
  rep.cov_over_n2 = rep.moments.cov / n2;
  rep.se_var_c_over_n2 = rep.moments.se_var_x / n2;
  rep.se_var_s_over_n2 = rep.moments.se_var_y / n2;
  rep.se_cov_over_n2 = rep.moments.se_cov / n2;
  if (variant == Variant::count) {
    rep.exact_mean_c = mean_comparisons(n).to_double();
    rep.exact_mean_s = mean_swaps(n).to_double();
    if (rep.moments.se_mean_x > 0) rep.mean_c_z = (rep.moments.mean_x - *rep.exact_mean_c) / rep.moments.se_mean_x;
    if (rep.moments.se_mean_y > 0) rep.mean_s_z = (rep.moments.mean_y - *rep.exact_mean_s) / rep.moments.se_mean_y;
  }
  return rep;
}

void write_scatter_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << "variant,n,sample_index,comparisons,half_swaps,norm_c,norm_s\n";
  const auto old_precision = os.precision(17);
  for (const RunRecord& r : records) {
    os << to_string(r.variant) << ',' << r.n << ',' << r.sample_index << ',' << r.comparisons << ','
       << r.half_swaps << ',' << r.norm_c << ',' << r.norm_s << '\n';
  }
  os.precision(old_precision);
}

}  // namespace dpqs
