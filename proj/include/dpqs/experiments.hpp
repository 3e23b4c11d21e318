#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "dpqs/rational.hpp"
#include "dpqs/sort_core.hpp"
#include "dpqs/statistics.hpp"

namespace dpqs {

// All n! permutations of 1..n in lexicographic order.
class PermutationIterator {
 public:
  explicit PermutationIterator(std::size_t n);
  const std::vector<Key>& current() const { return perm_; }
  bool done() const { return done_; }
  void next();
  std::uint64_t index() const { return index_; }

 private:
  std::vector<Key> perm_;
  bool done_ = false;
  std::uint64_t index_ = 0;
};

std::uint64_t factorial(std::uint64_t n);

inline constexpr std::uint64_t kMaxExhaustiveN = 10;

struct ExhaustiveReport {
  std::uint64_t n = 0;
  std::uint64_t permutations = 0;
  Rational mean_comparisons;
  Rational mean_half_swaps;
  Rational formula_comparisons;
  Rational formula_swaps;  // swap units
  bool comparisons_match = false;
  bool swaps_match = false;  // mean_half_swaps == 2 * formula_swaps
  bool sorted_all = false;
  bool passed() const { return comparisons_match && swaps_match && sorted_all; }
};

// Full sorts of every permutation of 1..n; 2 <= n <= 10.
ExhaustiveReport run_exhaustive(std::uint64_t n);

struct PartitionReport {
  std::uint64_t n = 0;
  std::uint64_t permutations = 0;
  Rational mean_i1, mean_i2, mean_i3;
  Rational mean_splus, mean_mplus, mean_lplus;
  Rational mean_tc;
  Rational mean_ts;  // swap units
  Rational formula_ts;
  Rational formula_splus;
  bool ts_match = false;
  bool splus_match = false;
  bool splus_equals_lplus_minus_mplus = false;
  bool all_reconciled = false;
  bool passed() const { return ts_match && splus_match && splus_equals_lplus_minus_mplus && all_reconciled; }
};

// First partitioning stage only, over every permutation of 1..n;
// 2 <= n <= 10.
PartitionReport run_exhaustive_partition(std::uint64_t n);

// Exact law of the first-stage sublist sizes (i1, i2, i3) over all n!
// permutations.
std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, Rational> exhaustive_sublist_distribution(
    std::uint64_t n);

enum class Variant { count, classic };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct RunRecord {
  Variant variant = Variant::count;
  std::uint64_t n = 0;
  std::uint64_t sample_index = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t half_swaps = 0;
  double norm_c = 0;
  double norm_s = 0;  // swap units
};

// Sorts `samples` random permutations of size n (sample i uses its own
// derived stream) and fills the normalized fields: centred by the exact
// means for the count variant, by empirical means for classic.
std::vector<RunRecord> simulate(Variant variant, std::uint64_t n, std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 1);

struct MonteCarloReport {
  Variant variant = Variant::count;
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  // Moments of (C_n, S_n); second moments are divided by n^2.
  MomentEstimate moments;
  double var_c_over_n2 = 0, var_s_over_n2 = 0, cov_over_n2 = 0;
  double se_var_c_over_n2 = 0, se_var_s_over_n2 = 0, se_cov_over_n2 = 0;
  // Count variant only: exact means and the deviation of the sample means.
  std::optional<double> exact_mean_c, exact_mean_s;
  std::optional<double> mean_c_z, mean_s_z;
};

MonteCarloReport summarize(Variant variant, std::uint64_t n, const std::vector<RunRecord>& records);

// Header plus one row per record.
void write_scatter_csv(std::ostream& os, const std::vector<RunRecord>& records);

}  // namespace dpqs
