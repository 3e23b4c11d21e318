#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dpqs/rational.hpp"

namespace dpqs {

// 50 significant decimal digits.
using Decimal = boost::multiprecision::cpp_dec_float_50;

// H_n = sum_{k=1}^n 1/k; H_0 = 0.
Rational harmonic(std::uint64_t n);
// sum_{k=1}^n (-1)^k / k.
Rational harmonic_alt(std::uint64_t n);

// Exact expected number of key comparisons of "Count" on a random
// permutation of size n. Closed form for n >= 4, stored values below.
Rational mean_comparisons(std::uint64_t n);
// Exact expected number of swaps (rotate3 counted as 3/2).
Rational mean_swaps(std::uint64_t n);

// Expected swaps of the first partitioning stage; n >= 2.
Rational mean_partition_swaps(std::uint64_t n);
// Expected number of small elements compared to q first in the first
// stage (equivalently E[L+ - M+]); n >= 2.
Rational mean_splus(std::uint64_t n);
// E[I_r] = (n-2)/3 for each sublist, n >= 2.
Rational mean_sublist_size(std::uint64_t n);

struct AnalysisConstants {
  Decimal gamma;
  Decimal a_c;        // linear coefficient of the comparison mean
  Decimal a_s;        // linear coefficient of the swap mean
  Decimal sigma2_c;   // Var(C_n) ~ sigma2_c n^2
  Decimal sigma2_s;   // Var(S_n) ~ sigma2_s n^2
  Decimal sigma2_cs;  // Cov(C_n, S_n) ~ sigma2_cs n^2
  Decimal corr_limit;
};

const AnalysisConstants& analysis_constants();

// 9/5 n ln n + A_c n + 67/40 ln n
double mean_comparisons_asymptotic(double n);
// 3/4 n ln n + A_s n + 3/4 ln n
double mean_swaps_asymptotic(double n);

}  // namespace dpqs
