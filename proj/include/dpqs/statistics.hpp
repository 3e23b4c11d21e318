#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dpqs {

// Sample moments of a bivariate sample (x, y). Variances and covariance are
// unbiased; standard errors of the second-order quantities come from a
// grouped delete-one jackknife.
struct MomentEstimate {
  std::size_t count = 0;
  double mean_x = 0, mean_y = 0;
  double var_x = 0, var_y = 0, cov = 0;
  double corr = 0;
  bool corr_defined = false;  // false when either variance vanishes
  double se_mean_x = 0, se_mean_y = 0;
  double se_var_x = 0, se_var_y = 0, se_cov = 0, se_corr = 0;
};

// Requires at least two samples of equal length.
MomentEstimate bivariate_moments(std::span<const double> x, std::span<const double> y);

// Two-sample Kolmogorov-Smirnov distance sup |F_x - F_y|.
double ks_distance(std::vector<double> x, std::vector<double> y);

// Pearson chi-square statistic of observed counts against equal expected
// frequencies, and its upper-tail p-value.
struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 1;
};
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

}  // namespace dpqs
