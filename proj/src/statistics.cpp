#include "dpqs/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace dpqs {
namespace {

struct Sums {
  double n = 0, x = 0, y = 0, xx = 0, yy = 0, xy = 0;
  Sums& operator+=(const Sums& o) {
    n += o.n; x += o.x; y += o.y; xx += o.xx; yy += o.yy; xy += o.xy;
    return *this;
  }
  Sums operator-(const Sums& o) const {
    return {n - o.n, x - o.x, y - o.y, xx - o.xx, yy - o.yy, xy - o.xy};
  }
};

struct Second {
  double var_x, var_y, cov, corr;
};

Second second_moments(const Sums& s) {
  const double mx = s.x / s.n, my = s.y / s.n;
  const double vx = (s.xx - s.n * mx * mx) / (s.n - 1);
  const double vy = (s.yy - s.n * my * my) / (s.n - 1);
  const double c = (s.xy - s.n * mx * my) / (s.n - 1);
  const double denom = std::sqrt(vx * vy);
  return {vx, vy, c, denom > 0 ? c / denom : std::numeric_limits<double>::quiet_NaN()};
}

double jackknife_se(const std::vector<double>& leave_out) {
  const double g = static_cast<double>(leave_out.size());
  const double mean = std::accumulate(leave_out.begin(), leave_out.end(), 0.0) / g;
  double ss = 0;
  for (double v : leave_out) ss += (v - mean) * (v - mean);
  return std::sqrt((g - 1) / g * ss);
}

}  // namespace

MomentEstimate bivariate_moments(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("bivariate_moments: length mismatch");
  if (x.size() < 2) throw std::domain_error("bivariate_moments: need at least two samples");
  const std::size_t n = x.size();

  // Centre first to keep the running sums well conditioned.
  const double cx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double cy = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);

  const std::size_t groups = std::min<std::size_t>(50, n);
  std::vector<Sums> group_sums(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t begin = n * g / groups, end = n * (g + 1) / groups;
    Sums& s = group_sums[g];
    for (std::size_t i = begin; i < end; ++i) {
      const double a = x[i] - cx, b = y[i] - cy;
      s += {1, a, b, a * a, b * b, a * b};
    }
  }
  Sums total;
  for (const Sums& s : group_sums) total += s;

  MomentEstimate est;
  est.count = n;
  est.mean_x = cx + total.x / total.n;
  est.mean_y = cy + total.y / total.n;
  const Second all = second_moments(total);
  est.var_x = all.var_x;
  est.var_y = all.var_y;
  est.cov = all.cov;
  est.corr_defined = all.var_x > 0 && all.var_y > 0;
  est.corr = all.corr;
  est.se_mean_x = std::sqrt(all.var_x / static_cast<double>(n));
  est.se_mean_y = std::sqrt(all.var_y / static_cast<double>(n));

  if (groups >= 2) {
    std::vector<double> vx, vy, cv, cr;
    for (const Sums& s : group_sums) {
      const Sums rest = total - s;
      if (rest.n < 2) continue;
      const Second m = second_moments(rest);
      vx.push_back(m.var_x);
      vy.push_back(m.var_y);
      cv.push_back(m.cov);
      cr.push_back(m.corr);
    }
    est.se_var_x = jackknife_se(vx);
    est.se_var_y = jackknife_se(vy);
    est.se_cov = jackknife_se(cv);
    est.se_corr = est.corr_defined ? jackknife_se(cr) : std::numeric_limits<double>::quiet_NaN();
  }
  return est;
}

double ks_distance(std::vector<double> x, std::vector<double> y) {
  if (x.empty() || y.empty()) throw std::domain_error("ks_distance: empty sample");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts) {
  if (counts.size() < 2) throw std::domain_error("chi_square_uniform: need at least two cells");
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  const double expected = total / static_cast<double>(counts.size());
  ChiSquareResult r;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = counts.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

}  // namespace dpqs
