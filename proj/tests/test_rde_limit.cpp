#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dpqs/exact_analysis.hpp"
#include "dpqs/rde_limit.hpp"
#include "dpqs/sort_core.hpp"

using namespace dpqs;

TEST_CASE("spacings") {
  const Spacings forced = spacings_from_uniforms(0.5, 0.5);
  CHECK(forced.d1 == 0.5);
  CHECK(forced.d2 == 0.0);
  CHECK(forced.d3 == 0.5);

  const Spacings sp = spacings_from_uniforms(0.7, 0.2);
  CHECK(sp.d1 == doctest::Approx(0.2));
  CHECK(sp.d2 == doctest::Approx(0.5));
  CHECK(sp.d3 == doctest::Approx(0.3));
}

TEST_CASE("spacings sample means") {
  Rng rng = derive_rng(1, streams::tests, 0);
  const std::size_t draws = 1000000;
  double sum[3] = {0, 0, 0}, sq[3] = {0, 0, 0}, min_sum = 0, min_sq = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const Spacings sp = sample_spacings(rng);
    REQUIRE(std::abs(sp.d1 + sp.d2 + sp.d3 - 1.0) < 1e-12);
    REQUIRE(sp.d1 >= 0);
    REQUIRE(sp.d2 >= 0);
    REQUIRE(sp.d3 >= 0);
    const double d[3] = {sp.d1, sp.d2, sp.d3};
    for (int r = 0; r < 3; ++r) {
      sum[r] += d[r];
      sq[r] += d[r] * d[r];
    }
    const double m = std::min(sp.d1, sp.d3);
    min_sum += m;
    min_sq += m * m;
  }
  const double n = static_cast<double>(draws);
  for (int r = 0; r < 3; ++r) {
    const double mean = sum[r] / n;
    const double se = std::sqrt((sq[r] / n - mean * mean) / n);
    CHECK(std::abs(mean - 1.0 / 3.0) < 3 * se);
  }
  const double min_mean = min_sum / n;
  const double min_se = std::sqrt((min_sq / n - min_mean * min_mean) / n);
  CHECK(std::abs(min_mean - 1.0 / 6.0) < 3 * min_se);
}

TEST_CASE("toll values") {
  // 5/3 - (9/5) ln 3 and 2/3 - (3/4) ln 3, evaluated in mpmath.
  const TollVector even = toll({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(even.b1 == doctest::Approx(-0.31083545293593077784).epsilon(1e-14));
  CHECK(even.b2 == doctest::Approx(-0.15729254983441560188).epsilon(1e-14));

  const TollVector degenerate = toll({1.0, 0.0, 0.0});
  CHECK(degenerate.b1 == 1.0);
  CHECK(degenerate.b2 == 1.0);

  // Indicator switches on only for d3 strictly greater than d1.
  const TollVector tie = toll({0.25, 0.5, 0.25});
  const TollVector above = toll({0.2, 0.5, 0.3});
  const double entropy = 0.2 * std::log(0.2) + 0.5 * std::log(0.5) + 0.3 * std::log(0.3);
  CHECK(tie.b2 == doctest::Approx(0.5 + 0.75 * (0.5 * std::log(0.25) + 0.5 * std::log(0.5))));
  CHECK(above.b2 == doctest::Approx(0.5 + (0.1 + 0.5 - 0.3) + 0.75 * entropy));
  CHECK(above.b1 == doctest::Approx(1.0 + 0.5 + 0.2 + 1.8 * entropy));
}

TEST_CASE("toll quadrature reproduces the variance constants") {
  const AnalysisConstants& c = analysis_constants();
  const TollMoments m = toll_second_moments(2000);
  CHECK(std::abs(m.e_b1) < 1e-6);
  CHECK(std::abs(m.e_b2) < 1e-6);
  CHECK(std::abs(2 * m.e_b1b1 - c.sigma2_c.convert_to<double>()) < 1e-4);
  CHECK(std::abs(2 * m.e_b2b2 - c.sigma2_s.convert_to<double>()) < 1e-4);
  CHECK(std::abs(2 * m.e_b1b2 - c.sigma2_cs.convert_to<double>()) < 1e-4);

  // Doubling the resolution changes nothing at the 1e-4 relative level.
  const TollMoments fine = toll_second_moments(4000);
  CHECK(std::abs(fine.e_b1b1 - m.e_b1b1) < 1e-4 * m.e_b1b1);
  CHECK(std::abs(fine.e_b2b2 - m.e_b2b2) < 1e-4 * m.e_b2b2);
  CHECK(std::abs(fine.e_b1b2 - m.e_b1b2) < 1e-4 * m.e_b1b2);

  CHECK_THROWS_AS(toll_second_moments(999), std::domain_error);
}

TEST_CASE("depth one gives the root toll") {
  Rng a = derive_rng(42, streams::rde, 0);
  Rng b = derive_rng(42, streams::rde, 0);
  const LimitSample s = sample_limit(a, 1, 1e-4);
  const TollVector t = toll(sample_spacings(b));
  CHECK(s.x_c == t.b1);
  CHECK(s.x_s == t.b2);
}

TEST_CASE("sample_limit arguments") {
  Rng rng = derive_rng(0, streams::rde, 0);
  CHECK_THROWS_AS(sample_limit(rng, 0, 1e-4), std::domain_error);
  CHECK_THROWS_AS(sample_limit(rng, 5, 1.0), std::domain_error);
  CHECK_THROWS_AS(sample_limit(rng, 5, -0.1), std::domain_error);
}

TEST_CASE("sampling is deterministic and independent of worker count") {
  const auto one = sample_limit_batch(99, 300, 25, 1e-3, 1);
  const auto three = sample_limit_batch(99, 300, 25, 1e-3, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].x_c == three[i].x_c);
    CHECK(one[i].x_s == three[i].x_s);
  }
}

TEST_CASE("limit samples are centred and stable in depth") {
  const std::size_t count = 10000;
  const auto deep = sample_limit_batch(5, count, 25, 1e-4, 2);
  const auto shallow = sample_limit_batch(5, count, 15, 1e-4, 2);
  const MomentEstimate d = estimate_moments(deep);
  const MomentEstimate s = estimate_moments(shallow);
  CHECK(std::abs(d.mean_x) < 3 * d.se_mean_x);
  CHECK(std::abs(d.mean_y) < 3 * d.se_mean_y);
  CHECK(std::abs(d.var_x - s.var_x) < d.se_var_x);
  CHECK(std::abs(d.var_y - s.var_y) < d.se_var_y);
  const AnalysisConstants& c = analysis_constants();
  CHECK(std::abs(d.var_x - c.sigma2_c.convert_to<double>()) < 4 * d.se_var_x);
  CHECK(std::abs(d.var_y - c.sigma2_s.convert_to<double>()) < 4 * d.se_var_y);
}

TEST_CASE("estimate_moments edge cases") {
  std::vector<LimitSample> few(999);
  CHECK_THROWS_AS(estimate_moments(few), std::domain_error);

  std::vector<LimitSample> zeros(1000);
  const MomentEstimate m = estimate_moments(zeros);
  CHECK(m.var_x == 0);
  CHECK(m.var_y == 0);
  CHECK(m.cov == 0);
  CHECK_FALSE(m.corr_defined);
}

TEST_CASE("q-first counts approach their limits") {
  const std::vector<std::uint64_t> ns{100, 10000};
  const auto rows = qfirst_diagnostic(ns, 10000, 17, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].mse_s > rows[1].mse_s);
  CHECK(rows[0].mse_m > rows[1].mse_m);
  CHECK(rows[0].mse_l > rows[1].mse_l);
  CHECK(rows[1].mse_s < 0.02);
  CHECK(rows[1].mse_m < 0.02);
  CHECK(rows[1].mse_l < 0.02);

  const std::vector<std::uint64_t> too_small{9};
  CHECK_THROWS_AS(qfirst_diagnostic(too_small, 10, 0), std::domain_error);
}

TEST_CASE("S+ vanishes when the walk drifts down") {
  // Pivots 900 and 950 out of 0..999: small keys dominate, the counter
  // drifts upward and almost nothing is compared to q first.
  std::vector<Key> a(1000);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<Key>((i * 7919) % 1000);
  std::swap(a.front(), *std::find(a.begin(), a.end(), Key{900}));
  std::swap(a.back(), *std::find(a.begin(), a.end(), Key{950}));
  CostProfile p;
  const PartitionOutcome o = partition_count(std::span<Key>(a), 0, a.size() - 1, p);
  CHECK(o.i1 > o.i3);
  CHECK(static_cast<double>(o.s_plus) / 1000.0 < 0.01);
}
