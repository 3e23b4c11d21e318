#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpqs/random.hpp"
#include "dpqs/statistics.hpp"

namespace dpqs {

// Gaps induced on [0,1] by two independent uniforms.
struct Spacings {
  double d1 = 0, d2 = 0, d3 = 0;
};

// Additive per-level cost in the fixed-point equation
//   X =d sum_r diag(D_r, D_r) X^(r) + (b1, b2).
struct TollVector {
  double b1 = 0, b2 = 0;
};

// One draw of (X_c, X_s).
struct LimitSample {
  double x_c = 0, x_s = 0;
};

Spacings spacings_from_uniforms(double u1, double u2);
Spacings sample_spacings(Rng& rng);

// b1 = 1 + d2 + min(d1, d3) + 9/5 sum d_r ln d_r
// b2 = d1 + d3 + 1{d3 > d1} (d1/2 + d2 - d3) + 3/4 sum d_r ln d_r
// with 0 ln 0 = 0.
TollVector toll(const Spacings& sp);

struct TollMoments {
  double e_b1 = 0, e_b2 = 0;
  double e_b1b1 = 0, e_b1b2 = 0, e_b2b2 = 0;
};

// Deterministic quadrature of E[b], E[b b^T] over the law of the spacings.
// The domain is split along d1 = d3, where b has a jump and a kink, and
// each half is mapped to the unit square and integrated by the midpoint
// rule with `resolution` points per axis.
TollMoments toll_second_moments(std::size_t resolution);

// Truncated evaluation of the fixed-point equation: every node draws
// spacings and adds its toll scaled by the product of the D_r along its
// path; nodes at depth `depth` or with scale below `prune_eps` contribute
// zero. The root spacings come from `rng`; all descendants are driven by a
// key drawn from `rng` and hashed along the tree path, so samples with the
// same generator state are nested across depth and prune_eps.
LimitSample sample_limit(Rng& rng, int depth, double prune_eps);

// `count` samples, sample i drawn from derive_rng(seed, streams::rde, i).
std::vector<LimitSample> sample_limit_batch(std::uint64_t seed, std::size_t count, int depth, double prune_eps,
                                            unsigned workers = 1);

// Requires at least kMinMomentSamples samples.
inline constexpr std::size_t kMinMomentSamples = 1000;
MomentEstimate estimate_moments(std::span<const LimitSample> samples);

// Mean squared distance between the normalized q-first counts of the first
// partitioning stage and their almost-sure limits:
//   mse_s = E[(S+/n - 1{I3 > I1} I1/n)^2], likewise for M+ (I2) and L+ (I3).
struct QFirstRow {
  std::uint64_t n = 0;
  std::size_t samples = 0;
  double mse_s = 0, mse_m = 0, mse_l = 0;
};

std::vector<QFirstRow> qfirst_diagnostic(std::span<const std::uint64_t> n_values, std::size_t samples_per_n,
                                         std::uint64_t seed, unsigned workers = 1);

}  // namespace dpqs
