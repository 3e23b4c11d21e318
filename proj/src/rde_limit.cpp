#include "dpqs/rde_limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpqs/parallel.hpp"
#include "dpqs/sort_core.hpp"

namespace dpqs {
namespace {

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

std::uint64_t child_key(std::uint64_t key, int r) {
  return splitmix64(key + static_cast<std::uint64_t>(r + 1) * 0x9e3779b97f4a7c15ULL);
}

// Randomness of a node depends only on its path key, so truncating the
// tree at a smaller depth or a larger prune_eps drops terms but never
// changes the remaining ones.
void add_node(std::uint64_t key, int depth_left, double scale, double prune_eps, LimitSample& acc) {
  if (depth_left <= 0 || scale < prune_eps) return;
  const Spacings sp = spacings_from_uniforms(unit_from_bits(splitmix64(key)),
                                             unit_from_bits(splitmix64(key ^ 0xd1b54a32d192ed03ULL)));
  const TollVector b = toll(sp);
  acc.x_c += scale * b.b1;
  acc.x_s += scale * b.b2;
  add_node(child_key(key, 0), depth_left - 1, scale * sp.d1, prune_eps, acc);
  add_node(child_key(key, 1), depth_left - 1, scale * sp.d2, prune_eps, acc);
  add_node(child_key(key, 2), depth_left - 1, scale * sp.d3, prune_eps, acc);
}

}  // namespace

Spacings spacings_from_uniforms(double u1, double u2) {
  const double lo = std::min(u1, u2), hi = std::max(u1, u2);
  return {lo, hi - lo, 1.0 - hi};
}

Spacings sample_spacings(Rng& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return spacings_from_uniforms(u1, u2);
}

TollVector toll(const Spacings& sp) {
  const double entropy = xlogx(sp.d1) + xlogx(sp.d2) + xlogx(sp.d3);
  TollVector b;
  b.b1 = 1.0 + sp.d2 + std::min(sp.d1, sp.d3) + 1.8 * entropy;
  b.b2 = sp.d1 + sp.d3 + 0.75 * entropy;
  if (sp.d3 > sp.d1) b.b2 += 0.5 * sp.d1 + sp.d2 - sp.d3;
  return b;
}

TollMoments toll_second_moments(std::size_t resolution) {
  if (resolution < 1000) throw std::domain_error("toll_second_moments: resolution must be >= 1000");
  const double h = 1.0 / static_cast<double>(resolution);
  // (D1, D3) has density 2 on the simplex. On the half {d_lo < d_hi}:
  //   d_lo = w/2, d_hi = d_lo + (1 - w) v, Jacobian (1 - w)/2,
  // so each cell carries weight (1 - w) h^2 against the density.
  long double s1 = 0, s2 = 0, s11 = 0, s12 = 0, s22 = 0;
  for (std::size_t a = 0; a < resolution; ++a) {
    const double w = (static_cast<double>(a) + 0.5) * h;
    const double lo = 0.5 * w;
    const double weight = (1.0 - w);
    long double r1 = 0, r2 = 0, r11 = 0, r12 = 0, r22 = 0;
    for (std::size_t c = 0; c < resolution; ++c) {
      const double v = (static_cast<double>(c) + 0.5) * h;
      const double hi_gap = (1.0 - w) * v;
      const double mid = (1.0 - w) * (1.0 - v);
      const double hi = lo + hi_gap;
      // d1 < d3, then d1 > d3.
      for (const Spacings& sp : {Spacings{lo, mid, hi}, Spacings{hi, mid, lo}}) {
        const TollVector b = toll(sp);
        r1 += b.b1;
        r2 += b.b2;
        r11 += b.b1 * b.b1;
        r12 += b.b1 * b.b2;
        r22 += b.b2 * b.b2;
      }
    }
    s1 += weight * r1;
    s2 += weight * r2;
    s11 += weight * r11;
    s12 += weight * r12;
    s22 += weight * r22;
  }
  const long double cell = static_cast<long double>(h) * h;
  return {static_cast<double>(s1 * cell), static_cast<double>(s2 * cell), static_cast<double>(s11 * cell),
          static_cast<double>(s12 * cell), static_cast<double>(s22 * cell)};
}

LimitSample sample_limit(Rng& rng, int depth, double prune_eps) {
  if (depth < 1) throw std::domain_error("sample_limit: depth must be >= 1");
  if (!(prune_eps >= 0.0 && prune_eps < 1.0)) throw std::domain_error("sample_limit: prune_eps must be in [0, 1)");
  const Spacings root = sample_spacings(rng);
  const std::uint64_t key = rng();
  const TollVector b = toll(root);
  LimitSample acc{b.b1, b.b2};
  add_node(child_key(key, 0), depth - 1, root.d1, prune_eps, acc);
  add_node(child_key(key, 1), depth - 1, root.d2, prune_eps, acc);
  add_node(child_key(key, 2), depth - 1, root.d3, prune_eps, acc);
  return acc;
}

std::vector<LimitSample> sample_limit_batch(std::uint64_t seed, std::size_t count, int depth, double prune_eps,
                                            unsigned workers) {
  std::vector<LimitSample> out(count);
  parallel_for(count, workers, [&](std::size_t i) {
    Rng rng = derive_rng(seed, streams::rde, i);
    out[i] = sample_limit(rng, depth, prune_eps);
  });
  return out;
}

MomentEstimate estimate_moments(std::span<const LimitSample> samples) {
  if (samples.size() < kMinMomentSamples) throw std::domain_error("estimate_moments: need at least 1000 samples");
  std::vector<double> xc, xs;
  xc.reserve(samples.size());
  xs.reserve(samples.size());
  for (const LimitSample& s : samples) {
    xc.push_back(s.x_c);
    xs.push_back(s.x_s);
  }
  return bivariate_moments(xc, xs);
}

std::vector<QFirstRow> qfirst_diagnostic(std::span<const std::uint64_t> n_values, std::size_t samples_per_n,
                                         std::uint64_t seed, unsigned workers) {
  std::vector<QFirstRow> rows;
  for (const std::uint64_t n : n_values) {
    if (n < 10) throw std::domain_error("qfirst_diagnostic: n must be >= 10");
    struct Err {
      double s, m, l;
    };
    std::vector<Err> errs(samples_per_n);
    parallel_for(samples_per_n, workers, [&](std::size_t idx) {
      Rng rng = derive_rng(seed ^ splitmix64(n), streams::qfirst_diagnostic, idx);
      std::vector<Key> a = random_permutation<Key>(n, rng);
      CostProfile profile;
      const PartitionOutcome o = partition_count(std::span<Key>(a), 0, n - 1, profile);
      const double nn = static_cast<double>(n);
      const double ind = o.i3 > o.i1 ? 1.0 : 0.0;
      const double es = static_cast<double>(o.s_plus) / nn - ind * static_cast<double>(o.i1) / nn;
      const double em = static_cast<double>(o.m_plus) / nn - ind * static_cast<double>(o.i2) / nn;
      const double el = static_cast<double>(o.l_plus) / nn - ind * static_cast<double>(o.i3) / nn;
      errs[idx] = {es * es, em * em, el * el};
    });
    QFirstRow row{n, samples_per_n, 0, 0, 0};
    for (const Err& e : errs) {
      row.mse_s += e.s;
      row.mse_m += e.m;
      row.mse_l += e.l;
    }
    const double k = static_cast<double>(std::max<std::size_t>(1, samples_per_n));
    row.mse_s /= k;
    row.mse_m /= k;
    row.mse_l /= k;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dpqs
