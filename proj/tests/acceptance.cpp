// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dpqs/exact_analysis.hpp"
#include "dpqs/experiments.hpp"
#include "dpqs/random.hpp"
#include "dpqs/rde_limit.hpp"
#include "dpqs/sort_core.hpp"
#include "dpqs/statistics.hpp"
#include "dpqs/urn_model.hpp"

using namespace dpqs;

namespace {

constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool pass = true;
  std::string detail;
};


double dbl(const Decimal& d) { return d.convert_to<double>(); }

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome exhaustive_means() {
  Outcome o;
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const ExhaustiveReport r = run_exhaustive(n);
    const bool ok = r.passed() && r.mean_comparisons == mean_comparisons(n) &&
                    r.mean_half_swaps == Rational(2) * mean_swaps(n);
    if (!ok) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " mismatch; ";
    }
  }
  if (o.pass) o.detail = "n=2..8 exact, e.g. E[C_8]=" + mean_comparisons(8).to_string();
  return o;
}

Outcome partition_tolls() {
  Outcome o;
  const UrnTable urn(7);
  for (std::uint64_t n = 2; n <= 10; ++n) {
    const PartitionReport r = run_exhaustive_partition(n);
    const Rational nn(static_cast<long long>(n));
    const Rational tc = nn - Rational(1) + Rational(2) * mean_sublist_size(n) + mean_splus(n) - urn.expected_lplus(n);
    const bool ok = r.passed() && r.mean_ts == mean_partition_swaps(n) && r.mean_splus == mean_splus(n) &&
                    r.mean_splus == r.mean_lplus - r.mean_mplus && r.mean_tc == tc;
    if (!ok) {
      o.pass = false;
      o.detail += "n=" + std::to_string(n) + " mismatch; ";
    }
  }
  if (o.pass) o.detail = "n=2..10 exact, E[T_S(10)]=" + mean_partition_swaps(10).to_string();
  return o;
}

Outcome urn_identities() {
  Outcome o;
  auto ru = [](std::uint64_t v) { return Rational(static_cast<long long>(v)); };
  const UrnTable table(197);
  for (std::uint64_t i = 1; i <= 60; ++i) {
    const StepProbabilities& p = table.at(i);
    const bool even = i % 2 == 0;
    const bool ok =
        table.uniform_at(i) && table.mass_conserved_at(i) &&
        p.l_gt_s == (even ? ru(i) / ru(2 * (i + 1)) : ru(i + 1) / ru(2 * (i + 2))) &&
        p.large_and_l_gt_s == (even ? ru(i) / ru(4 * (i + 1)) : ru(i + 1) / ru(4 * (i + 2))) &&
        p.small_and_l_gt_s == (even ? ru(i * (i + 4)) / ru(12 * (i + 1) * (i + 3)) : Rational(1, 12)) &&
        p.large_and_l_gt_s / p.l_gt_s == Rational(1, 2);
    if (!ok) {
      o.pass = false;
      o.detail += "step " + std::to_string(i) + " fails; ";
    }
  }
  for (std::uint64_t n = 2; n <= 200; ++n) {
    if (table.expected_splus(n) != mean_splus(n)) {
      o.pass = false;
      o.detail += "E[S+] n=" + std::to_string(n) + " fails; ";
    }
  }
  if (o.pass) o.detail = "steps 1..60 and E[S+] for n<=200 exact";
  return o;
}

Outcome toll_moments() {
  const AnalysisConstants& c = analysis_constants();
  const TollMoments m = toll_second_moments(2000);
  const double dc = std::abs(2 * m.e_b1b1 - dbl(c.sigma2_c));
  const double ds = std::abs(2 * m.e_b2b2 - dbl(c.sigma2_s));
  const double dcs = std::abs(2 * m.e_b1b2 - dbl(c.sigma2_cs));
  Outcome o;
  o.pass = dc < 1e-3 && ds < 1e-3 && dcs < 1e-3 && std::abs(m.e_b1) < 1e-6 && std::abs(m.e_b2) < 1e-6;
  char buf[256];
  std::snprintf(buf, sizeof buf, "2E[b1^2]=%.6f 2E[b2^2]=%.6f 2E[b1b2]=%.6f E[b1]=%.1e E[b2]=%.1e",
                2 * m.e_b1b1, 2 * m.e_b2b2, 2 * m.e_b1b2, m.e_b1, m.e_b2);
  o.detail = buf;
  return o;
}

// Shared between criteria 5 and 7.
std::vector<RunRecord> count_records;

Outcome monte_carlo() {
  const std::uint64_t n = 10000, samples = 10000;
  const AnalysisConstants& c = analysis_constants();
  const double s2c = dbl(c.sigma2_c), s2s = dbl(c.sigma2_s);
  count_records = simulate(Variant::count, n, samples, kSeed, workers());
  const MonteCarloReport count = summarize(Variant::count, n, count_records);
  const MonteCarloReport classic = summarize(Variant::classic, n, simulate(Variant::classic, n, samples, kSeed, workers()));
  const double rel_c = std::abs(count.var_c_over_n2 - s2c) / s2c;
  const double rel_s = std::abs(count.var_s_over_n2 - s2s) / s2s;
  Outcome o;
  o.pass = rel_c < 0.10 && rel_s < 0.10 && std::abs(count.moments.corr - 0.2988) < 0.05 &&
           std::abs(classic.moments.corr - (-0.864)) < 0.05;
  char buf[256];
  std::snprintf(buf, sizeof buf, "Var(C)/n^2=%.4f (%.1f%%) Var(S)/n^2=%.4f (%.1f%%) corr=%.4f classic corr=%.4f",
                count.var_c_over_n2, 100 * rel_c, count.var_s_over_n2, 100 * rel_s, count.moments.corr,
                classic.moments.corr);
  o.detail = buf;
  return o;
}

Outcome rde_sampler() {
  const AnalysisConstants& c = analysis_constants();
  const double s2c = dbl(c.sigma2_c), s2s = dbl(c.sigma2_s);
  const auto samples = sample_limit_batch(kSeed, 100000, 25, 1e-4, workers());
  const MomentEstimate m = estimate_moments(samples);
  const double zc = m.mean_x / m.se_mean_x, zs = m.mean_y / m.se_mean_y;
  const double rel_c = std::abs(m.var_x - s2c) / s2c, rel_s = std::abs(m.var_y - s2s) / s2s;
  Outcome o;
  o.pass = std::abs(zc) < 3 && std::abs(zs) < 3 && rel_c < 0.05 && rel_s < 0.05 && m.corr_defined &&
           std::abs(m.corr - 0.2988) < 0.05;
  char buf[256];
  std::snprintf(buf, sizeof buf, "mean z=(%.2f, %.2f) var=(%.4f, %.4f) rel=(%.1f%%, %.1f%%) corr=%.4f", zc, zs,
                m.var_x, m.var_y, 100 * rel_c, 100 * rel_s, m.corr);
  o.detail = buf;
  return o;
}

Outcome limit_agreement() {
  if (count_records.empty()) count_records = simulate(Variant::count, 10000, 10000, kSeed, workers());
  // A different seed keeps the limit draws independent of criterion 6.
  const auto limit = sample_limit_batch(kSeed + 1, 10000, 25, 1e-4, workers());
  std::vector<double> sc, ss, lc, ls;
  for (const RunRecord& r : count_records) {
    sc.push_back(r.norm_c);
    ss.push_back(r.norm_s);
  }
  for (const LimitSample& s : limit) {
    lc.push_back(s.x_c);
    ls.push_back(s.x_s);
  }
  const double kc = ks_distance(sc, lc), ks = ks_distance(ss, ls);
  Outcome o;
  o.pass = kc < 0.05 && ks < 0.05;
  char buf[128];
  std::snprintf(buf, sizeof buf, "KS comparisons=%.4f KS swaps=%.4f", kc, ks);
  o.detail = buf;
  return o;
}

Outcome correctness() {
  Outcome o;
  std::uint64_t partitions = 0;
  auto check = [&](std::vector<Key> input, const std::string& label) {
    std::vector<Key> expected = input;
    std::sort(expected.begin(), expected.end());
    std::vector<Key> a = input;
    bool reconciled = true;
    sort_count(std::span<Key>(a), [&](const PartitionOutcome& p) {
      reconciled = reconciled && reconciles(p);
      ++partitions;
    });
    std::vector<Key> b = input;
    sort_classic(b);
    if (a != expected || b != expected || !reconciled) {
      o.pass = false;
      o.detail += label + " failed; ";
    }
  };

  Rng rng = derive_rng(kSeed, streams::tests, 0);
  for (int run = 0; run < 1000; ++run) {
    const std::size_t n = static_cast<std::size_t>(uniform_below_inclusive(rng, 2000));
    if (run % 2 == 0) {
      check(random_permutation<Key>(n, rng), "random permutation");
    } else {
      std::vector<Key> v(n);
      for (Key& k : v) k = static_cast<Key>(uniform_below_inclusive(rng, 1u << 20)) - (1 << 19);
      check(v, "random array");
    }
  }
  const std::size_t n = 10000;
  std::vector<Key> sorted(n);
  std::iota(sorted.begin(), sorted.end(), Key{0});
  std::vector<Key> reversed(sorted.rbegin(), sorted.rend());
  std::vector<Key> organ(n);
  for (std::size_t i = 0; i < n; ++i) organ[i] = static_cast<Key>(i < n / 2 ? i : n - i);
  check(sorted, "sorted");
  check(reversed, "reverse");
  check(organ, "organ-pipe");
  check(std::vector<Key>(n, 7), "all-equal");
  if (o.pass) o.detail = "1000 random arrays + 4 patterns, " + std::to_string(partitions) + " partitions reconciled";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exhaustive mean equality", 120, exhaustive_means},
      {2, "partition tolls", 300, partition_tolls},
      {3, "urn identities", 60, urn_identities},
      {4, "variance constants via toll moments", 60, toll_moments},
      {5, "Monte Carlo asymptotics", 600, monte_carlo},
      {6, "limit sampler moments", 0, rde_sampler},
      {7, "limit-law agreement", 0, limit_agreement},
      {8, "correctness and cost reconciliation", 0, correctness},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    failures += !o.pass;
    std::printf("[%s] criterion %d: %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
