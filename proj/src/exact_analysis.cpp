#include "dpqs/exact_analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/math/constants/constants.hpp>

namespace dpqs {
namespace {

// sum_{k=a}^{b} sign(k)/k as an unreduced fraction, by binary splitting.
// Keeps large-n harmonic numbers cheap: only one gcd at the end.
std::pair<mpz_class, mpz_class> split_sum(std::uint64_t a, std::uint64_t b, bool alternating) {
  if (b - a < 16) {
    mpz_class p = 0, q = 1;
    for (std::uint64_t k = a; k <= b; ++k) {
      const long sign = (alternating && (k % 2 == 1)) ? -1 : 1;
      mpz_class kk(static_cast<unsigned long>(k));
      p = p * kk + sign * q;
      q *= kk;
    }
    return {p, q};
  }
  const std::uint64_t mid = a + (b - a) / 2;
  auto [p1, q1] = split_sum(a, mid, alternating);
  auto [p2, q2] = split_sum(mid + 1, b, alternating);
  return {p1 * q2 + p2 * q1, q1 * q2};
}

Rational harmonic_impl(std::uint64_t n, bool alternating) {
  if (n == 0) return Rational(0);
  auto [p, q] = split_sum(1, n, alternating);
  return Rational(p, q);
}

Rational r(long long num, long long den = 1) { return Rational(num, den); }
Rational r_u(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v)), mpz_class(1)); }

// Shared parity correction of both closed forms:
//   - 1{n even}/320 (1/(n-3) + 3/(n-1)) + 1{n odd}/320 (3/(n-2) + 1/n)
Rational parity_term(std::uint64_t n) {
  const auto nn = static_cast<long long>(n);
  if (n % 2 == 0) return -(r(1, nn - 3) + r(3, nn - 1)) / r(320);
  return (r(3, nn - 2) + r(1, nn)) / r(320);
}

// n - 1{n even}
long long odd_floor(std::uint64_t n) { return static_cast<long long>(n % 2 == 0 ? n - 1 : n); }

void require_at_least_two(std::uint64_t n, const char* what) {
  if (n < 2) throw std::domain_error(std::string(what) + ": requires n >= 2");
}

}  // namespace

Rational harmonic(std::uint64_t n) { return harmonic_impl(n, false); }
Rational harmonic_alt(std::uint64_t n) { return harmonic_impl(n, true); }

Rational mean_comparisons(std::uint64_t n) {
  switch (n) {
    case 0:
    case 1: return r(0);
    case 2: return r(1);
    case 3: return r(8, 3);
    default: break;
  }
  const Rational nn = r_u(n);
  const Rational h = harmonic(n);
  const Rational ha = harmonic_alt(n);
  const Rational sign = (n % 2 == 0) ? r(1) : r(-1);
  return r(9, 5) * nn * h - r(1, 5) * nn * ha - r(89, 25) * nn + r(67, 40) * h - r(3, 40) * ha - r(83, 800) +
         sign / r(10) + parity_term(n);
}

Rational mean_swaps(std::uint64_t n) {
  switch (n) {
    case 0:
    case 1: return r(0);
    case 2: return r(2);
    case 3: return r(8, 3);
    default: break;
  }
  const Rational nn = r_u(n);
  const Rational h = harmonic(n);
  const Rational ha = harmonic_alt(n);
  const Rational sign = (n % 2 == 0) ? r(1) : r(-1);
  return r(3, 4) * nn * h + r(1, 20) * nn * ha - r(4, 5) * nn + r(3, 4) * h + r(1, 20) * ha - r(23, 160) -
         sign / r(40) + parity_term(n);
}

Rational mean_partition_swaps(std::uint64_t n) {
  require_at_least_two(n, "mean_partition_swaps");
  return r(5, 8) * r_u(n) + r(13, 16) - r(1, 16 * odd_floor(n));
}

Rational mean_splus(std::uint64_t n) {
  require_at_least_two(n, "mean_splus");
  return r_u(n) / r(12) - r(7, 24) + r(1, 8 * odd_floor(n));
}

Rational mean_sublist_size(std::uint64_t n) {
  require_at_least_two(n, "mean_sublist_size");
  return r_u(n - 2) / r(3);
}

const AnalysisConstants& analysis_constants() {
  static const AnalysisConstants constants = [] {
    using boost::math::constants::euler;
    using boost::math::constants::ln_two;
    using boost::math::constants::pi;
    const Decimal g = euler<Decimal>();
    const Decimal l2 = ln_two<Decimal>();
    const Decimal pi2 = pi<Decimal>() * pi<Decimal>();
    AnalysisConstants c;
    c.gamma = g;
    c.a_c = Decimal(9) / 5 * g + l2 / 5 - Decimal(89) / 25;
    c.a_s = Decimal(3) / 4 * g - l2 / 20 - Decimal(4) / 5;
    c.sigma2_c = Decimal(1609) / 300 - Decimal(27) / 50 * pi2 + Decimal(3) / 10 * l2;
    c.sigma2_s = Decimal(47) / 48 - Decimal(3) / 32 * pi2 + Decimal(3) / 32 * l2;
    c.sigma2_cs = Decimal(43) / 20 - Decimal(9) / 40 * pi2 + Decimal(7) / 40 * l2;
    c.corr_limit = c.sigma2_cs / sqrt(c.sigma2_c * c.sigma2_s);
    return c;
  }();
  return constants;
}

double mean_comparisons_asymptotic(double n) {
  const double a_c = analysis_constants().a_c.convert_to<double>();
  return 1.8 * n * std::log(n) + a_c * n + 67.0 / 40.0 * std::log(n);
}

double mean_swaps_asymptotic(double n) {
  const double a_s = analysis_constants().a_s.convert_to<double>();
  return 0.75 * n * std::log(n) + a_s * n + 0.75 * std::log(n);
}

}  // namespace dpqs
