#include "dpqs/urn_model.hpp"

#include <stdexcept>

namespace dpqs {
namespace {

Rational ru(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v)), mpz_class(1)); }

void require_positive(std::uint64_t i, const char* what) {
  if (i < 1) throw std::domain_error(std::string(what) + ": requires i >= 1");
}

void require_at_least_two(std::uint64_t n, const char* what) {
  if (n < 2) throw std::domain_error(std::string(what) + ": requires n >= 2");
}

}  // namespace

StateDistribution::StateDistribution() : table_{{Rational(1)}} {}

Rational StateDistribution::probability(const UrnComposition& c) const {
  if (c.s + c.m + c.l != step_) return Rational(0);
  return table_[c.s][c.l];
}

Rational StateDistribution::total_mass() const {
  Rational sum;
  for_each([&](const UrnComposition&, const Rational& p) { sum += p; });
  return sum;
}

std::size_t StateDistribution::support_size() const {
  std::size_t count = 0;
  for_each([&](const UrnComposition&, const Rational& p) {
    if (p.sign() != 0) ++count;
  });
  return count;
}

StateDistribution dp_step(const StateDistribution& dist) {
  const std::uint64_t i = dist.step_;
  StateDistribution next;
  next.step_ = i + 1;
  next.table_.assign(i + 2, {});
  for (std::uint64_t s = 0; s <= i + 1; ++s) next.table_[s].assign(i + 2 - s, Rational(0));

  const Rational denom = ru(i + 3);
  dist.for_each([&](const UrnComposition& c, const Rational& p) {
    if (p.sign() == 0) return;
    const Rational w = p / denom;
    next.table_[c.s + 1][c.l] += w * ru(c.s + 1);
    next.table_[c.s][c.l] += w * ru(c.m + 1);
    next.table_[c.s][c.l + 1] += w * ru(c.l + 1);
  });
  return next;
}

StateDistribution distribution_at(std::uint64_t step) {
  StateDistribution d;
  for (std::uint64_t i = 0; i < step; ++i) d = dp_step(d);
  return d;
}

StepProbabilities step_probabilities(const StateDistribution& dist) {
  StepProbabilities out;
  const Rational denom = ru(dist.step() + 3);
  dist.for_each([&](const UrnComposition& c, const Rational& p) {
    if (c.l <= c.s) return;
    out.l_gt_s += p;
    const Rational w = p / denom;
    out.large_and_l_gt_s += w * ru(c.l + 1);
    out.medium_and_l_gt_s += w * ru(c.m + 1);
    out.small_and_l_gt_s += w * ru(c.s + 1);
  });
  return out;
}

Rational prob_L_gt_S(std::uint64_t i) { return step_probabilities(distribution_at(i)).l_gt_s; }

Rational prob_up_and_L_gt_S(std::uint64_t i) {
  require_positive(i, "prob_up_and_L_gt_S");
  return step_probabilities(distribution_at(i)).large_and_l_gt_s;
}

Rational prob_smallup_and_L_gt_S(std::uint64_t i) {
  require_positive(i, "prob_smallup_and_L_gt_S");
  return step_probabilities(distribution_at(i)).small_and_l_gt_s;
}

Rational expected_splus(std::uint64_t n) {
  require_at_least_two(n, "expected_splus");
  if (n <= 3) return Rational(0);
  return UrnTable(n - 3).expected_splus(n);
}

Rational expected_lplus_minus_mplus(std::uint64_t n) {
  require_at_least_two(n, "expected_lplus_minus_mplus");
  if (n <= 3) return Rational(0);
  const UrnTable t(n - 3);
  return t.expected_lplus(n) - t.expected_mplus(n);
}

UrnTable::UrnTable(std::uint64_t max_step) {
  StateDistribution d;
  for (std::uint64_t i = 0;; ++i) {
    steps_.push_back(step_probabilities(d));
    const Rational expected = Rational(2) / (ru(i + 1) * ru(i + 2));
    bool uniform = true;
    d.for_each([&](const UrnComposition&, const Rational& p) {
      if (p != expected) uniform = false;
    });
    uniform_.push_back(uniform);
    mass_one_.push_back(d.total_mass() == Rational(1));
    if (i == max_step) break;
    d = dp_step(d);
  }
}

Rational UrnTable::prefix(std::uint64_t n, Rational StepProbabilities::*field) const {
  require_at_least_two(n, "UrnTable");
  if (n > max_step() + 3) throw std::out_of_range("UrnTable: n beyond computed steps");
  Rational sum;
  for (std::uint64_t i = 1; i + 3 <= n; ++i) sum += steps_[i].*field;
  return sum;
}

Rational UrnTable::expected_splus(std::uint64_t n) const { return prefix(n, &StepProbabilities::small_and_l_gt_s); }
Rational UrnTable::expected_mplus(std::uint64_t n) const { return prefix(n, &StepProbabilities::medium_and_l_gt_s); }
Rational UrnTable::expected_lplus(std::uint64_t n) const { return prefix(n, &StepProbabilities::large_and_l_gt_s); }

}  // namespace dpqs
