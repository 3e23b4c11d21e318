#pragma once

#include <cstdint>
#include <vector>

#include "dpqs/rational.hpp"

namespace dpqs {

// Balls of each type added so far; the urn holds s+1, m+1, l+1 balls.
struct UrnComposition {
  std::uint64_t s = 0, m = 0, l = 0;
  friend bool operator==(const UrnComposition&, const UrnComposition&) = default;
};

// Exact law of (S_i, M_i, L_i) for the three-colour Polya-Eggenberger urn
// with identity replacement, started from one ball of each colour.
class StateDistribution {
 public:
  // Point mass at (0,0,0), step 0.
  StateDistribution();

  std::uint64_t step() const { return step_; }
  // Zero outside the support {s + m + l = step}.
  Rational probability(const UrnComposition& c) const;
  Rational total_mass() const;
  std::size_t support_size() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t s = 0; s <= step_; ++s)
      for (std::uint64_t l = 0; l + s <= step_; ++l) f(UrnComposition{s, step_ - s - l, l}, table_[s][l]);
  }

 private:
  friend StateDistribution dp_step(const StateDistribution& dist);
  std::uint64_t step_ = 0;
  std::vector<std::vector<Rational>> table_;  // table_[s][l]
};

// One draw: a ball of type t is added with probability (count_t + 1)/(i + 3).
StateDistribution dp_step(const StateDistribution& dist);
StateDistribution distribution_at(std::uint64_t step);

// Joint probabilities at one step, computed from the step table and the
// one-step transition kernel.
struct StepProbabilities {
  Rational l_gt_s;            // P(L_i > S_i)
  Rational large_and_l_gt_s;  // P(L_{i+1} = L_i + 1, L_i > S_i)
  Rational medium_and_l_gt_s; // P(M_{i+1} = M_i + 1, L_i > S_i)
  Rational small_and_l_gt_s;  // P(S_{i+1} = S_i + 1, L_i > S_i)
};

StepProbabilities step_probabilities(const StateDistribution& dist);

Rational prob_L_gt_S(std::uint64_t i);
// i >= 1
Rational prob_up_and_L_gt_S(std::uint64_t i);
// i >= 1
Rational prob_smallup_and_L_gt_S(std::uint64_t i);

// E[S_n^+] = sum_{i=1}^{n-3} P(L_i > S_i, S_{i+1} = S_i + 1); n >= 2.
Rational expected_splus(std::uint64_t n);
// E[L_n^+ - M_n^+]; n >= 2.
Rational expected_lplus_minus_mplus(std::uint64_t n);

// Runs the DP once up to `max_step` and answers the per-step and
// cumulative queries from cached results.
class UrnTable {
 public:
  explicit UrnTable(std::uint64_t max_step);

  std::uint64_t max_step() const { return steps_.size() - 1; }
  const StepProbabilities& at(std::uint64_t i) const { return steps_.at(i); }
  // true iff every composition at step i has probability 2/((i+1)(i+2)).
  bool uniform_at(std::uint64_t i) const { return uniform_.at(i); }
  bool mass_conserved_at(std::uint64_t i) const { return mass_one_.at(i); }

  // First-stage expectations for input size n (2 <= n <= max_step + 3).
  Rational expected_splus(std::uint64_t n) const;
  Rational expected_mplus(std::uint64_t n) const;
  Rational expected_lplus(std::uint64_t n) const;

 private:
  Rational prefix(std::uint64_t n, Rational StepProbabilities::*field) const;
  std::vector<StepProbabilities> steps_;
  std::vector<bool> uniform_;
  std::vector<bool> mass_one_;
};

}  // namespace dpqs
