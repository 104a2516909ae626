#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pebbling/config.hpp"
#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

inline constexpr double kWilsonZ95 = 1.959963984540054;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for a binomial proportion. n = 0 gives [0, 1].
Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z = kWilsonZ95);

struct ExactProbability {
  Rational probability;
  std::uint64_t solvable = 0;
  std::uint64_t total = 0;
};

/// Fraction of the configurations of k pebbles that are solvable, by full
/// enumeration and the exact solver. Throws BudgetExceeded when there are
/// more than max_configurations configurations or a solve runs out of states.
ExactProbability exact_solvable_prob(const GridSpec& g, Count k,
                                     std::uint64_t max_configurations = 1'000'000,
                                     std::uint64_t state_budget = kDefaultStateBudget);

struct TrialReport {
  bool solvable = false;
  bool budget_exceeded = false;
  Count max_pile = 0;
  std::uint64_t states_explored = 0;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// One random configuration of k pebbles, decided by the path criterion on
/// 1-dimensional grids and by the exact solver cascade otherwise.
TrialReport run_trial(const GridSpec& g, Count k, std::uint64_t trial_seed,
                      std::uint64_t state_budget = kDefaultStateBudget);

struct McOptions {
  std::uint64_t state_budget = kDefaultStateBudget;
  unsigned threads = 1;
  bool keep_reports = false;
};

struct McEstimate {
  Count k = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  /// Trials whose solve ran out of budget; excluded from p_hat and the CI.
  std::uint64_t budget_exceeded = 0;
  double p_hat = 0.0;
  Interval ci;
  Count max_pile_max = 0;
  std::map<Count, std::uint64_t> max_pile_histogram;
  std::vector<TrialReport> reports;  // only with keep_reports
};

/// Trials [first, first + count) of the stream for (k, seed). Trial i uses
/// derive_seed(seed, i), so results do not depend on the thread count.
std::vector<TrialReport> run_trials(const GridSpec& g, Count k, std::uint64_t seed,
                                    std::uint64_t first, std::uint64_t count,
                                    const McOptions& options = {});

McEstimate summarize_trials(Count k, std::uint64_t seed, std::vector<TrialReport> reports,
                            bool keep_reports);

McEstimate mc_solvable_prob(const GridSpec& g, Count k, std::uint64_t trials, std::uint64_t seed,
                            const McOptions& options = {});

enum class Side { below, above, undecided };

const char* to_string(Side s);

struct KEstimate {
  Count k = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t budget_exceeded = 0;
  double p_hat = 0.0;
  Interval ci;
  Count max_pile_max = 0;
  bool exact = false;
  Side side = Side::undecided;
};

struct ThresholdEstimate {
  Count k_low = 0;
  Count k_high = 0;
  std::vector<KEstimate> per_k;  // sorted by k
  std::uint64_t seed = 0;
  /// Some k kept a CI containing 1/2 at the trial cap; the bracket is wider.
  bool straddle = false;
  /// k_min was already above 1/2 (and is not 1), so k_low is unverified.
  bool low_open = false;
  /// k_max was not shown to be above 1/2.
  bool high_open = false;
};

struct PhalfOptions {
  std::uint64_t trials_per_k = 1000;
  std::uint64_t trial_cap = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t state_budget = kDefaultStateBudget;
  /// Use exact enumeration when a k has at most this many configurations.
  std::uint64_t exact_limit = 0;
};

/// Brackets min{k : P(solvable) >= 1/2} by bisection on [k_min, k_max]. A k
/// counts as below/above only once its CI excludes 1/2; otherwise its trial
/// count doubles up to the cap.
ThresholdEstimate phalf_bisect(const GridSpec& g, Count k_min, Count k_max,
                               const PhalfOptions& options = {});

/// n^d exp(((d+1)! ln n prod_i ln q_i / 2)^{1/(d+1)} - d ln ln n / (d+1) + gamma).
double theorem1_value(double n, int d, const std::vector<double>& q, double gamma = 0.0);

/// n exp(sqrt(ln q ln n) - ln ln n / 2 + delta).
double theorem2_value(double n, double q, double delta = 0.0);

struct GrahamRow {
  int s = 0;
  double log2_upper = 0.0;  // log2(C^{2^s - 1} b^{2^s})
  double log2_lower = 0.0;  // (1 - 1/n0) 2^s n0
  bool contradiction = false;
};

/// Iterating the product bound from Q_{n0} to Q_{2^s n0}, in log2 space.
std::vector<GrahamRow> graham_table(int n0, double C, double b, int s_max);

}  // namespace pebbling
