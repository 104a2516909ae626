#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pebbling/config.hpp"
#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"

namespace pebbling {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

enum class Verdict { solvable, unsolvable, budget_exceeded };

const char* to_string(Verdict v);

struct SolveResult {
  Verdict verdict = Verdict::unsolvable;
  /// Replayable moves ending with a pebble on the target; present only for
  /// solvable verdicts when a certificate was requested.
  std::optional<std::vector<Move>> certificate;
  std::uint64_t states_explored = 0;
};

/// The weight sum sum_w D(w) / qd(w, v) measured against one threshold.
struct WeightReport {
  Rational weight_sum;
  bool necessary_met = false;  // weight_sum >= 1
  Rational sufficient_threshold;
  bool sufficient_met = false;  // weight_sum > sufficient_threshold
};

Rational weight_sum(const GridSpec& g, const Configuration& c, const Vertex& v);

/// (max_i q_i - 1) prod_i (q_i + 1) / (q_i - 1).
Rational corollary_threshold(const GridSpec& g);

/// sum_{w != v} (max_i q_i - 1) / qd(w, v), the exact greedy threshold for v.
Rational greedy_threshold(const GridSpec& g, const Vertex& v);

/// A failed necessary check proves c is not v-solvable.
WeightReport fractional_necessary_check(const GridSpec& g, const Configuration& c,
                                        const Vertex& v);

/// sufficient_met proves c is v-solvable (grid-independent threshold).
WeightReport weight_sufficient_check(const GridSpec& g, const Configuration& c, const Vertex& v);

/// Same as weight_sufficient_check with the exact greedy threshold for v,
/// which never exceeds the corollary threshold.
WeightReport greedy_sufficient_check(const GridSpec& g, const Configuration& c, const Vertex& v);

/// Moves pebbles toward v until v is occupied or no toward-move exists.
/// An unsolvable verdict only means greedy got stuck.
///
/// Source choice: most pebbles, then smallest linear index. Axis choice:
/// largest remaining coordinate gap, then smallest axis.
SolveResult greedy_solve(const GridSpec& g, const Configuration& c, const Vertex& v);

struct SearchOptions {
  std::uint64_t budget = kDefaultStateBudget;
  bool certificate = true;
};

/// Complete decision by memoized depth-first search over all legal moves.
/// Nodes are resolved in order: target occupied, corollary threshold, greedy
/// threshold (both finished by greedy moves), weight below 1 (dead), memo.
SolveResult is_v_solvable_exact(const GridSpec& g, const Configuration& c, const Vertex& v,
                                SearchOptions options = {});

struct VertexVerdict {
  Vertex target;
  SolveResult result;
};

struct SolvabilityReport {
  Verdict verdict = Verdict::solvable;
  std::optional<Vertex> first_failure;
  /// Targets in index order, up to and including the first failure.
  std::vector<VertexVerdict> per_vertex;
  std::uint64_t states_explored = 0;
};

/// v-solvability for every v, stopping at the first unsolvable or
/// over-budget target. The budget applies to each target separately.
SolvabilityReport is_solvable_exact(const GridSpec& g, const Configuration& c,
                                    SearchOptions options = {});

/// Whether the moves are legal in sequence and leave a pebble on target.
bool replay_reaches(const GridSpec& g, const Configuration& c, const std::vector<Move>& moves,
                    const Vertex& target);

/// Exact path criterion for target index (1-based): D(i) >= 1, or either
/// side's weight sum reaches 1. Only for 1-dimensional grids.
bool path_solvable(const GridSpec& g, const Configuration& c, int target);

/// path_solvable for every target at once, O(n) total. Uses the identity
/// floor((floor(x) + D) / q) = floor((x + D) / q), i.e. the number of whole
/// pebbles one side can deliver to each vertex.
std::vector<bool> path_solvable_all(const GridSpec& g, const Configuration& c);

struct PebblingNumberResult {
  Count value = 0;
  /// An unsolvable configuration with value - 1 pebbles.
  Configuration witness;
  std::uint64_t configurations_checked = 0;
};

/// Smallest k with every configuration of k pebbles solvable, by brute
/// force. Throws BudgetExceeded if any single solve runs out of budget.
PebblingNumberResult pebbling_number(const GridSpec& g, SearchOptions options = {});

}  // namespace pebbling
