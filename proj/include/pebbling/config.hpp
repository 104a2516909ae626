#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"

namespace pebbling {

/// Pebble counts on every vertex of a grid, indexed by linear vertex index.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t vertex_count) : counts_(vertex_count, 0) {}
  explicit Configuration(std::vector<Count> counts);

  std::size_t size() const { return counts_.size(); }
  Count total() const { return total_; }
  Count operator[](std::size_t i) const { return counts_[i]; }
  std::span<const Count> counts() const { return counts_; }
  Count max_pile() const;

  /// Adjusts one vertex; throws DomainError if the count would go negative.
  void add(std::size_t i, Count delta);

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

/// A pebbling step: q_axis pebbles leave `from`, one arrives at the
/// neighbour in `direction` along `axis` (1-based).
struct Move {
  Vertex from;
  int axis = 1;
  int direction = +1;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Checks that c has one entry per vertex of g.
void require_shape(const GridSpec& g, const Configuration& c);

/// C(N + k - 1, k): the number of configurations of k pebbles.
BigInt config_count(const GridSpec& g, Count k);

/// Derives an independent stream seed, so per-trial streams do not depend
/// on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform multiset of k pebbles on `vertex_count` vertices (stars and bars:
/// a uniform k-subset of N + k - 1 slots; the remaining slots are bars).
Configuration sample_uniform(std::size_t vertex_count, Count k, std::mt19937_64& rng);
Configuration sample_uniform(const GridSpec& g, Count k, std::uint64_t seed);

/// Visits every configuration of k pebbles on `vertex_count` vertices in
/// lexicographically decreasing order. The visitor returns false to stop.
/// Returns false iff the visitor stopped the walk.
bool for_each_configuration(std::size_t vertex_count, Count k,
                            const std::function<bool(const Configuration&)>& visit);

struct Pin {
  Vertex vertex;
  Count pebbles = 0;
};

/// Exact probability, under the uniform measure on configurations of k
/// pebbles, that each pinned vertex carries exactly its pinned count.
Rational exact_event_probability(const GridSpec& g, Count k, std::span<const Pin> pins);

/// lambda^{-t} e^{-m/lambda}.
double prob_bound_approx(double lambda, int t, double m);

/// All legal moves, ordered by source index, then axis, then +1 before -1.
std::vector<Move> legal_moves(const GridSpec& g, const Configuration& c);

Configuration apply_move(const GridSpec& g, const Configuration& c, const Move& m);

}  // namespace pebbling
