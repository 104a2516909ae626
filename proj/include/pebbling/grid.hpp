#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pebbling/numeric.hpp"

namespace pebbling {

/// A vertex of a grid, 1-based coordinates.
struct Vertex {
  std::vector<int> coords;

  std::size_t dim() const { return coords.size(); }
  int operator[](std::size_t axis) const { return coords[axis]; }

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// The grid P_{n1} x ... x P_{nd} together with its per-axis pebbling costs.
///
/// Vertices are numbered row-major: the last axis varies fastest. Moving one
/// step along axis i consumes costs()[i] pebbles at the source.
class GridSpec {
 public:
  GridSpec(std::vector<int> sides, std::vector<int> costs);

  /// [n]^d with a uniform cost q on every axis.
  static GridSpec cube(int n, int d, int q);
  /// The path P_n.
  static GridSpec path(int n, int q) { return cube(n, 1, q); }

  std::size_t dim() const { return sides_.size(); }
  std::span<const int> sides() const { return sides_; }
  std::span<const int> costs() const { return costs_; }
  int side(std::size_t axis) const { return sides_[axis]; }
  int cost(std::size_t axis) const { return costs_[axis]; }
  int max_cost() const { return max_cost_; }

  std::size_t vertex_count() const { return vertex_count_; }
  BigInt vertex_count_exact() const;

  bool is_cubic() const;
  bool contains(const Vertex& v) const;

  /// Throws DomainError unless v lies in the grid.
  void require(const Vertex& v) const;

  std::size_t index_of(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;

  /// Coordinate (1-based) of a linear index along one axis.
  int coord(std::size_t index, std::size_t axis) const {
    return static_cast<int>((index / strides_[axis]) % static_cast<std::size_t>(sides_[axis])) + 1;
  }

  /// Linear index of the neighbour one step along axis (0-based) in the
  /// given direction (+1/-1), if it exists.
  std::optional<std::size_t> neighbor(std::size_t index, std::size_t axis, int direction) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.sides_ == b.sides_ && a.costs_ == b.costs_;
  }

 private:
  std::vector<int> sides_;
  std::vector<int> costs_;
  std::vector<std::size_t> strides_;
  std::size_t vertex_count_ = 1;
  int max_cost_ = 0;
};

/// The (C,t)-centrality class of a vertex of [n]^d.
struct CentralityClass {
  int t = 0;
  double threshold_C = 0.0;
};

/// prod_i q_i^{|a_i - b_i|}, the number of pebbles needed at one vertex to
/// deliver a single pebble to the other.
BigInt pebbling_distance(const GridSpec& g, const Vertex& a, const Vertex& b);

std::vector<int> vector_distance(const GridSpec& g, const Vertex& a, const Vertex& b);

/// Width of the boundary band, log C / log 2.
double boundary_band(double C);

/// Number of coordinates strictly inside (log2 C, n - log2 C). Only defined
/// on cubic grids.
CentralityClass central_class(const GridSpec& g, const Vertex& v, double C);

/// Vertices w with qd(w, v) <= C, restricted to w_i >= v_i when v_i sits in
/// the low boundary band and w_i <= v_i when it sits in the high one.
/// Sorted by linear index.
std::vector<Vertex> lambda_set(const GridSpec& g, const Vertex& v, double C);

/// Leading term 2^t (log C)^d / (d! prod_i log q_i) of |lambda_set|.
double lambda_size_estimate(const GridSpec& g, int t, double C);

}  // namespace pebbling
