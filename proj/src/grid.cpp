#include "pebbling/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace pebbling {

namespace {

// Configurations are dense, so grids beyond this are rejected outright.
constexpr std::size_t kMaxVertices = std::size_t{1} << 32;

}  // namespace

GridSpec::GridSpec(std::vector<int> sides, std::vector<int> costs)
    : sides_(std::move(sides)), costs_(std::move(costs)) {
  if (sides_.empty()) throw DomainError("grid needs at least one axis");
  if (sides_.size() != costs_.size())
    throw DomainError("shape has " + std::to_string(sides_.size()) + " axes but q has " +
                      std::to_string(costs_.size()));
  for (int n : sides_)
    if (n < 1) throw DomainError("every side length must be >= 1");
  for (int q : costs_)
    if (q < 2) throw DomainError("every pebbling cost must be >= 2");

  if (vertex_count_exact() > BigInt(static_cast<unsigned long>(kMaxVertices)))
    throw DomainError("grid has too many vertices for a dense configuration");

  strides_.assign(sides_.size(), 1);
  for (std::size_t i = sides_.size(); i-- > 1;)
    strides_[i - 1] = strides_[i] * static_cast<std::size_t>(sides_[i]);
  vertex_count_ = strides_[0] * static_cast<std::size_t>(sides_[0]);
  max_cost_ = *std::max_element(costs_.begin(), costs_.end());
}

GridSpec GridSpec::cube(int n, int d, int q) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  return GridSpec(std::vector<int>(static_cast<std::size_t>(d), n),
                  std::vector<int>(static_cast<std::size_t>(d), q));
}

BigInt GridSpec::vertex_count_exact() const {
  BigInt n = 1;
  for (int s : sides_) n *= s;
  return n;
}

bool GridSpec::is_cubic() const {
  return std::all_of(sides_.begin(), sides_.end(), [&](int n) { return n == sides_[0]; });
}

bool GridSpec::contains(const Vertex& v) const {
  if (v.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (v[i] < 1 || v[i] > sides_[i]) return false;
  return true;
}

void GridSpec::require(const Vertex& v) const {
  if (v.dim() != dim())
    throw DomainError("vertex has " + std::to_string(v.dim()) + " coordinates, grid has " +
                      std::to_string(dim()) + " axes");
  for (std::size_t i = 0; i < dim(); ++i)
    if (v[i] < 1 || v[i] > sides_[i])
      throw DomainError("vertex coordinate " + std::to_string(v[i]) + " out of bounds on axis " +
                        std::to_string(i + 1));
}

std::size_t GridSpec::index_of(const Vertex& v) const {
  require(v);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dim(); ++i)
    idx += static_cast<std::size_t>(v[i] - 1) * strides_[i];
  return idx;
}

Vertex GridSpec::vertex_at(std::size_t index) const {
  if (index >= vertex_count_) throw DomainError("vertex index out of range");
  Vertex v;
  v.coords.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) v.coords[i] = coord(index, i);
  return v;
}

std::optional<std::size_t> GridSpec::neighbor(std::size_t index, std::size_t axis,
                                              int direction) const {
  const int c = coord(index, axis) + direction;
  if (c < 1 || c > sides_[axis]) return std::nullopt;
  return direction > 0 ? index + strides_[axis] : index - strides_[axis];
}

BigInt pebbling_distance(const GridSpec& g, const Vertex& a, const Vertex& b) {
  g.require(a);
  g.require(b);
  BigInt out = 1;
  for (std::size_t i = 0; i < g.dim(); ++i)
    out *= int_pow(static_cast<unsigned long>(g.cost(i)),
                   static_cast<unsigned long>(std::abs(a[i] - b[i])));
  return out;
}

std::vector<int> vector_distance(const GridSpec& g, const Vertex& a, const Vertex& b) {
  g.require(a);
  g.require(b);
  std::vector<int> out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) out[i] = std::abs(a[i] - b[i]);
  return out;
}

double boundary_band(double C) { return std::log2(C); }

CentralityClass central_class(const GridSpec& g, const Vertex& v, double C) {
  if (!(C > 1.0)) throw DomainError("centrality needs C > 1");
  if (!g.is_cubic()) throw DomainError("centrality is only defined on [n]^d");
  g.require(v);
  const double band = boundary_band(C);
  const double n = g.side(0);
  CentralityClass out{0, C};
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (band < v[i] && v[i] < n - band) ++out.t;
  return out;
}

namespace {

void collect_lambda(const GridSpec& g, const Vertex& v, const std::vector<int>& lo,
                    const std::vector<int>& hi, std::size_t axis, const BigInt& remaining,
                    Vertex& current, std::vector<Vertex>& out) {
  if (axis == g.dim()) {
    out.push_back(current);
    return;
  }
  for (int w = lo[axis]; w <= hi[axis]; ++w) {
    const BigInt step = int_pow(static_cast<unsigned long>(g.cost(axis)),
                                static_cast<unsigned long>(std::abs(w - v[axis])));
    if (step > remaining) continue;
    current.coords[axis] = w;
    // x * y <= R  iff  y <= floor(R / x) for positive integers
    collect_lambda(g, v, lo, hi, axis + 1, BigInt(remaining / step), current, out);
  }
}

}  // namespace

std::vector<Vertex> lambda_set(const GridSpec& g, const Vertex& v, double C) {
  if (!(C >= 1.0)) throw DomainError("lambda set needs C >= 1");
  g.require(v);
  const double band = boundary_band(C);
  std::vector<int> lo(g.dim()), hi(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    lo[i] = 1;
    hi[i] = g.side(i);
    if (v[i] <= band) lo[i] = v[i];
    if (v[i] >= g.side(i) - band) hi[i] = v[i];
  }
  if (std::isinf(C)) throw DomainError("lambda set needs finite C");
  const BigInt cap(std::floor(C));

  // axis 0 outermost with increasing coordinates, so output is row-major
  std::vector<Vertex> out;
  Vertex current = v;
  collect_lambda(g, v, lo, hi, 0, cap, current, out);
  return out;
}

double lambda_size_estimate(const GridSpec& g, int t, double C) {
  if (!(C > 1.0)) throw DomainError("lambda size estimate needs C > 1");
  const auto d = static_cast<int>(g.dim());
  double denom = std::tgamma(d + 1.0);
  for (int q : g.costs()) denom *= std::log(static_cast<double>(q));
  return std::ldexp(std::pow(std::log(C), d), t) / denom;
}

}  // namespace pebbling
