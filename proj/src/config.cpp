#include "pebbling/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace pebbling {

Configuration::Configuration(std::vector<Count> counts) : counts_(std::move(counts)) {
  for (Count c : counts_) {
    if (c < 0) throw DomainError("pebble counts must be nonnegative");
    total_ += c;
  }
}

Count Configuration::max_pile() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

void Configuration::add(std::size_t i, Count delta) {
  if (counts_.at(i) + delta < 0) throw DomainError("pebble count would become negative");
  counts_[i] += delta;
  total_ += delta;
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  // FNV-1a over the counts
  std::uint64_t h = 1469598103934665603ULL;
  for (Count x : c.counts()) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void require_shape(const GridSpec& g, const Configuration& c) {
  if (c.size() != g.vertex_count())
    throw DomainError("configuration has " + std::to_string(c.size()) + " counts, grid has " +
                      std::to_string(g.vertex_count()) + " vertices");
}

BigInt config_count(const GridSpec& g, Count k) {
  if (k < 0) throw DomainError("pebble total must be nonnegative");
  return multichoose(static_cast<long>(g.vertex_count()), k);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ (stream * 0xd1b54a32d192ed03ULL + 1));
}

Configuration sample_uniform(std::size_t vertex_count, Count k, std::mt19937_64& rng) {
  if (vertex_count == 0) throw DomainError("cannot place pebbles on an empty grid");
  if (k < 0) throw DomainError("pebble total must be nonnegative");
  Configuration out(vertex_count);
  // Selection sampling over the N + k - 1 slots: slot i is a star with
  // probability (stars still needed) / (slots left).
  const auto slots = static_cast<std::uint64_t>(vertex_count - 1) + static_cast<std::uint64_t>(k);
  std::uint64_t need = static_cast<std::uint64_t>(k);
  std::size_t vertex = 0;
  for (std::uint64_t i = 0; i < slots && need > 0; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(0, slots - i - 1);
    if (pick(rng) < need) {
      out.add(vertex, 1);
      --need;
    } else {
      ++vertex;
    }
  }
  return out;
}

Configuration sample_uniform(const GridSpec& g, Count k, std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0));
  return sample_uniform(g.vertex_count(), k, rng);
}

bool for_each_configuration(std::size_t vertex_count, Count k,
                            const std::function<bool(const Configuration&)>& visit) {
  if (vertex_count == 0) return true;
  if (k < 0) throw DomainError("pebble total must be nonnegative");
  std::vector<Count> parts(vertex_count, 0);
  parts[0] = k;
  while (true) {
    if (!visit(Configuration(parts))) return false;
    // next composition: find the rightmost nonzero part left of the last slot
    std::size_t i = vertex_count - 1;
    const Count tail = parts[i];
    parts[i] = 0;
    std::size_t j = i;
    while (j > 0 && parts[j - 1] == 0) --j;
    if (j == 0) return true;
    --parts[j - 1];
    parts[j] = tail + 1;
  }
}

Rational exact_event_probability(const GridSpec& g, Count k, std::span<const Pin> pins) {
  if (k < 0) throw DomainError("pebble total must be nonnegative");
  std::set<std::size_t> seen;
  Count pinned = 0;
  for (const Pin& p : pins) {
    if (!seen.insert(g.index_of(p.vertex)).second) throw DomainError("duplicate pinned vertex");
    if (p.pebbles < 0) throw DomainError("pinned counts must be nonnegative");
    pinned += p.pebbles;
  }
  if (pinned > k) throw DomainError("pinned pebbles exceed the total");

  const auto n = static_cast<long>(g.vertex_count());
  const auto t = static_cast<long>(pins.size());
  // C(N-1-t+k-m, N-1-t) / C(N-1+k, N-1); the numerator is written as a
  // multiset count so that t = N (everything pinned) is covered as well.
  Rational out(multichoose(n - t, k - pinned), multichoose(n, k));
  out.canonicalize();
  return out;
}

double prob_bound_approx(double lambda, int t, double m) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  return std::pow(lambda, -t) * std::exp(-m / lambda);
}

std::vector<Move> legal_moves(const GridSpec& g, const Configuration& c) {
  require_shape(g, c);
  std::vector<Move> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 2) continue;
    for (std::size_t axis = 0; axis < g.dim(); ++axis) {
      if (c[i] < g.cost(axis)) continue;
      for (int dir : {+1, -1})
        if (g.neighbor(i, axis, dir))
          out.push_back(Move{g.vertex_at(i), static_cast<int>(axis) + 1, dir});
    }
  }
  return out;
}

Configuration apply_move(const GridSpec& g, const Configuration& c, const Move& m) {
  require_shape(g, c);
  if (m.axis < 1 || static_cast<std::size_t>(m.axis) > g.dim())
    throw DomainError("move axis out of range");
  if (m.direction != 1 && m.direction != -1) throw DomainError("move direction must be +1 or -1");
  const std::size_t from = g.index_of(m.from);
  const auto axis = static_cast<std::size_t>(m.axis - 1);
  const auto to = g.neighbor(from, axis, m.direction);
  if (!to) throw DomainError("move leaves the grid");
  if (c[from] < g.cost(axis)) throw DomainError("not enough pebbles for this move");
  Configuration out = c;
  out.add(from, -g.cost(axis));
  out.add(*to, 1);
  return out;
}

}  // namespace pebbling
