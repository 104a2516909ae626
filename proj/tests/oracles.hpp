#pragma once

// Brute-force reference implementations. None of these share code paths with
// the library beyond GridSpec indexing.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "pebbling/config.hpp"
#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"

namespace oracle {

using pebbling::BigInt;
using pebbling::Configuration;
using pebbling::GridSpec;
using pebbling::Rational;
using pebbling::Vertex;

// Every state reachable from c, explored without pruning.
inline bool v_solvable(const GridSpec& g, const Configuration& c, const Vertex& v) {
  const std::size_t target = g.index_of(v);
  std::vector<std::int64_t> start(c.counts().begin(), c.counts().end());
  std::set<std::vector<std::int64_t>> seen{start};
  std::vector<std::vector<std::int64_t>> stack{start};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (cur[target] > 0) return true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t axis = 0; axis < g.dim(); ++axis) {
        if (cur[i] < g.cost(axis)) continue;
        for (int dir : {-1, +1}) {
          auto nb = g.neighbor(i, axis, dir);
          if (!nb) continue;
          auto next = cur;
          next[i] -= g.cost(axis);
          next[*nb] += 1;
          if (seen.insert(next).second) stack.push_back(std::move(next));
        }
      }
    }
  }
  return false;
}

inline bool solvable(const GridSpec& g, const Configuration& c) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (!v_solvable(g, c, g.vertex_at(i))) return false;
  return true;
}

inline void compositions(std::size_t n, std::int64_t k,
                         const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> cur(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == n) {
      cur[i] = left;
      f(cur);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n == 0) {
    if (k == 0) f(cur);
    return;
  }
  rec(0, k);
}

inline std::vector<Configuration> all_configurations(std::size_t n, std::int64_t k) {
  std::vector<Configuration> out;
  compositions(n, k, [&](const std::vector<std::int64_t>& x) { out.emplace_back(x); });
  return out;
}

inline std::int64_t pebbling_number(const GridSpec& g) {
  for (std::int64_t k = 1;; ++k) {
    bool all = true;
    for (const auto& c : all_configurations(g.vertex_count(), k))
      if (!solvable(g, c)) {
        all = false;
        break;
      }
    if (all) return k;
  }
}

// Binary partitions: b(0) = 1, b(2m+1) = b(2m), b(2m) = b(2m-1) + b(m).
inline std::vector<BigInt> binary_partitions(std::size_t n_max) {
  std::vector<BigInt> b(n_max + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) b[n] = (n % 2) ? b[n - 1] : b[n - 1] + b[n / 2];
  return b;
}

// Partitions of n into powers of q, largest part first.
inline std::uint64_t power_partitions(std::uint64_t n, std::uint64_t q, std::uint64_t max_part) {
  if (n == 0) return 1;
  if (max_part == 1) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t used = 0; used * max_part <= n; ++used)
    total += power_partitions(n - used * max_part, q, max_part / q);
  return total;
}

// Integer points with sum x_i / a_i < 1, by scanning the box x_i < a_i.
inline BigInt simplex_box_count(const std::vector<Rational>& a) {
  std::vector<std::int64_t> limit;
  for (const auto& ai : a) {
    BigInt fl = ai.get_num() / ai.get_den();
    limit.push_back(fl.get_si());
  }
  BigInt count = 0;
  std::vector<std::int64_t> x(a.size(), 0);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational used) {
    if (i == a.size()) {
      if (used < 1) ++count;
      return;
    }
    for (std::int64_t v = 0; v <= limit[i]; ++v) {
      Rational next = used + Rational(v) / a[i];
      if (next >= 1) break;
      rec(i + 1, next);
    }
  };
  rec(0, Rational(0));
  return count;
}

// Same count by meet in the middle: split the coordinates in two halves,
// list every partial weight below 1 per half, then count pairs with a
// two-pointer sweep over the sorted lists.
inline BigInt simplex_mitm_count(const std::vector<Rational>& a) {
  const std::size_t half = a.size() / 2;
  auto partials = [&](std::size_t lo, std::size_t hi) {
    std::vector<Rational> out;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational used) {
      if (i == hi) {
        out.push_back(used);
        return;
      }
      for (std::int64_t v = 0;; ++v) {
        Rational next = used + Rational(v) / a[i];
        if (next >= 1) break;
        rec(i + 1, next);
      }
    };
    rec(lo, Rational(0));
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto left = partials(0, half);
  const auto right = partials(half, a.size());
  BigInt count = 0;
  std::size_t j = right.size();
  for (const Rational& l : left) {
    while (j > 0 && l + right[j - 1] >= 1) --j;
    count += static_cast<unsigned long>(j);
  }
  return count;
}

}  // namespace oracle
