#include "pebbling/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace pebbling {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::solvable:
      return "solvable";
    case Verdict::unsolvable:
      return "unsolvable";
    case Verdict::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

namespace {

struct IndexedMove {
  std::size_t from;
  std::size_t axis;
  int direction;
};

// Weights scaled to integers: weight[w] = scale / qd(w, target), where scale
// is the largest pebbling distance from the target.
struct ScaledWeights {
  std::vector<BigInt> weight;
  BigInt scale;
  BigInt greedy_bound;  // scaled greedy threshold
  BigInt corollary_num;
  BigInt corollary_den;
};

ScaledWeights scaled_weights(const GridSpec& g, std::size_t target) {
  const std::size_t d = g.dim();
  std::vector<int> reach(d);
  for (std::size_t i = 0; i < d; ++i) {
    const int x = g.coord(target, i);
    reach[i] = std::max(x - 1, g.side(i) - x);
  }
  ScaledWeights out;
  out.scale = 1;
  for (std::size_t i = 0; i < d; ++i)
    out.scale *= int_pow(static_cast<unsigned long>(g.cost(i)), static_cast<unsigned long>(reach[i]));

  out.weight.resize(g.vertex_count());
  BigInt others = 0;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    BigInt x = 1;
    for (std::size_t i = 0; i < d; ++i)
      x *= int_pow(static_cast<unsigned long>(g.cost(i)),
                   static_cast<unsigned long>(reach[i] - std::abs(g.coord(w, i) - g.coord(target, i))));
    if (w != target) others += x;
    out.weight[w] = std::move(x);
  }
  out.greedy_bound = others * (g.max_cost() - 1);

  const Rational threshold = corollary_threshold(g);
  out.corollary_num = threshold.get_num() * out.scale;
  out.corollary_den = threshold.get_den();
  return out;
}

// Same weights in machine integers when every quantity the search touches
// stays well inside int64.
struct FastWeights {
  std::vector<std::int64_t> weight;
  std::int64_t scale;
  std::int64_t greedy_bound;
  std::int64_t corollary_num;
  std::int64_t corollary_den;
};

std::optional<FastWeights> fast_weights(const ScaledWeights& s, Count total) {
  const BigInt limit = BigInt(1) << 62;
  const BigInt worst = s.scale * std::max<Count>(total, 1) * s.corollary_den;
  if (worst >= limit || s.corollary_num >= limit || s.greedy_bound >= limit) return std::nullopt;
  FastWeights f;
  f.weight.reserve(s.weight.size());
  for (const BigInt& w : s.weight) f.weight.push_back(w.get_si());
  f.scale = s.scale.get_si();
  f.greedy_bound = s.greedy_bound.get_si();
  f.corollary_num = s.corollary_num.get_si();
  f.corollary_den = s.corollary_den.get_si();
  return f;
}

template <typename W>
struct WeightView {
  const std::vector<W>& weight;
  const W& scale;
  const W& greedy_bound;
  const W& corollary_num;
  const W& corollary_den;
};

bool is_toward(const GridSpec& g, std::size_t from, std::size_t axis, int direction,
               std::size_t target) {
  const int gap = g.coord(target, axis) - g.coord(from, axis);
  return (gap > 0 && direction > 0) || (gap < 0 && direction < 0);
}

// Greedy toward-moves on raw counts. Returns true once the target is occupied.
bool greedy_run(const GridSpec& g, std::vector<Count>& counts, std::size_t target,
                std::vector<IndexedMove>* moves) {
  const std::size_t d = g.dim();
  while (counts[target] < 1) {
    std::optional<std::size_t> best;
    for (std::size_t w = 0; w < counts.size(); ++w) {
      if (w == target || counts[w] < 2) continue;
      if (best && counts[w] <= counts[*best]) continue;
      for (std::size_t i = 0; i < d; ++i)
        if (g.coord(w, i) != g.coord(target, i) && counts[w] >= g.cost(i)) {
          best = w;
          break;
        }
    }
    if (!best) return false;
    const std::size_t w = *best;
    std::size_t axis = d;
    int widest = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const int gap = std::abs(g.coord(w, i) - g.coord(target, i));
      if (gap > widest && counts[w] >= g.cost(i)) {
        widest = gap;
        axis = i;
      }
    }
    const int dir = g.coord(target, axis) > g.coord(w, axis) ? +1 : -1;
    const std::size_t to = *g.neighbor(w, axis, dir);
    counts[w] -= g.cost(axis);
    counts[to] += 1;
    if (moves) moves->push_back({w, axis, dir});
  }
  return true;
}

std::string state_key(const std::vector<Count>& counts, bool wide) {
  std::string key;
  if (!wide) {
    key.resize(counts.size() * 2);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      key[2 * i] = static_cast<char>(counts[i] & 0xff);
      key[2 * i + 1] = static_cast<char>((counts[i] >> 8) & 0xff);
    }
  } else {
    key.resize(counts.size() * sizeof(Count));
    std::memcpy(key.data(), counts.data(), key.size());
  }
  return key;
}

template <typename W>
class ExactSearch {
 public:
  ExactSearch(const GridSpec& g, std::size_t target, WeightView<W> w, const SearchOptions& opt,
              bool wide_keys)
      : g_(g), target_(target), w_(w), opt_(opt), wide_(wide_keys) {}

  bool run(std::vector<Count>& counts, const W& sum) {
    if (counts[target_] >= 1) return true;
    if (sum * w_.corollary_den > w_.corollary_num || sum > w_.greedy_bound) {
      if (opt_.certificate) {
        std::vector<Count> copy = counts;
        if (!greedy_run(g_, copy, target_, &path_))
          throw std::logic_error("greedy failed above the sufficient threshold");
      }
      return true;
    }
    if (sum < w_.scale) return false;

    std::string key = state_key(counts, wide_);
    if (dead_.contains(key)) return false;
    if (++states_ > opt_.budget) throw BudgetExceeded("state budget exhausted");

    // toward-moves keep the weight sum, so try them first
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t from = 0; from < counts.size(); ++from) {
        if (counts[from] < 2) continue;
        for (std::size_t axis = 0; axis < g_.dim(); ++axis) {
          const Count q = g_.cost(axis);
          if (counts[from] < q) continue;
          for (int dir : {+1, -1}) {
            const auto to = g_.neighbor(from, axis, dir);
            if (!to) continue;
            if (is_toward(g_, from, axis, dir, target_) != (pass == 0)) continue;
            W next = sum - w_.weight[from] * q + w_.weight[*to];
            if (next < w_.scale) continue;
            counts[from] -= q;
            counts[*to] += 1;
            if (opt_.certificate) path_.push_back({from, axis, dir});
            const bool ok = run(counts, next);
            counts[from] += q;
            counts[*to] -= 1;
            if (ok) return true;
            if (opt_.certificate) path_.pop_back();
          }
        }
      }
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::uint64_t states() const { return states_; }
  const std::vector<IndexedMove>& path() const { return path_; }

 private:
  const GridSpec& g_;
  std::size_t target_;
  WeightView<W> w_;
  const SearchOptions& opt_;
  bool wide_;
  std::unordered_set<std::string> dead_;
  std::vector<IndexedMove> path_;
  std::uint64_t states_ = 0;
};

std::vector<Move> to_moves(const GridSpec& g, const std::vector<IndexedMove>& moves) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (const auto& m : moves)
    out.push_back(Move{g.vertex_at(m.from), static_cast<int>(m.axis) + 1, m.direction});
  return out;
}

template <typename W>
SolveResult run_search(const GridSpec& g, const Configuration& c, std::size_t target,
                       WeightView<W> view, const W& start, const SearchOptions& options) {
  ExactSearch<W> search(g, target, view, options, c.total() > 0xffff);
  std::vector<Count> counts(c.counts().begin(), c.counts().end());
  SolveResult out;
  try {
    const bool ok = search.run(counts, start);
    out.verdict = ok ? Verdict::solvable : Verdict::unsolvable;
    if (ok && options.certificate) out.certificate = to_moves(g, search.path());
  } catch (const BudgetExceeded&) {
    out.verdict = Verdict::budget_exceeded;
  }
  out.states_explored = search.states();
  return out;
}

WeightReport make_report(const GridSpec& g, const Configuration& c, const Vertex& v,
                         Rational threshold) {
  WeightReport r;
  r.weight_sum = weight_sum(g, c, v);
  r.necessary_met = r.weight_sum >= 1;
  r.sufficient_threshold = std::move(threshold);
  r.sufficient_met = r.weight_sum > r.sufficient_threshold;
  return r;
}

}  // namespace

Rational weight_sum(const GridSpec& g, const Configuration& c, const Vertex& v) {
  require_shape(g, c);
  const ScaledWeights s = scaled_weights(g, g.index_of(v));
  BigInt sum = 0;
  for (std::size_t w = 0; w < c.size(); ++w)
    if (c[w] != 0) sum += s.weight[w] * c[w];
  Rational out(sum, s.scale);
  out.canonicalize();
  return out;
}

Rational corollary_threshold(const GridSpec& g) {
  Rational out = g.max_cost() - 1;
  for (int q : g.costs()) out *= Rational(q + 1, q - 1);
  out.canonicalize();
  return out;
}

Rational greedy_threshold(const GridSpec& g, const Vertex& v) {
  const ScaledWeights s = scaled_weights(g, g.index_of(v));
  Rational out(s.greedy_bound, s.scale);
  out.canonicalize();
  return out;
}

WeightReport fractional_necessary_check(const GridSpec& g, const Configuration& c,
                                        const Vertex& v) {
  return make_report(g, c, v, corollary_threshold(g));
}

WeightReport weight_sufficient_check(const GridSpec& g, const Configuration& c, const Vertex& v) {
  return make_report(g, c, v, corollary_threshold(g));
}

WeightReport greedy_sufficient_check(const GridSpec& g, const Configuration& c, const Vertex& v) {
  return make_report(g, c, v, greedy_threshold(g, v));
}

SolveResult greedy_solve(const GridSpec& g, const Configuration& c, const Vertex& v) {
  require_shape(g, c);
  const std::size_t target = g.index_of(v);
  std::vector<Count> counts(c.counts().begin(), c.counts().end());
  std::vector<IndexedMove> moves;
  SolveResult out;
  const bool ok = greedy_run(g, counts, target, &moves);
  out.states_explored = moves.size();
  out.verdict = ok ? Verdict::solvable : Verdict::unsolvable;
  if (ok) out.certificate = to_moves(g, moves);
  return out;
}

SolveResult is_v_solvable_exact(const GridSpec& g, const Configuration& c, const Vertex& v,
                                SearchOptions options) {
  require_shape(g, c);
  if (options.budget == 0) throw DomainError("state budget must be positive");
  const std::size_t target = g.index_of(v);
  const ScaledWeights s = scaled_weights(g, target);

  if (auto f = fast_weights(s, c.total())) {
    std::int64_t start = 0;
    for (std::size_t w = 0; w < c.size(); ++w) start += f->weight[w] * c[w];
    WeightView<std::int64_t> view{f->weight, f->scale, f->greedy_bound, f->corollary_num,
                                  f->corollary_den};
    return run_search(g, c, target, view, start, options);
  }
  BigInt start = 0;
  for (std::size_t w = 0; w < c.size(); ++w)
    if (c[w] != 0) start += s.weight[w] * c[w];
  WeightView<BigInt> view{s.weight, s.scale, s.greedy_bound, s.corollary_num, s.corollary_den};
  return run_search(g, c, target, view, start, options);
}

SolvabilityReport is_solvable_exact(const GridSpec& g, const Configuration& c,
                                    SearchOptions options) {
  require_shape(g, c);
  SolvabilityReport out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    Vertex v = g.vertex_at(i);
    SolveResult r = is_v_solvable_exact(g, c, v, options);
    out.states_explored += r.states_explored;
    const Verdict verdict = r.verdict;
    out.per_vertex.push_back({v, std::move(r)});
    if (verdict != Verdict::solvable) {
      out.verdict = verdict;
      out.first_failure = std::move(v);
      break;
    }
  }
  return out;
}

bool replay_reaches(const GridSpec& g, const Configuration& c, const std::vector<Move>& moves,
                    const Vertex& target) {
  Configuration cur = c;
  try {
    for (const Move& m : moves) cur = apply_move(g, cur, m);
  } catch (const DomainError&) {
    return false;
  }
  return cur[g.index_of(target)] >= 1;
}

bool path_solvable(const GridSpec& g, const Configuration& c, int target) {
  if (g.dim() != 1) throw DomainError("path criterion needs a 1-dimensional grid");
  require_shape(g, c);
  const int n = g.side(0);
  if (target < 1 || target > n) throw DomainError("target out of bounds");
  const auto q = static_cast<unsigned long>(g.cost(0));
  auto at = [&](int j) { return c[static_cast<std::size_t>(j - 1)]; };
  if (at(target) >= 1) return true;

  // sum_{j>i} D(j) / q^{j-i} >= 1, scaled by q^{n-i}
  BigInt right = 0;
  for (int j = target + 1; j <= n; ++j)
    right += int_pow(q, static_cast<unsigned long>(n - j)) * at(j);
  if (right >= int_pow(q, static_cast<unsigned long>(n - target))) return true;

  // sum_{j<i} D(j) / q^{i-j} >= 1, scaled by q^{i-1}
  BigInt left = 0;
  for (int j = 1; j < target; ++j) left += int_pow(q, static_cast<unsigned long>(j - 1)) * at(j);
  return left >= int_pow(q, static_cast<unsigned long>(target - 1));
}

std::vector<bool> path_solvable_all(const GridSpec& g, const Configuration& c) {
  if (g.dim() != 1) throw DomainError("path criterion needs a 1-dimensional grid");
  require_shape(g, c);
  const std::size_t n = c.size();
  const Count q = g.cost(0);
  std::vector<bool> out(n, false);
  std::vector<Count> from_right(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) from_right[i] = (from_right[i + 1] + c[i + 1]) / q;
  Count from_left = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) from_left = (from_left + c[i - 1]) / q;
    out[i] = c[i] >= 1 || from_left >= 1 || from_right[i] >= 1;
  }
  return out;
}

PebblingNumberResult pebbling_number(const GridSpec& g, SearchOptions options) {
  options.certificate = false;
  PebblingNumberResult out;
  const std::size_t n = g.vertex_count();

  auto all_solvable = [&](Count k, Configuration& witness) {
    bool ok = true;
    for_each_configuration(n, k, [&](const Configuration& c) {
      ++out.configurations_checked;
      const SolvabilityReport r = is_solvable_exact(g, c, options);
      if (r.verdict == Verdict::budget_exceeded)
        throw BudgetExceeded("state budget exhausted at " + std::to_string(k) + " pebbles");
      if (r.verdict == Verdict::unsolvable) {
        witness = c;
        ok = false;
      }
      return ok;
    });
    return ok;
  };

  // solvability is monotone in k: double, then bisect
  Count lo = 0;
  Configuration lo_witness(n);
  Count hi = 1;
  Configuration scratch;
  while (!all_solvable(hi, scratch)) {
    lo = hi;
    lo_witness = scratch;
    if (hi > std::numeric_limits<Count>::max() / 2) throw BudgetExceeded("pebble total overflow");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const Count mid = lo + (hi - lo) / 2;
    if (all_solvable(mid, scratch)) {
      hi = mid;
    } else {
      lo = mid;
      lo_witness = scratch;
    }
  }
  out.value = hi;
  out.witness = lo_witness;
  return out;
}

}  // namespace pebbling
