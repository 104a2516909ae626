#include "pebbling/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

namespace pebbling {

Interval wilson_interval(std::uint64_t successes, std::uint64_t n, double z) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double centre = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

ExactProbability exact_solvable_prob(const GridSpec& g, Count k, std::uint64_t max_configurations,
                                     std::uint64_t state_budget) {
  const BigInt total = config_count(g, k);
  if (total > BigInt(static_cast<unsigned long>(max_configurations)))
    throw BudgetExceeded(total.get_str() + " configurations exceed the enumeration budget");
  ExactProbability out;
  const SearchOptions opts{state_budget, false};
  for_each_configuration(g.vertex_count(), k, [&](const Configuration& c) {
    ++out.total;
    const SolvabilityReport r = is_solvable_exact(g, c, opts);
    if (r.verdict == Verdict::budget_exceeded)
      throw BudgetExceeded("state budget exhausted during enumeration");
    if (r.verdict == Verdict::solvable) ++out.solvable;
    return true;
  });
  out.probability = Rational(BigInt(static_cast<unsigned long>(out.solvable)),
                             BigInt(static_cast<unsigned long>(out.total)));
  out.probability.canonicalize();
  return out;
}

TrialReport run_trial(const GridSpec& g, Count k, std::uint64_t trial_seed,
                      std::uint64_t state_budget) {
  std::mt19937_64 rng(trial_seed);
  const Configuration c = sample_uniform(g.vertex_count(), k, rng);
  TrialReport out;
  out.max_pile = c.max_pile();
  if (g.dim() == 1) {
    const auto ok = path_solvable_all(g, c);
    out.solvable = std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
    return out;
  }
  out.solvable = true;
  const SearchOptions opts{state_budget, false};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const SolveResult r = is_v_solvable_exact(g, c, g.vertex_at(i), opts);
    out.states_explored += r.states_explored;
    if (r.verdict == Verdict::solvable) continue;
    out.solvable = false;
    out.budget_exceeded = r.verdict == Verdict::budget_exceeded;
    break;
  }
  return out;
}

std::vector<TrialReport> run_trials(const GridSpec& g, Count k, std::uint64_t seed,
                                    std::uint64_t first, std::uint64_t count,
                                    const McOptions& options) {
  if (k < 0) throw DomainError("pebble total must be nonnegative");
  std::vector<TrialReport> out(count);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i)
      out[i] = run_trial(g, k, derive_seed(seed, first + i), options.state_budget);
  };
  const std::uint64_t threads = std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(count, 1));
  if (threads == 1) {
    work(0, count);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (std::uint64_t t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return out;
}

McEstimate summarize_trials(Count k, std::uint64_t seed, std::vector<TrialReport> reports,
                            bool keep_reports) {
  McEstimate out;
  out.k = k;
  out.seed = seed;
  out.trials = reports.size();
  for (const TrialReport& r : reports) {
    if (r.budget_exceeded) {
      ++out.budget_exceeded;
    } else if (r.solvable) {
      ++out.successes;
    }
    out.max_pile_max = std::max(out.max_pile_max, r.max_pile);
    ++out.max_pile_histogram[r.max_pile];
  }
  const std::uint64_t decided = out.trials - out.budget_exceeded;
  out.p_hat = decided == 0 ? 0.0 : static_cast<double>(out.successes) / static_cast<double>(decided);
  out.ci = wilson_interval(out.successes, decided);
  if (keep_reports) out.reports = std::move(reports);
  return out;
}

McEstimate mc_solvable_prob(const GridSpec& g, Count k, std::uint64_t trials, std::uint64_t seed,
                            const McOptions& options) {
  if (trials < 1) throw DomainError("need at least one trial");
  return summarize_trials(k, seed, run_trials(g, k, seed, 0, trials, options),
                          options.keep_reports);
}

const char* to_string(Side s) {
  switch (s) {
    case Side::below:
      return "below";
    case Side::above:
      return "above";
    case Side::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

Side side_of(const Interval& ci) {
  if (ci.hi < 0.5) return Side::below;
  if (ci.lo > 0.5) return Side::above;
  return Side::undecided;
}

KEstimate classify(const GridSpec& g, Count k, const PhalfOptions& opt) {
  KEstimate out;
  out.k = k;
  if (opt.exact_limit > 0 &&
      config_count(g, k) <= BigInt(static_cast<unsigned long>(opt.exact_limit))) {
    const ExactProbability p = exact_solvable_prob(g, k, opt.exact_limit, opt.state_budget);
    out.exact = true;
    out.trials = p.total;
    out.successes = p.solvable;
    out.p_hat = to_double(p.probability);
    out.ci = {out.p_hat, out.p_hat};
    out.side = p.probability * 2 >= 1 ? Side::above : Side::below;
    return out;
  }

  const std::uint64_t stream = derive_seed(opt.seed, static_cast<std::uint64_t>(k));
  const McOptions mc{opt.state_budget, opt.threads, false};
  std::vector<TrialReport> reports;
  std::uint64_t target = std::min(std::max<std::uint64_t>(opt.trials_per_k, 1), opt.trial_cap);
  while (true) {
    // doubling reuses the earlier trials: trial i always has the same seed
    auto more = run_trials(g, k, stream, reports.size(), target - reports.size(), mc);
    reports.insert(reports.end(), more.begin(), more.end());
    const McEstimate est = summarize_trials(k, stream, reports, false);
    out.trials = est.trials;
    out.successes = est.successes;
    out.budget_exceeded = est.budget_exceeded;
    out.p_hat = est.p_hat;
    out.ci = est.ci;
    out.max_pile_max = est.max_pile_max;
    out.side = side_of(est.ci);
    if (out.side != Side::undecided || target >= opt.trial_cap) return out;
    target = std::min(target * 2, opt.trial_cap);
  }
}

}  // namespace

ThresholdEstimate phalf_bisect(const GridSpec& g, Count k_min, Count k_max,
                               const PhalfOptions& options) {
  if (k_min < 0 || !(k_min < k_max)) throw DomainError("need 0 <= k_min < k_max");
  if (options.trial_cap < 1) throw DomainError("trial cap must be positive");
  ThresholdEstimate out;
  out.seed = options.seed;

  auto eval = [&](Count k) {
    out.per_k.push_back(classify(g, k, options));
    return out.per_k.back().side;
  };

  Count lo = k_min;
  Count hi = k_max;
  const Side lo_side = eval(k_min);
  const Side hi_side = eval(k_max);
  if (lo_side == Side::above) {
    // k_min - 1 is unverified unless it is 0, where P(solvable) = 0
    out.low_open = k_min > 1;
    out.k_low = std::max<Count>(k_min - 1, 0);
    out.k_high = k_min;
  } else if (hi_side != Side::above) {
    out.high_open = true;
    out.straddle = hi_side == Side::undecided;
    out.k_low = lo;
    out.k_high = hi;
  } else {
    if (lo_side == Side::undecided) out.straddle = true;
    while (!out.straddle && hi - lo > 1) {
      const Count mid = lo + (hi - lo) / 2;
      const Side s = eval(mid);
      if (s == Side::above) {
        hi = mid;
      } else if (s == Side::below) {
        lo = mid;
      } else {
        out.straddle = true;
      }
    }
    out.k_low = lo;
    out.k_high = hi;
  }
  std::sort(out.per_k.begin(), out.per_k.end(),
            [](const KEstimate& a, const KEstimate& b) { return a.k < b.k; });
  return out;
}

double theorem1_value(double n, int d, const std::vector<double>& q, double gamma) {
  if (!(n >= 3.0)) throw DomainError("needs n >= 3 so that log log n is defined");
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (q.size() != static_cast<std::size_t>(d)) throw DomainError("need one cost per axis");
  const double ln_n = std::log(n);
  double fact = 1.0;
  for (int i = 2; i <= d + 1; ++i) fact *= i;
  double inner = fact * ln_n;
  for (double qi : q) {
    if (!(qi >= 2.0)) throw DomainError("every cost must be >= 2");
    inner *= std::log(qi);
  }
  inner /= 2.0;
  const double root = d == 1 ? std::sqrt(inner) : std::pow(inner, 1.0 / (d + 1));
  return std::pow(n, d) * std::exp(root - d * std::log(ln_n) / (d + 1) + gamma);
}

double theorem2_value(double n, double q, double delta) {
  if (!(n >= 3.0)) throw DomainError("needs n >= 3 so that log log n is defined");
  if (!(q >= 2.0)) throw DomainError("cost must be >= 2");
  const double ln_n = std::log(n);
  return n * std::exp(std::sqrt(ln_n * std::log(q)) - std::log(ln_n) / 2 + delta);
}

std::vector<GrahamRow> graham_table(int n0, double C, double b, int s_max) {
  if (n0 < 1) throw DomainError("n0 must be >= 1");
  if (!(C > 0.0)) throw DomainError("C must be positive");
  if (!(b > 0.0)) throw DomainError("b must be positive");
  if (s_max < 0 || s_max > 1000) throw DomainError("s_max must be in [0, 1000]");
  std::vector<GrahamRow> rows;
  const double log2_c = std::log2(C);
  const double log2_b = std::log2(b);
  for (int s = 0; s <= s_max; ++s) {
    const double copies = std::ldexp(1.0, s);
    GrahamRow row;
    row.s = s;
    row.log2_upper = (copies - 1.0) * log2_c + copies * log2_b;
    row.log2_lower = (1.0 - 1.0 / n0) * copies * n0;
    row.contradiction = row.log2_upper < row.log2_lower;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pebbling
