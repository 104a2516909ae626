// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pebbling/config.hpp"
#include "pebbling/counting.hpp"
#include "pebbling/grid.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/threshold.hpp"

using namespace pebbling;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    v.pass = false;
    v.detail += " [over time limit " + std::to_string(limit_seconds) + "s]";
  }
  if (!v.pass) ++failures;
  std::printf("%s %2d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

Vertex V(std::initializer_list<int> c) { return Vertex{std::vector<int>(c)}; }

std::string str(const Rational& r) { return to_string(r); }

}  // namespace

int main() {
  criterion(1, "pebbling numbers by brute force", 300, [] {
    struct Case {
      GridSpec g;
      Count expected;
      const char* name;
    };
    const std::vector<Case> cases = {{GridSpec({2}, {2}), 2, "P2"},
                                     {GridSpec({3}, {2}), 4, "P3"},
                                     {GridSpec({4}, {2}), 8, "P4"},
                                     {GridSpec({2, 2}, {2, 2}), 4, "2x2"},
                                     {GridSpec({2, 2, 2}, {2, 2, 2}), 8, "2x2x2"}};
    Outcome v;
    for (const Case& c : cases) {
      const Count got = pebbling_number(c.g).value;
      const Count brute = oracle::pebbling_number(c.g);
      v.detail += std::string(c.name) + "=" + std::to_string(got) + " ";
      if (got != c.expected || brute != c.expected) v.pass = false;
    }
    return v;
  });

  criterion(2, "path criterion equals exact solver on P5", 60, [] {
    long mismatches = 0, checked = 0;
    for (int q : {2, 3}) {
      GridSpec g({5}, {q});
      for (Count k = 0; k <= 5; ++k) {
        for_each_configuration(5, k, [&](const Configuration& c) {
          for (int i = 1; i <= 5; ++i) {
            const SolveResult r = is_v_solvable_exact(g, c, V({i}));
            ++checked;
            if (r.verdict == Verdict::budget_exceeded ||
                path_solvable(g, c, i) != (r.verdict == Verdict::solvable))
              ++mismatches;
          }
          return true;
        });
      }
    }
    return Outcome{mismatches == 0,
                    std::to_string(checked) + " (config, target) pairs, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(3, "sandwich soundness", 600, [] {
    struct Family {
      GridSpec g;
      Count pebbling_number;
      const char* name;
    };
    const std::vector<Family> families = {{GridSpec({6}, {2}), 32, "P6"},
                                          {GridSpec({5}, {3}), 81, "P5q3"},
                                          {GridSpec({4, 4}, {2, 2}), 64, "4x4"},
                                          {GridSpec({3, 3, 3}, {2, 2, 2}), 64, "3^3"},
                                          {GridSpec({2, 2, 2, 2}, {2, 2, 2, 2}), 16, "2^4"}};
    std::mt19937_64 rng(2718);
    long violations = 0, sufficient = 0, researched = 0, over_budget = 0;
    for (const Family& f : families) {
      for (int i = 0; i < 1000; ++i) {
        // k uniform on [1, pebbling number] covers both sides of the threshold
        const Count k = 1 + static_cast<Count>(rng() % f.pebbling_number);
        const Configuration c = sample_uniform(f.g.vertex_count(), k, rng);
        const Vertex v = f.g.vertex_at(rng() % f.g.vertex_count());
        const WeightReport suff = weight_sufficient_check(f.g, c, v);
        const WeightReport nec = fractional_necessary_check(f.g, c, v);
        const SolveResult r = is_v_solvable_exact(f.g, c, v);
        if (r.verdict == Verdict::budget_exceeded) {
          ++over_budget;
          continue;
        }
        const bool solved = r.verdict == Verdict::solvable;
        // a solvable verdict must come with a replayable proof
        if (solved && !(r.certificate && replay_reaches(f.g, c, *r.certificate, v))) ++violations;
        if (suff.sufficient_met) {
          ++sufficient;
          if (!solved) ++violations;
        }
        if (solved && !nec.necessary_met) ++violations;
        // the solver prunes on the necessary check, so confirm those
        // rejections with the unpruned search
        if (!nec.necessary_met) {
          ++researched;
          if (oracle::v_solvable(f.g, c, v)) ++violations;
        }
      }
    }
    return Outcome{violations == 0 && over_budget == 0,
                    "5000 configurations, " + std::to_string(sufficient) + " sufficient, " +
                        std::to_string(violations) + " violations, " + std::to_string(over_budget) +
                        " over budget, " + std::to_string(researched) + " necessary-check failures confirmed by unpruned search"};
  });

  criterion(4, "toward moves keep weight, away moves lose it", 0, [] {
    const std::vector<GridSpec> grids = {GridSpec({8}, {2}), GridSpec({6}, {3}), GridSpec({4, 5}, {2, 3}),
                                         GridSpec({3, 3, 3}, {2, 3, 5}), GridSpec({2, 2, 2, 2}, {2, 2, 3, 2})};
    std::mt19937_64 rng(31415);
    long triples = 0, violations = 0, toward = 0;
    while (triples < 10000) {
      const GridSpec& g = grids[rng() % grids.size()];
      const Configuration c = sample_uniform(g.vertex_count(), 1 + static_cast<Count>(rng() % 60), rng);
      const auto moves = legal_moves(g, c);
      if (moves.empty()) continue;
      const Move& m = moves[rng() % moves.size()];
      const Vertex v = g.vertex_at(rng() % g.vertex_count());
      const Rational before = weight_sum(g, c, v);
      const Rational after = weight_sum(g, apply_move(g, c, m), v);
      const std::size_t axis = static_cast<std::size_t>(m.axis - 1);
      const bool is_toward = (v[axis] - m.from[axis]) * m.direction > 0;
      toward += is_toward;
      if (is_toward ? after != before : !(after < before)) ++violations;
      ++triples;
    }
    return Outcome{violations == 0, std::to_string(triples) + " triples (" + std::to_string(toward) +
                                         " toward), " + std::to_string(violations) + " violations"};
  });

  criterion(5, "exact event probability equals enumeration", 0, [] {
    long cases = 0, mismatches = 0;
    for (int n = 1; n <= 4; ++n) {
      GridSpec g({n}, {2});
      for (Count k = 0; k <= 6; ++k) {
        std::vector<std::vector<std::int64_t>> configs;
        oracle::compositions(n, k, [&](const std::vector<std::int64_t>& x) { configs.push_back(x); });
        auto enumerate = [&](const std::vector<Pin>& pins) {
          long hits = 0;
          for (const auto& x : configs) {
            bool ok = true;
            for (const Pin& p : pins) ok = ok && x[p.vertex[0] - 1] == p.pebbles;
            hits += ok;
          }
          return Rational(hits, static_cast<long>(configs.size()));
        };
        auto check = [&](const std::vector<Pin>& pins) {
          ++cases;
          Rational want = enumerate(pins);
          want.canonicalize();
          if (exact_event_probability(g, k, pins) != want) ++mismatches;
        };
        check({});
        for (int a = 1; a <= n; ++a) {
          for (Count fa = 0; fa <= k; ++fa) {
            check({{V({a}), fa}});
            for (int b = a + 1; b <= n; ++b)
              for (Count fb = 0; fa + fb <= k; ++fb) check({{V({a}), fa}, {V({b}), fb}});
          }
        }
      }
    }
    return Outcome{mismatches == 0,
                    std::to_string(cases) + " (N, k, pins) cases, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(6, "exact and sampled probabilities on P3", 60, [] {
    GridSpec p3({3}, {2});
    const Rational p2 = exact_solvable_prob(p3, 2).probability;
    const Rational p3k = exact_solvable_prob(p3, 3).probability;
    const McEstimate m2 = mc_solvable_prob(p3, 2, 100000, 6);
    const McEstimate m3 = mc_solvable_prob(p3, 3, 100000, 6);
    const bool ok = p2 == Rational(1, 6) && p3k == Rational(4, 5) && std::abs(m2.p_hat - 1.0 / 6.0) <= 0.01 &&
                    std::abs(m3.p_hat - 0.8) <= 0.01;
    char buf[200];
    std::snprintf(buf, sizeof buf, "exact k=2 %s, k=3 %s; sampled %.4f, %.4f", str(p2).c_str(), str(p3k).c_str(),
                  m2.p_hat, m3.p_hat);
    return Outcome{ok, buf};
  });

  criterion(7, "threshold bracket on P2", 0, [] {
    GridSpec p2({2}, {2});
    PhalfOptions o;
    o.exact_limit = 1000;
    const ThresholdEstimate t = phalf_bisect(p2, 1, 4, o);
    const Rational at1 = exact_solvable_prob(p2, 1).probability;
    const Rational at2 = exact_solvable_prob(p2, 2).probability;
    bool exact_sides = true;
    for (const KEstimate& e : t.per_k) {
      if (!e.exact) exact_sides = false;
      if (e.k == 1 && e.side != Side::below) exact_sides = false;
      if (e.k == 2 && e.side != Side::above) exact_sides = false;
    }
    const bool ok = t.k_low == 1 && t.k_high == 2 && at1 == 0 && at2 == 1 && exact_sides && !t.straddle;
    return Outcome{ok, "bracket [" + std::to_string(t.k_low) + ", " + std::to_string(t.k_high) + "], P(1)=" +
                            str(at1) + ", P(2)=" + str(at2)};
  });

  criterion(8, "simplex lattice counts and bounds", 0, [] {
    std::mt19937_64 rng(1618);
    long violations = 0, bound_checks = 0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t r = 1 + rng() % 6;
      std::vector<Rational> a;
      for (std::size_t j = 0; j < r; ++j) {
        const long den = 1 + static_cast<long>(rng() % 4);
        const long num = 1 + static_cast<long>(rng() % (50 * den));
        Rational x(num, den);
        x.canonicalize();
        a.push_back(x);
      }
      const BigInt count = simplex_lattice_count(a);
      if (count != oracle::simplex_mitm_count(a)) ++violations;
      for (int s = 0; s < static_cast<int>(r); ++s) {
        const SimplexBounds b = simplex_bounds(a, s);
        ++bound_checks;
        if (Rational(count) < b.lower_exact || Rational(count) > b.upper_exact) ++violations;
      }
    }
    return Outcome{violations == 0, "100 vectors, " + std::to_string(bound_checks) + " bound checks, " +
                                         std::to_string(violations) + " violations"};
  });

  criterion(9, "Mahler partition counts", 0, [] {
    const auto b = oracle::binary_partitions(std::size_t{1} << 12);
    long mismatches = 0;
    for (unsigned t = 0; t <= 12; ++t)
      if (mahler_h(t, 2) != b[std::size_t{1} << t]) ++mismatches;
    const MahlerComparison m = mahler_comparison(2, 12);
    char buf[200];
    std::snprintf(buf, sizeof buf, "%ld mismatches for t=0..12; h(12,2)=%s; normalized gap at t=12 %.3f; divergence %s",
                  mismatches, m.rows.back().exact.get_str().c_str(), m.rows.back().normalized_gap,
                  m.diverges ? "flagged" : "not flagged");
    return Outcome{mismatches == 0 && m.diverges, buf};
  });

  criterion(10, "asymptotic shape", 0, [] {
    std::mt19937_64 rng(141);
    std::uniform_real_distribution<double> n_dist(3, 1e8), q_dist(2, 20), c_dist(-3, 3);
    long unequal = 0;
    for (int i = 0; i < 100; ++i) {
      const double n = n_dist(rng), q = q_dist(rng), c = c_dist(rng);
      if (theorem1_value(n, 1, {q}, c) != theorem2_value(n, q, c)) ++unequal;
    }
    // independent high-precision evaluation of 100 exp(sqrt(ln 2 ln 100) - ln ln 100 / 2)
    const double reference = 278.16495016813870029;
    const double value = theorem2_value(100, 2, 0);
    const bool close = std::abs(value - reference) / reference < 1e-3;

    GridSpec p100({100}, {2});
    const Count k_low = static_cast<Count>(std::floor(value / 4));
    const Count k_high = 4 * static_cast<Count>(std::ceil(value));
    const McEstimate lo = mc_solvable_prob(p100, k_low, 10000, 10);
    const McEstimate hi = mc_solvable_prob(p100, k_high, 10000, 10);
    const bool straddles = lo.ci.hi < 0.5 && hi.ci.lo > 0.5;
    char buf[300];
    std::snprintf(buf, sizeof buf,
                  "%ld unequal d=1 evaluations; value(100,2)=%.6f; P(k=%lld)=%.4f, P(k=%lld)=%.4f", unequal, value,
                  static_cast<long long>(k_low), lo.p_hat, static_cast<long long>(k_high), hi.p_hat);
    return Outcome{unequal == 0 && close && straddles, buf};
  });

  criterion(11, "product-conjecture arithmetic", 0, [] {
    const auto rows = graham_table(4, 1, 4, 10);
    bool ok = true;
    std::string flags;
    for (const GrahamRow& r : rows) {
      if (r.s >= 1 && !r.contradiction) ok = false;
      // exact in log space: 2^s * 2 versus 3 * 2^s
      if (r.s >= 1 && (r.log2_upper != std::ldexp(2.0, r.s) || r.log2_lower != std::ldexp(3.0, r.s))) ok = false;
      flags += r.contradiction ? '1' : '0';
    }
    return Outcome{ok, "contradiction flags for s=0..10: " + flags};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
