#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pebbling/grid.hpp"
#include "pebbling/numeric.hpp"

namespace pebbling {

inline constexpr std::uint64_t kDefaultCountBudget = 200'000'000;

/// Number of nonnegative integer vectors x with sum_i x_i / a_i < 1.
/// The budget caps enumeration nodes, not the count itself (the innermost
/// coordinate is counted in closed form).
BigInt simplex_lattice_count(std::span<const Rational> a,
                             std::uint64_t budget = kDefaultCountBudget);

/// Volume bounds on simplex_lattice_count. The lower bound only uses the
/// coordinates after the first s; a negative base is clamped to zero.
struct SimplexBounds {
  double lower = 0.0;
  double upper = 0.0;
  int s = 0;
  Rational lower_exact;
  Rational upper_exact;
};

SimplexBounds simplex_bounds(std::span<const Rational> a, int s);

/// Distributions D on lambda_set(v, C) with sum_w D(w) / qd(v, w) < ell.
BigInt count_low_weight_distributions(const GridSpec& g, const Vertex& v, double C,
                                      const Rational& ell,
                                      std::uint64_t budget = kDefaultCountBudget);

/// prod_{w in lambda_set(v, C)} qd(v, w).
BigInt weight_product(const GridSpec& g, const Vertex& v, double C);

/// sum over w with qd(w, v) > C of 1 / qd(w, v).
Rational tail_weight_sum(const GridSpec& g, const Vertex& v, double C);

/// Partitions of q^t into powers of q (1 included).
BigInt mahler_h(unsigned t, unsigned q, std::uint64_t budget = std::uint64_t{1} << 22);

/// Exponent of a quoted asymptotic expansion of h(t, q), evaluated term by
/// term without the error term:
///   (t-1) log q / 2 - (t-1) log(t-1) loglog q + (log q / 2 + 1 + loglog q)(t-1).
/// Returned un-exponentiated.
double mahler_asymptotic(unsigned t, unsigned q);

struct MahlerRow {
  unsigned t = 0;
  BigInt exact;
  double log_exact = 0.0;
  double printed_exponent = 0.0;
  double gap = 0.0;             // log_exact - printed_exponent
  double normalized_gap = 0.0;  // |gap| / (log t)^2
};

struct MahlerComparison {
  unsigned q = 2;
  std::vector<MahlerRow> rows;
  /// True when |gap| / (log t)^2 increases over the last rows and ends above 1,
  /// i.e. the difference outgrows the expansion's O((log t)^2) error term.
  bool diverges = false;
};

MahlerComparison mahler_comparison(unsigned q, unsigned t_max);

}  // namespace pebbling
