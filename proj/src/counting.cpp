#include "pebbling/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pebbling {

namespace {

template <typename Int>
class SimplexWalk {
 public:
  SimplexWalk(std::vector<Int> coeffs, std::uint64_t budget)
      : coeffs_(std::move(coeffs)), budget_(budget) {}

  // Vectors with sum_{j >= level} coeffs[j] x_j < room.
  BigInt count(std::size_t level, const Int& room) {
    const Int& c = coeffs_[level];
    if (level + 1 == coeffs_.size()) return to_big(Int((room + c - 1) / c));
    if (++nodes_ > budget_) throw BudgetExceeded("lattice enumeration budget exhausted");
    BigInt total = 0;
    for (Int used = 0; used < room; used += c) total += count(level + 1, Int(room - used));
    return total;
  }

 private:
  static BigInt to_big(const std::int64_t& x) { return BigInt(static_cast<long>(x)); }
  static BigInt to_big(const BigInt& x) { return x; }

  std::vector<Int> coeffs_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BigInt simplex_lattice_count(std::span<const Rational> a, std::uint64_t budget) {
  if (a.empty()) return 1;
  for (const Rational& x : a)
    if (x <= 0) throw DomainError("simplex parameters must be positive");

  // x_i / a_i = x_i * den_i / num_i; scale by lcm of numerators to integers.
  BigInt scale = 1;
  for (const Rational& x : a) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_num_mpz_t());
  std::vector<BigInt> coeffs;
  coeffs.reserve(a.size());
  for (const Rational& x : a) coeffs.push_back(BigInt(x.get_den() * (scale / x.get_num())));
  // most values innermost: the innermost level is counted in closed form
  std::sort(coeffs.begin(), coeffs.end(), [](const BigInt& l, const BigInt& r) { return l > r; });

  if (scale < (BigInt(1) << 62)) {
    std::vector<std::int64_t> small;
    for (const BigInt& c : coeffs) small.push_back(c.get_si());
    SimplexWalk<std::int64_t> walk(std::move(small), budget);
    return walk.count(0, scale.get_si());
  }
  SimplexWalk<BigInt> walk(std::move(coeffs), budget);
  return walk.count(0, scale);
}

SimplexBounds simplex_bounds(std::span<const Rational> a, int s) {
  const int r = static_cast<int>(a.size());
  if (s < 0 || s >= r) throw DomainError("split parameter s must satisfy 0 <= s < r");
  for (const Rational& x : a)
    if (x <= 0) throw DomainError("simplex parameters must be positive");

  SimplexBounds out;
  out.s = s;

  Rational inv_tail = 0, tail_prod = 1;
  for (int i = s; i < r; ++i) {
    inv_tail += 1 / a[static_cast<std::size_t>(i)];
    tail_prod *= a[static_cast<std::size_t>(i)];
  }
  Rational base = 1 - inv_tail;
  if (base < 0) base = 0;
  Rational lower = tail_prod / Rational(factorial(static_cast<unsigned long>(r - s)));
  for (int i = 0; i < r - s; ++i) lower *= base;

  Rational inv_all = 0, prod_all = 1;
  for (const Rational& x : a) {
    inv_all += 1 / x;
    prod_all *= x;
  }
  Rational upper = prod_all / Rational(factorial(static_cast<unsigned long>(r)));
  for (int i = 0; i < r; ++i) upper *= 1 + inv_all;

  lower.canonicalize();
  upper.canonicalize();
  out.lower = to_double(lower);
  out.upper = to_double(upper);
  out.lower_exact = std::move(lower);
  out.upper_exact = std::move(upper);
  return out;
}

BigInt count_low_weight_distributions(const GridSpec& g, const Vertex& v, double C,
                                      const Rational& ell, std::uint64_t budget) {
  if (ell <= 0) throw DomainError("ell must be positive");
  std::vector<Rational> a;
  for (const Vertex& w : lambda_set(g, v, C)) a.emplace_back(ell * pebbling_distance(g, v, w));
  return simplex_lattice_count(a, budget);
}

BigInt weight_product(const GridSpec& g, const Vertex& v, double C) {
  BigInt out = 1;
  for (const Vertex& w : lambda_set(g, v, C)) out *= pebbling_distance(g, v, w);
  return out;
}

Rational tail_weight_sum(const GridSpec& g, const Vertex& v, double C) {
  g.require(v);
  if (std::isnan(C)) throw DomainError("C must be a number");
  Rational out = 0;
  if (std::isinf(C) && C > 0) return out;
  // qd is an integer, so qd > C iff qd > floor(C)
  const BigInt cap = C < 0 ? BigInt(-1) : BigInt(std::floor(C));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const BigInt qd = pebbling_distance(g, g.vertex_at(i), v);
    if (qd > cap) out += Rational(1, qd);
  }
  out.canonicalize();
  return out;
}

BigInt mahler_h(unsigned t, unsigned q, std::uint64_t budget) {
  if (q < 2) throw DomainError("q must be an integer >= 2");
  const BigInt target = int_pow(q, t);
  if (target > BigInt(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("q^t = " + target.get_str() + " exceeds the partition budget");
  const auto m = static_cast<std::size_t>(target.get_ui());
  std::vector<BigInt> ways(m + 1, 0);
  ways[0] = 1;
  for (std::size_t part = 1; part <= m; part *= q)
    for (std::size_t s = part; s <= m; ++s) ways[s] += ways[s - part];
  return ways[m];
}

double mahler_asymptotic(unsigned t, unsigned q) {
  if (t < 2) throw DomainError("the expansion needs t >= 2");
  if (q < 2) throw DomainError("q must be an integer >= 2");
  const double lq = std::log(static_cast<double>(q));
  const double llq = std::log(lq);
  const double s = t - 1.0;
  return s * lq / 2.0 - s * std::log(s) * llq + (lq / 2.0 + 1.0 + llq) * s;
}

MahlerComparison mahler_comparison(unsigned q, unsigned t_max) {
  if (t_max < 2) throw DomainError("comparison needs t_max >= 2");
  MahlerComparison out;
  out.q = q;
  for (unsigned t = 2; t <= t_max; ++t) {
    MahlerRow row;
    row.t = t;
    row.exact = mahler_h(t, q);
    row.log_exact = std::log(mpz_get_d(row.exact.get_mpz_t()));
    row.printed_exponent = mahler_asymptotic(t, q);
    row.gap = row.log_exact - row.printed_exponent;
    const double lt = std::log(static_cast<double>(t));
    row.normalized_gap = std::abs(row.gap) / (lt * lt);
    out.rows.push_back(std::move(row));
  }
  const auto& rows = out.rows;
  if (rows.size() >= 3) {
    const std::size_t n = rows.size();
    out.diverges = rows[n - 3].normalized_gap < rows[n - 2].normalized_gap &&
                   rows[n - 2].normalized_gap < rows[n - 1].normalized_gap &&
                   rows[n - 1].normalized_gap > 1.0;
  }
  return out;
}

}  // namespace pebbling
