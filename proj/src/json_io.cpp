#include "pebbling/json_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace pebbling {

namespace {

Json rational_json(const Rational& r) { return to_string(r); }

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw DomainError(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Vertex& v) { return Json(v.coords); }

Vertex vertex_from_json(const Json& j) { return Vertex{int_list(j, "vertex")}; }

Json config_to_json(const GridSpec& g, const Configuration& c) {
  require_shape(g, c);
  Json j;
  j["shape"] = std::vector<int>(g.sides().begin(), g.sides().end());
  j["q"] = std::vector<int>(g.costs().begin(), g.costs().end());
  j["counts"] = std::vector<Count>(c.counts().begin(), c.counts().end());
  return j;
}

std::pair<GridSpec, Configuration> config_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("configuration must be a JSON object");
  for (const char* key : {"shape", "q", "counts"})
    if (!j.contains(key)) throw DomainError(std::string("configuration is missing \"") + key + "\"");
  GridSpec g(int_list(j.at("shape"), "shape"), int_list(j.at("q"), "q"));
  const Json& counts = j.at("counts");
  if (!counts.is_array()) throw DomainError("counts must be an array");
  std::vector<Count> values;
  for (const auto& x : counts) {
    if (!x.is_number_integer()) throw DomainError("counts must contain integers");
    values.push_back(x.get<Count>());
  }
  Configuration c(std::move(values));
  require_shape(g, c);
  return {std::move(g), std::move(c)};
}

Json moves_to_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const Move& m : moves) {
    Json j;
    j["from"] = to_json(m.from);
    j["axis"] = m.axis;
    j["dir"] = m.direction;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<Move> moves_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("certificate must be an array");
  std::vector<Move> out;
  for (const auto& m : j)
    out.push_back(Move{vertex_from_json(m.at("from")), m.at("axis").get<int>(),
                       m.at("dir").get<int>()});
  return out;
}

Json to_json(const WeightReport& r) {
  Json j;
  j["weight_sum"] = rational_json(r.weight_sum);
  j["weight_sum_value"] = to_double(r.weight_sum);
  j["necessary_met"] = r.necessary_met;
  j["sufficient_threshold"] = rational_json(r.sufficient_threshold);
  j["sufficient_met"] = r.sufficient_met;
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["certificate"] = r.certificate ? moves_to_json(*r.certificate) : Json(nullptr);
  j["states_explored"] = r.states_explored;
  return j;
}

Json to_json(const SolvabilityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["first_failure"] = r.first_failure ? to_json(*r.first_failure) : Json(nullptr);
  Json per = Json::array();
  for (const auto& pv : r.per_vertex) {
    Json e;
    e["target"] = to_json(pv.target);
    e["verdict"] = to_string(pv.result.verdict);
    e["states_explored"] = pv.result.states_explored;
    per.push_back(std::move(e));
  }
  j["per_vertex"] = std::move(per);
  j["states_explored"] = r.states_explored;
  return j;
}

Json to_json(const McEstimate& e) {
  Json j;
  j["k"] = e.k;
  j["seed"] = e.seed;
  j["trials"] = e.trials;
  j["successes"] = e.successes;
  j["budget_exceeded"] = e.budget_exceeded;
  j["p_hat"] = e.p_hat;
  j["ci_lo"] = e.ci.lo;
  j["ci_hi"] = e.ci.hi;
  j["max_pile_max"] = e.max_pile_max;
  Json hist = Json::array();
  for (const auto& [pile, n] : e.max_pile_histogram) hist.push_back(Json::array({pile, n}));
  j["max_pile_histogram"] = std::move(hist);
  return j;
}

Json to_json(const KEstimate& e) {
  Json j;
  j["k"] = e.k;
  j["trials"] = e.trials;
  j["successes"] = e.successes;
  j["budget_exceeded"] = e.budget_exceeded;
  j["p_hat"] = e.p_hat;
  j["ci_lo"] = e.ci.lo;
  j["ci_hi"] = e.ci.hi;
  j["max_pile_max"] = e.max_pile_max;
  j["exact"] = e.exact;
  j["side"] = to_string(e.side);
  return j;
}

Json to_json(const ThresholdEstimate& t) {
  Json j;
  j["k_low"] = t.k_low;
  j["k_high"] = t.k_high;
  j["seed"] = t.seed;
  j["straddle"] = t.straddle;
  j["low_open"] = t.low_open;
  j["high_open"] = t.high_open;
  Json per = Json::array();
  for (const auto& e : t.per_k) per.push_back(to_json(e));
  j["per_k"] = std::move(per);
  return j;
}

Json to_json(const SimplexBounds& b) {
  Json j;
  j["s"] = b.s;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["lower_exact"] = rational_json(b.lower_exact);
  j["upper_exact"] = rational_json(b.upper_exact);
  return j;
}

Json to_json(const MahlerComparison& m) {
  Json j;
  j["q"] = m.q;
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json row;
    row["t"] = r.t;
    row["exact"] = r.exact.get_str();
    row["log_exact"] = r.log_exact;
    row["printed_exponent"] = r.printed_exponent;
    row["gap"] = r.gap;
    row["normalized_gap"] = r.normalized_gap;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["diverges"] = m.diverges;
  return j;
}

Json to_json(const GrahamRow& r) {
  Json j;
  j["s"] = r.s;
  j["log2_upper"] = r.log2_upper;
  j["log2_lower"] = r.log2_lower;
  j["contradiction"] = r.contradiction;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string threshold_csv_header() {
  return "k,trials,successes,p_hat,ci_lo,ci_hi,max_pile_max,budget_exceeded";
}

std::string to_csv_row(const McEstimate& e) {
  std::ostringstream os;
  os << e.k << ',' << e.trials << ',' << e.successes << ',' << format_double(e.p_hat) << ','
     << format_double(e.ci.lo) << ',' << format_double(e.ci.hi) << ',' << e.max_pile_max << ','
     << e.budget_exceeded;
  return os.str();
}

std::string to_csv_row(const KEstimate& e) {
  std::ostringstream os;
  os << e.k << ',' << e.trials << ',' << e.successes << ',' << format_double(e.p_hat) << ','
     << format_double(e.ci.lo) << ',' << format_double(e.ci.hi) << ',' << e.max_pile_max << ','
     << e.budget_exceeded;
  return os.str();
}

}  // namespace pebbling
