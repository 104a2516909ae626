#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pebbling/config.hpp"
#include "pebbling/counting.hpp"
#include "pebbling/grid.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/threshold.hpp"

namespace pebbling {

using Json = nlohmann::ordered_json;

Json to_json(const Vertex& v);
Vertex vertex_from_json(const Json& j);

/// {"shape":[n1,...],"q":[q1,...],"counts":[...row-major...]}
Json config_to_json(const GridSpec& g, const Configuration& c);
std::pair<GridSpec, Configuration> config_from_json(const Json& j);

/// [{"from":[...],"axis":i,"dir":+-1}, ...]
Json moves_to_json(const std::vector<Move>& moves);
std::vector<Move> moves_from_json(const Json& j);

Json to_json(const WeightReport& r);
Json to_json(const SolveResult& r);
Json to_json(const SolvabilityReport& r);
Json to_json(const McEstimate& e);
Json to_json(const KEstimate& e);
Json to_json(const ThresholdEstimate& t);
Json to_json(const SimplexBounds& b);
Json to_json(const MahlerComparison& m);
Json to_json(const GrahamRow& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

/// k,trials,successes,p_hat,ci_lo,ci_hi,max_pile_max,budget_exceeded
std::string threshold_csv_header();
std::string to_csv_row(const McEstimate& e);
std::string to_csv_row(const KEstimate& e);

}  // namespace pebbling
