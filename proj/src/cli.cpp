#include "pebbling/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pebbling/config.hpp"
#include "pebbling/counting.hpp"
#include "pebbling/json_io.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/threshold.hpp"

namespace pebbling::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

long long parse_integer(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed integer '" + token + "' in " + context);
  }
  if (used != token.size()) throw DomainError("malformed integer '" + token + "' in " + context);
  return v;
}

struct Payload {
  Json result;
  std::optional<std::string> csv;
  int exit_code = kOk;
};

struct Common {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
};

struct GridArgs {
  std::string shape;
  std::string q;

  GridSpec grid() const {
    std::vector<int> costs;
    for (long long x : parse_int_list(q)) costs.push_back(static_cast<int>(x));
    return GridSpec(parse_shape(shape), std::move(costs));
  }
};

void add_grid(CLI::App* sub, GridArgs& args, bool required = true) {
  auto* s = sub->add_option("--shape", args.shape, "Side lengths, e.g. 5 or 4x4x3");
  auto* q = sub->add_option("--q", args.q, "Pebbling costs per axis, e.g. 2 or 2,3");
  if (required) {
    s->required();
    q->required();
  }
}

Vertex parse_vertex(const std::string& text) {
  Vertex v;
  for (long long x : parse_int_list(text)) v.coords.push_back(static_cast<int>(x));
  return v;
}

Json manifest_params(const CLI::App* app) {
  Json params = Json::object();
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_expected_max() > 1 || res.size() > 1) {
        params[name] = res;
      } else if (opt->get_type_size() == 0) {
        params[name] = true;
      } else {
        params[name] = res.empty() ? std::string() : res.front();
      }
    } else if (!opt->get_default_str().empty()) {
      params[name] = opt->get_default_str();
    }
  }
  return params;
}

std::string csv_with_manifest(const Json& manifest, const std::string& body) {
  return "# manifest: " + manifest.dump() + "\n" + body;
}

std::uint64_t budget_or(const Common& c, std::uint64_t fallback) {
  return c.budget.value_or(fallback);
}

Configuration load_config(const GridSpec& g, const std::string& file, const std::string& counts,
                          std::optional<GridSpec>& from_file) {
  if (!file.empty() && !counts.empty()) throw DomainError("give either --config or --counts, not both");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DomainError("cannot read configuration file '" + file + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed configuration JSON: ") + e.what());
    }
    auto [fg, c] = config_from_json(j);
    from_file = fg;
    return c;
  }
  if (counts.empty()) throw DomainError("a configuration is required (--config or --counts)");
  std::vector<Count> values;
  for (long long x : parse_int_list(counts)) values.push_back(x);
  Configuration c(std::move(values));
  require_shape(g, c);
  return c;
}

}  // namespace

std::vector<int> parse_shape(const std::string& text) {
  if (text.empty()) throw DomainError("empty shape");
  std::vector<int> out;
  for (const std::string& tok : split(text, 'x')) {
    if (tok.empty()) throw DomainError("malformed shape '" + text + "'");
    const long long v = parse_integer(tok, "shape");
    if (v < 1 || v > 1'000'000'000) throw DomainError("side lengths must be positive");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  if (text.empty()) throw DomainError("empty integer list");
  std::vector<long long> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok.empty()) throw DomainError("malformed list '" + text + "'");
    out.push_back(parse_integer(tok, "'" + text + "'"));
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  if (text.empty()) throw DomainError("empty list");
  std::vector<Rational> out;
  for (const std::string& tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-pebbling on d-dimensional grids", "pebble"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "Master seed")->capture_default_str();
  app.add_option("--budget", common.budget, "State / enumeration budget");
  app.add_option("--threads", common.threads, "Worker threads for Monte Carlo")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  std::map<CLI::App*, std::function<Payload()>> handlers;
  auto subcommand = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // solve
  GridArgs solve_grid;
  std::string solve_config, solve_counts, solve_target, solve_method = "exact";
  CLI::App* solve = subcommand(&app, "solve", "Decide (v-)solvability of a configuration");
  add_grid(solve, solve_grid, false);
  solve->add_option("--config", solve_config, "Configuration JSON file");
  solve->add_option("--counts", solve_counts, "Row-major counts, comma separated");
  solve->add_option("--target", solve_target, "Target vertex, e.g. 1,3 (omit: every vertex)");
  solve->add_option("--method", solve_method)
      ->check(CLI::IsMember({"exact", "greedy", "criteria"}))
      ->capture_default_str();
  handlers[solve] = [&]() {
    std::optional<GridSpec> file_grid;
    std::optional<GridSpec> arg_grid;
    if (!solve_grid.shape.empty() || !solve_grid.q.empty()) arg_grid = solve_grid.grid();
    if (!arg_grid && solve_config.empty()) throw DomainError("--shape and --q are required");
    Configuration c = load_config(arg_grid ? *arg_grid : GridSpec({1}, {2}), solve_config,
                                  solve_counts, file_grid);
    if (file_grid && arg_grid && !(*file_grid == *arg_grid))
      throw DomainError("--shape/--q disagree with the configuration file");
    const GridSpec g = file_grid ? *file_grid : *arg_grid;
    const SearchOptions opts{budget_or(common, kDefaultStateBudget), true};

    Payload p;
    p.result["method"] = solve_method;
    p.result["configuration"] = config_to_json(g, c);
    if (solve_target.empty()) {
      if (solve_method != "exact") throw DomainError("--target is required for this method");
      const SolvabilityReport r = is_solvable_exact(g, c, opts);
      p.result["solvability"] = to_json(r);
      if (r.verdict == Verdict::budget_exceeded) p.exit_code = kBudget;
      return p;
    }
    const Vertex v = parse_vertex(solve_target);
    g.require(v);
    p.result["target"] = to_json(v);
    if (solve_method == "criteria") {
      p.result["fractional_necessary"] = to_json(fractional_necessary_check(g, c, v));
      p.result["weight_sufficient"] = to_json(weight_sufficient_check(g, c, v));
      p.result["greedy_sufficient"] = to_json(greedy_sufficient_check(g, c, v));
      if (g.dim() == 1) p.result["path_criterion"] = path_solvable(g, c, v[0]);
      return p;
    }
    const SolveResult r =
        solve_method == "greedy" ? greedy_solve(g, c, v) : is_v_solvable_exact(g, c, v, opts);
    p.result["result"] = to_json(r);
    if (r.certificate) p.result["certificate_replays"] = replay_reaches(g, c, *r.certificate, v);
    if (r.verdict == Verdict::budget_exceeded) p.exit_code = kBudget;
    return p;
  };

  // pnum
  GridArgs pnum_grid;
  CLI::App* pnum = subcommand(&app, "pnum", "Pebbling number by brute force");
  add_grid(pnum, pnum_grid);
  handlers[pnum] = [&]() {
    const GridSpec g = pnum_grid.grid();
    const PebblingNumberResult r =
        pebbling_number(g, {budget_or(common, kDefaultStateBudget), false});
    Payload p;
    p.result["pebbling_number"] = r.value;
    p.result["witness"] = config_to_json(g, r.witness);
    p.result["configurations_checked"] = r.configurations_checked;
    return p;
  };

  // sample
  GridArgs sample_grid;
  Count sample_k = 0;
  std::uint64_t sample_count = 1;
  CLI::App* sample = subcommand(&app, "sample", "Uniform random configurations");
  add_grid(sample, sample_grid);
  sample->add_option("--k", sample_k, "Number of pebbles")->required();
  sample->add_option("--count", sample_count, "Number of samples")->capture_default_str();
  handlers[sample] = [&]() {
    const GridSpec g = sample_grid.grid();
    if (sample_k < 0) throw DomainError("--k must be nonnegative");
    Payload p;
    Json configs = Json::array();
    for (std::uint64_t i = 0; i < sample_count; ++i)
      configs.push_back(config_to_json(g, sample_uniform(g, sample_k, derive_seed(common.seed, i))));
    p.result["configurations"] = std::move(configs);
    return p;
  };

  // event
  GridArgs event_grid;
  Count event_k = 0;
  std::vector<std::string> event_pins;
  CLI::App* event = subcommand(&app, "event", "Exact probability of pinned pile sizes");
  add_grid(event, event_grid);
  event->add_option("--k", event_k, "Number of pebbles")->required();
  event->add_option("--pin", event_pins, "Pinned vertex and count, e.g. 1,2:3 (repeatable)");
  handlers[event] = [&]() {
    const GridSpec g = event_grid.grid();
    std::vector<Pin> pins;
    for (const std::string& spec : event_pins) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) throw DomainError("pin must look like c1,c2:f");
      pins.push_back(Pin{parse_vertex(spec.substr(0, colon)),
                         parse_integer(spec.substr(colon + 1), "pin count")});
    }
    const Rational prob = exact_event_probability(g, event_k, pins);
    Count pinned = 0;
    for (const Pin& pin : pins) pinned += pin.pebbles;
    Payload p;
    p.result["probability"] = to_string(prob);
    p.result["value"] = to_double(prob);
    if (event_k > 0) {
      const double lambda = static_cast<double>(event_k) / static_cast<double>(g.vertex_count());
      p.result["approximation"] =
          prob_bound_approx(lambda, static_cast<int>(pins.size()), static_cast<double>(pinned));
    }
    return p;
  };

  // prob-exact
  GridArgs pe_grid;
  Count pe_k = 0;
  std::uint64_t pe_max = 1'000'000;
  CLI::App* prob_exact = subcommand(&app, "prob-exact", "Exact probability of solvability");
  add_grid(prob_exact, pe_grid);
  prob_exact->add_option("--k", pe_k, "Number of pebbles")->required();
  prob_exact->add_option("--max-configs", pe_max, "Enumeration limit")->capture_default_str();
  handlers[prob_exact] = [&]() {
    const GridSpec g = pe_grid.grid();
    const ExactProbability r =
        exact_solvable_prob(g, pe_k, pe_max, budget_or(common, kDefaultStateBudget));
    Payload p;
    p.result["k"] = pe_k;
    p.result["probability"] = to_string(r.probability);
    p.result["value"] = to_double(r.probability);
    p.result["solvable"] = r.solvable;
    p.result["total"] = r.total;
    return p;
  };

  // mc
  GridArgs mc_grid;
  Count mc_k = 0;
  std::uint64_t mc_trials = 10000;
  CLI::App* mc = subcommand(&app, "mc", "Monte Carlo probability of solvability");
  add_grid(mc, mc_grid);
  mc->add_option("--k", mc_k, "Number of pebbles")->required();
  mc->add_option("--trials", mc_trials)->check(CLI::PositiveNumber)->capture_default_str();
  handlers[mc] = [&]() {
    const GridSpec g = mc_grid.grid();
    const McEstimate e = mc_solvable_prob(
        g, mc_k, mc_trials, common.seed,
        McOptions{budget_or(common, kDefaultStateBudget), common.threads, false});
    Payload p;
    p.result = to_json(e);
    p.csv = threshold_csv_header() + "\n" + to_csv_row(e) + "\n";
    return p;
  };

  // phalf
  GridArgs ph_grid;
  Count ph_kmin = 0, ph_kmax = 0;
  PhalfOptions ph_opts;
  CLI::App* phalf = subcommand(&app, "phalf", "Bracket the P(solvable) >= 1/2 threshold");
  add_grid(phalf, ph_grid);
  phalf->add_option("--kmin", ph_kmin)->required();
  phalf->add_option("--kmax", ph_kmax)->required();
  phalf->add_option("--trials", ph_opts.trials_per_k, "Initial trials per k")->capture_default_str();
  phalf->add_option("--cap", ph_opts.trial_cap, "Trial cap per k")->capture_default_str();
  phalf->add_option("--exact-limit", ph_opts.exact_limit,
                    "Enumerate exactly when a k has at most this many configurations")
      ->capture_default_str();
  handlers[phalf] = [&]() {
    const GridSpec g = ph_grid.grid();
    PhalfOptions o = ph_opts;
    o.seed = common.seed;
    o.threads = common.threads;
    o.state_budget = budget_or(common, kDefaultStateBudget);
    const ThresholdEstimate t = phalf_bisect(g, ph_kmin, ph_kmax, o);
    Payload p;
    p.result = to_json(t);
    std::string csv = threshold_csv_header() + "\n";
    for (const KEstimate& e : t.per_k) csv += to_csv_row(e) + "\n";
    p.csv = std::move(csv);
    return p;
  };

  // count ...
  CLI::App* count = subcommand(&app, "count", "Counting machinery");
  count->require_subcommand(1);

  std::string simplex_a;
  std::optional<int> simplex_s;
  CLI::App* simplex = subcommand(count, "simplex", "Lattice points with sum x_i/a_i < 1");
  simplex->add_option("--a", simplex_a, "Positive rationals, e.g. 2,2,3/2")->required();
  simplex->add_option("--s", simplex_s, "Split parameter (default: every s)");
  handlers[simplex] = [&]() {
    const auto a = parse_rational_list(simplex_a);
    Payload p;
    p.result["count"] = simplex_lattice_count(a, budget_or(common, kDefaultCountBudget)).get_str();
    Json bounds = Json::array();
    if (simplex_s) {
      bounds.push_back(to_json(simplex_bounds(a, *simplex_s)));
    } else {
      for (int s = 0; s < static_cast<int>(a.size()); ++s) bounds.push_back(to_json(simplex_bounds(a, s)));
    }
    p.result["bounds"] = std::move(bounds);
    return p;
  };

  GridArgs local_grid;
  std::string local_target, local_ell = "1";
  double local_C = 0.0;
  auto add_local = [&](CLI::App* s) {
    add_grid(s, local_grid);
    s->add_option("--target", local_target, "Vertex, e.g. 5 or 3,4")->required();
    s->add_option("--C", local_C, "Distance cutoff C")->required();
  };

  CLI::App* lowweight = subcommand(count, "lowweight", "Low-weight distributions on Lambda_C(v)");
  add_local(lowweight);
  lowweight->add_option("--ell", local_ell, "Weight bound (rational)")->capture_default_str();
  handlers[lowweight] = [&]() {
    const GridSpec g = local_grid.grid();
    Payload p;
    p.result["count"] = count_low_weight_distributions(g, parse_vertex(local_target), local_C,
                                                       parse_rational(local_ell),
                                                       budget_or(common, kDefaultCountBudget))
                            .get_str();
    return p;
  };

  CLI::App* lambda = subcommand(count, "lambda", "The neighbourhood Lambda_C(v)");
  add_local(lambda);
  handlers[lambda] = [&]() {
    const GridSpec g = local_grid.grid();
    const Vertex v = parse_vertex(local_target);
    const auto set = lambda_set(g, v, local_C);
    Payload p;
    Json vs = Json::array();
    for (const Vertex& w : set) vs.push_back(to_json(w));
    p.result["vertices"] = std::move(vs);
    p.result["size"] = set.size();
    if (local_C > 1.0 && g.is_cubic()) {
      const CentralityClass cls = central_class(g, v, local_C);
      p.result["t"] = cls.t;
      p.result["size_estimate"] = lambda_size_estimate(g, cls.t, local_C);
    }
    return p;
  };

  CLI::App* tailsum = subcommand(count, "tailsum", "Sum of 1/qd(w,v) over qd(w,v) > C");
  add_local(tailsum);
  handlers[tailsum] = [&]() {
    const GridSpec g = local_grid.grid();
    const Rational r = tail_weight_sum(g, parse_vertex(local_target), local_C);
    Payload p;
    p.result["value"] = to_string(r);
    p.result["value_float"] = to_double(r);
    return p;
  };

  CLI::App* product = subcommand(count, "product", "Product of qd(v,w) over Lambda_C(v)");
  add_local(product);
  handlers[product] = [&]() {
    const GridSpec g = local_grid.grid();
    const BigInt r = weight_product(g, parse_vertex(local_target), local_C);
    Payload p;
    p.result["product"] = r.get_str();
    p.result["log_product"] = std::log(mpz_get_d(r.get_mpz_t()));
    return p;
  };

  // mahler
  unsigned mahler_t = 0, mahler_q = 2;
  bool mahler_compare = false;
  CLI::App* mahler = subcommand(&app, "mahler", "Partitions of q^t into powers of q");
  mahler->add_option("--t", mahler_t)->required();
  mahler->add_option("--q", mahler_q)->capture_default_str();
  mahler->add_flag("--compare", mahler_compare, "Compare the quoted expansion for t = 2..T");
  handlers[mahler] = [&]() {
    Payload p;
    p.result["t"] = mahler_t;
    p.result["q"] = mahler_q;
    p.result["h"] = mahler_h(mahler_t, mahler_q, budget_or(common, std::uint64_t{1} << 22)).get_str();
    if (mahler_t >= 2) p.result["asymptotic_exponent"] = mahler_asymptotic(mahler_t, mahler_q);
    if (mahler_compare) p.result["comparison"] = to_json(mahler_comparison(mahler_q, mahler_t));
    return p;
  };

  // formula
  CLI::App* formula = subcommand(&app, "formula", "Closed-form threshold evaluators");
  formula->require_subcommand(1);
  double f_n = 0.0, f_shift = 0.0;
  int f_d = 1;
  std::string f_q;
  CLI::App* thm1 = subcommand(formula, "thm1", "Grid threshold formula");
  thm1->add_option("--n", f_n)->required();
  thm1->add_option("--d", f_d)->capture_default_str();
  thm1->add_option("--q", f_q, "Costs, one per axis")->required();
  thm1->add_option("--gamma", f_shift, "The O(1) term")->capture_default_str();
  handlers[thm1] = [&]() {
    std::vector<double> q;
    for (const Rational& r : parse_rational_list(f_q)) q.push_back(to_double(r));
    Payload p;
    p.result["value"] = theorem1_value(f_n, f_d, q, f_shift);
    return p;
  };
  CLI::App* thm2 = subcommand(formula, "thm2", "Path threshold formula");
  thm2->add_option("--n", f_n)->required();
  thm2->add_option("--q", f_q)->required();
  thm2->add_option("--delta", f_shift, "The o(1) term")->capture_default_str();
  handlers[thm2] = [&]() {
    Payload p;
    p.result["value"] = theorem2_value(f_n, to_double(parse_rational(f_q)), f_shift);
    return p;
  };

  // graham
  int g_n0 = 1, g_smax = 5;
  double g_C = 1.0, g_b = 1.0;
  CLI::App* graham = subcommand(&app, "graham", "Product-conjecture counterexample arithmetic");
  graham->add_option("--n0", g_n0)->required();
  graham->add_option("--C", g_C)->required();
  graham->add_option("--b", g_b, "Upper bound on the threshold of Q_{n0}")->required();
  graham->add_option("--smax", g_smax)->capture_default_str();
  handlers[graham] = [&]() {
    Payload p;
    Json rows = Json::array();
    std::string csv = "s,log2_upper,log2_lower,contradiction\n";
    for (const GrahamRow& r : graham_table(g_n0, g_C, g_b, g_smax)) {
      rows.push_back(to_json(r));
      csv += std::to_string(r.s) + "," + format_double(r.log2_upper) + "," +
             format_double(r.log2_lower) + "," + (r.contradiction ? "1" : "0") + "\n";
    }
    p.result["rows"] = std::move(rows);
    p.csv = std::move(csv);
    return p;
  };

  // distance
  GridArgs d_grid;
  std::string d_a, d_b;
  CLI::App* distance = subcommand(&app, "distance", "Pebbling and vector distance");
  add_grid(distance, d_grid);
  distance->add_option("--a", d_a)->required();
  distance->add_option("--b", d_b)->required();
  handlers[distance] = [&]() {
    const GridSpec g = d_grid.grid();
    const Vertex a = parse_vertex(d_a), b = parse_vertex(d_b);
    Payload p;
    p.result["pebbling_distance"] = pebbling_distance(g, a, b).get_str();
    p.result["vector_distance"] = vector_distance(g, a, b);
    return p;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  // deepest selected subcommand
  CLI::App* leaf = &app;
  std::string command;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    command += (command.empty() ? "" : " ") + leaf->get_name();
  }
  const auto handler = handlers.find(leaf);
  if (handler == handlers.end()) {
    err << "unknown command\n";
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Payload payload;
  try {
    payload = handler->second();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

  Json manifest;
  manifest["command"] = command;
  Json params = manifest_params(&app);
  for (CLI::App* a = &app; !a->get_subcommands().empty();) {
    a = a->get_subcommands().front();
    const Json sub = manifest_params(a);
    for (const auto& [key, value] : sub.items()) params[key] = value;
  }
  manifest["params"] = std::move(params);
  manifest["seed"] = common.seed;
  manifest["version"] = kVersion;
  manifest["duration_ms"] = elapsed.count();

  if (common.format == "csv") {
    if (!payload.csv) {
      err << "error: '" << command << "' has no CSV form\n";
      return kUsage;
    }
    out << csv_with_manifest(manifest, *payload.csv);
  } else {
    Json doc;
    doc["command"] = command;
    doc["result"] = std::move(payload.result);
    doc["manifest"] = std::move(manifest);
    out << doc.dump(2) << "\n";
  }
  out.flush();
  return payload.exit_code;
}

}  // namespace pebbling::cli
