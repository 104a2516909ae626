#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pebbling/cli.hpp"
#include "pebbling/json_io.hpp"

using namespace pebbling;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli parsing helpers") {
  CHECK(cli::parse_shape("5") == std::vector<int>{5});
  CHECK(cli::parse_shape("4x4x3") == std::vector<int>{4, 4, 3});
  CHECK_THROWS_AS(cli::parse_shape("4x"), DomainError);
  CHECK_THROWS_AS(cli::parse_shape("4xa"), DomainError);
  CHECK_THROWS_AS(cli::parse_shape("0"), DomainError);
  CHECK(cli::parse_int_list("2,3") == std::vector<long long>{2, 3});
  CHECK_THROWS_AS(cli::parse_int_list("2,,3"), DomainError);
  CHECK(cli::parse_rational_list("3/2,4") == std::vector<Rational>{Rational(3, 2), Rational(4)});
}

TEST_CASE("cli solve") {
  const Outcome o = run({"solve", "--shape", "3", "--q", "2", "--counts", "0,0,4", "--target", "1", "--method", "exact"});
  REQUIRE(o.code == 0);
  const Json j = o.json();
  CHECK(j["command"] == "solve");
  CHECK(j["result"]["result"]["verdict"] == "solvable");
  CHECK(j["result"]["result"]["certificate"].size() >= 2);
  CHECK(j["result"]["certificate_replays"] == true);
  CHECK(j["manifest"]["version"] == cli::kVersion);
  CHECK(j["manifest"]["params"]["counts"] == "0,0,4");

  const Json all = run({"solve", "--shape", "3", "--q", "2", "--counts", "2,0,0"}).json();
  CHECK(all["result"]["solvability"]["verdict"] == "unsolvable");
  CHECK(all["result"]["solvability"]["first_failure"] == Json::array({3}));

  const Json criteria = run({"solve", "--shape", "3", "--q", "2", "--counts", "1,0,1", "--target", "2",
                             "--method", "criteria"})
                            .json();
  CHECK(criteria["result"]["fractional_necessary"]["necessary_met"] == true);
  CHECK(criteria["result"]["path_criterion"] == false);
}

TEST_CASE("cli solve reads configuration files") {
  const auto path = std::filesystem::temp_directory_path() / "pebble_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"shape":[2,2],"q":[2,2],"counts":[4,0,0,0]})";
  }
  const Outcome o = run({"solve", "--config", path.string(), "--target", "2,2"});
  CHECK(o.code == 0);
  CHECK(o.json()["result"]["result"]["verdict"] == "solvable");

  {
    std::ofstream f(path);
    f << R"({"shape":[2,2],"q":[2,2],"counts":[4,0,0]})";
  }
  CHECK(run({"solve", "--config", path.string(), "--target", "2,2"}).code == cli::kUsage);
  std::filesystem::remove(path);
}

TEST_CASE("cli pnum, mahler and formulas") {
  CHECK(run({"pnum", "--shape", "2x2", "--q", "2,2"}).json()["result"]["pebbling_number"] == 4);
  CHECK(run({"mahler", "--t", "2", "--q", "2"}).json()["result"]["h"] == "4");
  const Json cmp = run({"mahler", "--t", "12", "--compare"}).json();
  CHECK(cmp["result"]["comparison"]["diverges"] == true);
  const double v = run({"formula", "thm2", "--n", "100", "--q", "2"}).json()["result"]["value"];
  CHECK(v == doctest::Approx(278.16495));
  CHECK(run({"formula", "thm1", "--n", "100", "--d", "1", "--q", "2"}).json()["result"]["value"] == v);
  const Json g = run({"graham", "--n0", "4", "--C", "1", "--b", "4", "--smax", "3"}).json();
  CHECK(g["result"]["rows"][1]["contradiction"] == true);
}

TEST_CASE("cli counting commands") {
  CHECK(run({"count", "simplex", "--a", "4,2"}).json()["result"]["count"] == "6");
  CHECK(run({"count", "lowweight", "--shape", "9", "--q", "2", "--target", "5", "--C", "2"}).json()["result"]["count"] ==
        "3");
  CHECK(run({"count", "product", "--shape", "9", "--q", "2", "--target", "5", "--C", "4"}).json()["result"]["product"] ==
        "64");
  CHECK(run({"count", "tailsum", "--shape", "9", "--q", "2", "--target", "5", "--C", "4"}).json()["result"]["value"] ==
        "3/8");
  CHECK(run({"count", "lambda", "--shape", "10", "--q", "2", "--target", "5", "--C", "4"}).json()["result"]["size"] == 5);
  CHECK(run({"distance", "--shape", "5x5", "--q", "2,3", "--a", "1,1", "--b", "3,2"}).json()["result"]["pebbling_distance"] ==
        "12");
}

TEST_CASE("cli sampling and probabilities") {
  const Json s = run({"--seed", "4", "sample", "--shape", "3", "--q", "2", "--k", "5", "--count", "3"}).json();
  CHECK(s["result"]["configurations"].size() == 3);
  CHECK(s["manifest"]["seed"] == 4);
  CHECK(run({"--seed", "4", "sample", "--shape", "3", "--q", "2", "--k", "5", "--count", "3"}).json()["result"] ==
        s["result"]);

  CHECK(run({"event", "--shape", "3", "--q", "2", "--k", "2", "--pin", "1:1", "--pin", "2:1"}).json()["result"]["probability"] ==
        "1/6");
  CHECK(run({"prob-exact", "--shape", "3", "--q", "2", "--k", "3"}).json()["result"]["probability"] == "4/5");

  const Outcome csv = run({"--format", "csv", "--seed", "1", "mc", "--shape", "3", "--q", "2", "--k", "2", "--trials", "100"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("# manifest: ", 0) == 0);
  CHECK(csv.out.find("\nk,trials,successes,p_hat,ci_lo,ci_hi,max_pile_max,budget_exceeded\n2,100,") != std::string::npos);

  // options may also follow the subcommand
  CHECK(run({"mc", "--shape", "3", "--q", "2", "--k", "2", "--trials", "100", "--seed", "1"}).json()["result"]["successes"] ==
        run({"--seed", "1", "mc", "--shape", "3", "--q", "2", "--k", "2", "--trials", "100"}).json()["result"]["successes"]);

  const Json ph = run({"phalf", "--shape", "2", "--q", "2", "--kmin", "1", "--kmax", "4", "--exact-limit", "100"}).json();
  CHECK(ph["result"]["k_low"] == 1);
  CHECK(ph["result"]["k_high"] == 2);
}

TEST_CASE("cli errors and exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"solve", "--shape", "3x", "--q", "2", "--counts", "1,1,1", "--target", "1"}).code == cli::kUsage);
  CHECK(run({"solve", "--shape", "3", "--q", "2", "--counts", "1,1", "--target", "1"}).code == cli::kUsage);
  CHECK(run({"solve", "--shape", "3", "--q", "1", "--counts", "1,1,1", "--target", "1"}).code == cli::kUsage);
  CHECK(run({"solve", "--shape", "3x3", "--q", "2", "--counts", "1,1,1,1,1,1,1,1,1", "--target", "1,1"}).code == cli::kUsage);
  CHECK(run({"solve", "--shape", "3", "--q", "2", "--counts", "1,1,1", "--target", "4"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "pnum", "--shape", "2", "--q", "2"}).code == cli::kUsage);
  CHECK(run({"--format", "csv", "pnum", "--shape", "2", "--q", "2"}).code == cli::kUsage);

  const Outcome budget = run({"--budget", "2", "pnum", "--shape", "3x3", "--q", "2,2"});
  CHECK(budget.code == cli::kBudget);
  CHECK(budget.out.empty());
  CHECK(run({"--budget", "1", "solve", "--shape", "3x3x3", "--q", "2,2,2", "--counts",
             "9,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,9", "--target", "2,2,2"})
            .code == cli::kBudget);

  const Outcome help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
}
