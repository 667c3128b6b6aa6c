// Copyright 2026 The slhkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "slhkit/commands.hpp"
#include "slhkit/fock_sim.hpp"
#include "slhkit/serialize.hpp"

using namespace slh;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(SLHKIT_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("slhkit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Scalar entry(const Json& m, std::size_t r, std::size_t c) { return io::scalar_from_json(m[r][c]); }

}  // namespace

TEST_CASE("format_double") {
  CHECK(cli::format_double(0.1) == "0.10000000000000001");
  CHECK(cli::format_double(std::nan("")) == "nan");
  CHECK(cli::format_double(1e-3) == "0.001");
}

TEST_CASE("compose classical series") {
  const Result r = run_cli({"compose", "--input", fixture("two_scalar_series.json")});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["algebra"] == "classical");
  CHECK(doc["expression"] == "V2 <| V1");
  const Json& m = doc["result"];
  CHECK(entry(m["K"], 0, 0) == Scalar(-2));
  CHECK(entry(m["M"], 0, 0) == Scalar(2));
  CHECK(entry(m["L"], 0, 0) == Scalar(3));
  CHECK(entry(m["N"], 0, 0) == Scalar(1));
}

TEST_CASE("compose quantum series gives the same scalar values") {
  const Result r = run_cli({"compose", "-i", fixture("quantum_two_scalar.json")});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["algebra"] == "quantum");
  const Json& m = doc["result"];
  CHECK(m["type"] == "coeff");
  CHECK(entry(m["K"], 0, 0) == Scalar(-2));
  CHECK(entry(m["M"], 0, 0) == Scalar(2));
  CHECK(entry(m["L"], 0, 0) == Scalar(3));
  CHECK(entry(m["N"], 0, 0) == Scalar(1));
  CHECK(doc["unitarity"]["unitary"] == false);
  CHECK(!doc.contains("slh"));
}

TEST_CASE("compose cascade") {
  const Result r = run_cli({"compose", "--cascade", "--input", fixture("cascade.json")});
  REQUIRE(r.code == 0);
  const Json m = Json::parse(r.out)["result"];
  CHECK(entry(m["K"], 0, 0) == Scalar(-1));
  CHECK(entry(m["K"], 0, 1) == Scalar(0));
  CHECK(entry(m["K"], 1, 0) == Scalar(1));
  CHECK(entry(m["K"], 1, 1) == Scalar(-2));
  CHECK(entry(m["M"], 1, 0) == Scalar(1));
  CHECK(entry(m["L"], 0, 0) == Scalar(1));
  CHECK(entry(m["L"], 0, 1) == Scalar(2));
}

TEST_CASE("compose with an identity system leaves the model unchanged") {
  const std::string path = temp_file("identity.json", R"({
    "systems": {
      "I": {"type": "slh", "S": [[1, 0], [0, 1]], "L": [[0], [0]], "H": [[0]]},
      "A": {"type": "slh", "S": [[0, 1], [1, 0]], "L": [[0.5], [[0, 1]]], "H": [[2]]}
    },
    "expression": "I <| A <| I"
  })");
  const Result r = run_cli({"compose", "--input", path});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["unitarity"]["unitary"] == true);
  const Json& slh = doc["slh"];
  CHECK(std::abs(entry(slh["S"], 0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(entry(slh["L"], 1, 0) - Scalar(0, 1)) < 1e-15);
  CHECK(std::abs(entry(slh["H"], 0, 0) - 2.0) < 1e-15);
}

TEST_CASE("compose unitary networks") {
  for (const char* name : {"unitary.json", "concat_unitary.json"}) {
    const Result r = run_cli({"compose", "--require-unitary", "--input", fixture(name)});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["unitarity"]["isometry_residual"].get<double>() < 1e-10);
    CHECK(doc["slh"]["type"] == "slh");
  }
  CHECK(run_cli({"compose", "--require-unitary", "--input", fixture("scaled_n.json")}).code == 1);
  CHECK(run_cli({"compose", "--input", fixture("scaled_n.json")}).code == 0);
}

TEST_CASE("compose rejects mixed algebras and bad input") {
  const Result mixed = run_cli({"compose", "--input", fixture("mixed.json")});
  CHECK(mixed.code == 1);
  CHECK(mixed.err.find("mixes") != std::string::npos);
  CHECK(run_cli({"compose", "--input", "/nonexistent.json"}).code == 2);
  CHECK(run_cli({"compose", "--input", fixture("empty.json")}).code == 2);
  CHECK(run_cli({"compose"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
  const std::string bad_expr = temp_file("bad_expr.json", R"({"systems": {}, "expression": "A <|"})");
  CHECK(run_cli({"compose", "--input", bad_expr}).code == 2);
  const std::string unknown = temp_file("unknown.json", R"({"systems": {}, "expression": "A"})");
  CHECK(run_cli({"compose", "--input", unknown}).code == 2);
  const std::string dims = temp_file("dims.json", R"({
    "systems": {"A": {"type": "slh", "S": [[1]], "L": [[1]], "H": [[0]]},
                "B": {"type": "slh", "S": [[1, 0], [0, 1]], "L": [[1], [0]], "H": [[0]]}},
    "expression": "A <| B"})");
  CHECK(run_cli({"compose", "--input", dims}).code == 1);
}

TEST_CASE("compose writes to --output") {
  const auto out = std::filesystem::temp_directory_path() / "slhkit_test_out.json";
  std::filesystem::remove(out);
  const Result r = run_cli({"compose", "--input", fixture("two_scalar_series.json"), "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(out));
}

TEST_CASE("check reports residuals") {
  const Result ok = run_cli({"check", "--input", fixture("unitary.json")});
  CHECK(ok.code == 0);
  const Json doc = Json::parse(ok.out);
  for (const auto& [name, entry] : doc["systems"].items()) {
    CHECK(entry["isometry_residual"].get<double>() < 1e-10);
    CHECK(entry["coisometry_residual"].get<double>() < 1e-10);
    CHECK(entry["inverse_residual"].get<double>() < 1e-10);
  }
  REQUIRE(doc["nodes"].size() == 2);
  for (const auto& node : doc["nodes"]) CHECK(node["homomorphism_residual"].get<double>() < 1e-12);

  const Result concat = run_cli({"check", "--input", fixture("concat_unitary.json")});
  CHECK(concat.code == 0);

  const Result bad = run_cli({"check", "--input", fixture("scaled_n.json")});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)["systems"]["X"]["isometry_residual"].get<double>() > 0.5);

  const Result empty = run_cli({"check", "--input", fixture("empty.json")});
  CHECK(empty.code == 0);
  CHECK(Json::parse(empty.out)["systems"].empty());

  const Result classical = run_cli({"check", "--input", fixture("two_scalar_series.json")});
  CHECK(classical.code == 0);
}

TEST_CASE("trotter on the reference pair") {
  const Result r = run_cli({"trotter", "--input", fixture("reference_pair.json")});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<std::string>{"m", "dt", "abs_error", "rel_error", "empirical_order"});
  CHECK(rows[1][0] == "32");
  CHECK(rows[1][4] == "nan");
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][2]) <= std::stod(rows[i - 1][2]));
  CHECK(std::stod(rows.back()[2]) < 1e-3);

  const Result swapped = run_cli({"trotter", "--swap", "--input", fixture("reference_pair.json")});
  CHECK(swapped.code == 0);
  CHECK(swapped.out != r.out);

  const Result js = run_cli({"trotter", "--format", "json", "--input", fixture("reference_pair.json")});
  CHECK(js.code == 0);
  CHECK(Json::parse(js.out).size() == 6);
  CHECK(Json::parse(js.out)[0]["empirical_order"].is_null());
}

TEST_CASE("trotter threshold failures still write the table") {
  const Json doc = io::read_json_file(fixture("reference_pair.json"));
  Json strict = doc;
  strict["thresholds"]["final_error"] = 1e-9;
  const Result r = run_cli({"trotter", "--input", temp_file("strict.json", strict.dump())});
  CHECK(r.code == 1);
  CHECK(csv(r.out).size() == 7);
  CHECK(r.err.find("threshold") != std::string::npos);

  Json missing = doc;
  missing["experiment"]["grid_sizes"] = Json::array();
  CHECK(run_cli({"trotter", "--input", temp_file("missing.json", missing.dump())}).code == 2);
  CHECK(run_cli({"trotter", "--input", fixture("two_scalar_series.json")}).code == 1);
}

TEST_CASE("trotter with a vanishing upstream generator matches the plain simulator") {
  const Result r = run_cli({"trotter", "--input", fixture("g1_zero.json")});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);

  const Json doc = io::read_json_file(fixture("g1_zero.json"));
  const auto g2 = std::get<qsde::SLHTriple>(io::model_from_json(doc["systems"]["G2"]));
  const qsde::CoeffMatrix g = qsde::slh_to_coeff(g2);
  fock::MatrixElementSpec spec{io::vector_from_json(doc["experiment"]["u"]), io::vector_from_json(doc["experiment"]["v"]),
                               io::step_function_from_json(doc["experiment"]["f"]),
                               io::step_function_from_json(doc["experiment"]["g"])};
  const Scalar exact = fock::ode_oracle(g, spec, 0.0, 1.0);
  const int grid[] = {16, 32, 64, 128};
  for (std::size_t i = 0; i < 4; ++i) {
    const double plain = std::abs(fock::simulate_V(g, fock::Partition::uniform(0.0, 1.0, grid[i]), spec) - exact);
    CHECK(std::stod(rows[i + 1][2]) == doctest::Approx(plain).epsilon(1e-12));
  }
}

TEST_CASE("holevo, exp and log") {
  const Result h = run_cli({"holevo", "--input", fixture("holevo_scalar.json")});
  CHECK(h.code == 0);
  CHECK(csv(h.out).size() == 7);

  const Result e = run_cli({"exp", "--input", fixture("lie_small.json")});
  REQUIRE(e.code == 0);
  const Json g = Json::parse(e.out);
  CHECK(g["type"] == "coeff");
  Json wrapped{{"systems", {{"G", g}}}};
  const Result l = run_cli({"log", "--system", "G", "--input", temp_file("g.json", wrapped.dump())});
  REQUIRE(l.code == 0);
  const Json back = Json::parse(l.out);
  const Json orig = io::read_json_file(fixture("lie_small.json"))["systems"]["H"];
  for (const char* field : {"kappa", "mu", "lambda", "nu"})
    CHECK((io::matrix_from_json(back[field]) - io::matrix_from_json(orig[field])).norm() < 1e-8);

  CHECK(run_cli({"exp", "--input", fixture("unitary.json")}).code == 2);
  CHECK(run_cli({"exp", "--system", "A", "--input", fixture("unitary.json")}).code == 1);
  CHECK(run_cli({"log", "--input", fixture("scaled_n.json")}).code == 0);
}

TEST_CASE("classical response") {
  const Result r = run_cli({"classical-response", "--input", fixture("classical_response.json")});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"t", "y0_re", "y0_im", "y0_exact_re", "y0_exact_im"});
  REQUIRE(rows.size() == 6);
  CHECK(std::abs(std::stod(rows[5][1]) - (1.0 - std::exp(-1.0))) < 1e-6);
  CHECK(std::abs(std::stod(rows[5][3]) - (1.0 - std::exp(-1.0))) < 1e-12);
}

TEST_CASE("weyl-check table") {
  const Result r = run_cli({"weyl-check", "--cutoffs", "4,12", "--norm-caps", "0.5", "--pairs", "2", "--samples", "3"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"cutoff", "norm_cap", "analytic_residual", "truncated_residual"});
  CHECK(std::stod(rows[2][2]) < 1e-12);
  CHECK(std::stod(rows[2][3]) < 1e-6);
  CHECK(std::stod(rows[2][3]) < std::stod(rows[1][3]));
  CHECK(run_cli({"weyl-check", "--modes", "9"}).code == 2);
}

TEST_CASE("outputs are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compose", "--input", fixture("unitary.json")},
           {"check", "--input", fixture("concat_unitary.json")},
           {"trotter", "--input", fixture("reference_pair.json")},
           {"weyl-check"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}
