/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "singular_sos/problem.hpp"
#include "support.hpp"

using namespace testing;
using Json = nlohmann::json;

namespace {

const std::string kData = SSOS_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "singular-sos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = singular_sos::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("ssos_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("problem grammar") {
  Problem p = parse_problem(
      "# comment\n"
      "vars x, y;\n"
      "minimize x^2 + y;  # trailing\n"
      "subject to x*y = 1;\n"
      "subject to y >= x;\n"
      "subject to x <= 3;\n");
  CHECK(p.variables == std::vector<std::string>{"x", "y", "z1", "z2"});
  CHECK(p.declared == 2);
  CHECK(p.objective == P("x^2 + y", p.variables));
  REQUIRE(p.constraints.size() == 3);
  CHECK(p.constraints[0] == P("x*y - 1", p.variables));
  CHECK(p.constraints[1] == P("y - x - z1^2", p.variables));
  CHECK(p.constraints[2] == P("3 - x - z2^2", p.variables));
}

TEST_CASE("slack names avoid declared names") {
  Problem p = parse_problem("vars z1 x; minimize x; subject to x >= 0;");
  CHECK(p.variables == std::vector<std::string>{"z1", "x", "z2"});
  CHECK(p.constraints[0] == P("x - z2^2", p.variables));
}

TEST_CASE("unconstrained problems parse") {
  Problem p = parse_problem("vars x;\nminimize (x - 1)^2;\n");
  CHECK(p.constraints.empty());
  CHECK(parse_problem(format_problem(p)) == p);
}

TEST_CASE("round trip on fixtures") {
  for (const char* f : {"pop5.prob", "rays.prob", "cusp.prob", "rep.prob", "circle.prob", "halfline.prob"}) {
    Problem p = read_problem_file(data(f));
    CHECK_MESSAGE(parse_problem(format_problem(p)) == p, f);
  }
}

TEST_CASE("round trip on random problems") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Problem p;
    p.variables = names(n);
    p.declared = n;
    p.objective = random_poly(rng, n, 3, 6);
    for (int j = 0; j < trial % 3; ++j) p.constraints.push_back(random_poly(rng, n, 3, 4));
    std::erase_if(p.constraints, [](const Polynomial& g) { return g.is_zero(); });
    CHECK(parse_problem(format_problem(p)) == p);
  }
}

TEST_CASE("emit-problem re-parses to the same problem") {
  for (const char* f : {"halfline.prob", "pop5.prob", "cusp.prob"}) {
    Run r = run({"solve", data(f), "--emit-problem"});
    REQUIRE(r.code == 0);
    CHECK(parse_problem(r.out) == read_problem_file(data(f)));
  }
}

TEST_CASE("parse error positions") {
  auto where = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_problem(text);
    } catch (const ProblemParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("vars x y;\nminimize x +* y;\n") == std::pair<std::size_t, std::size_t>{2, 13});
  CHECK(where("vars x;\nminimize w;\n") == std::pair<std::size_t, std::size_t>{2, 10});
  CHECK(where("vars x;\nmaximize x;\n").first == 2);
  CHECK(where("vars x x;\nminimize x;\n").first == 1);
  CHECK(where("vars x;\nminimize x\n").first != 0);
  CHECK(where("vars x;\n").first != 0);
  CHECK(where("minimize 1;\n").first != 0);
  CHECK(where("vars x;\nminimize x;\nsubject to x = ;\n").first == 3);
  CHECK(where("vars x;\nminimize x;\nsubject to x;\n").first == 3);
}

TEST_CASE("cli reports parse errors with positions") {
  Run r = run({"solve", temp_file("bad.prob", "vars x y;\nminimize x +* y;\n")});
  CHECK(r.code == 1);
  CHECK(r.err.find("2:13") != std::string::npos);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(r.out.empty());
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"solve"}).code == 1);
  Run missing = run({"solve", data("does-not-exist.prob")});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);
  CHECK(run({"bounds", "--case", "nonsense", "-n", "2"}).code == 1);
}

TEST_CASE("decompose rays") {
  Run r = run({"decompose", data("rays.prob")});
  REQUIRE(r.code == 0);
  Json j = r.json();
  REQUIRE(j["A"].size() == 3);
  CHECK(j["B"].empty());
  std::vector<int> dims;
  for (const auto& n : j["A"]) dims.push_back(n["dim"].get<int>());
  CHECK(dims == std::vector<int>{2, 2, 1});
  CHECK(j["A"][2]["depth"] == 1);
}

TEST_CASE("kkt listing for the cusp") {
  Run r = run({"kkt", data("cusp.prob")});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["variables"] == Json::array({"x1", "x2", "lambda1"}));
  CHECK(j["polynomials"].size() == 3);
}

TEST_CASE("solve the cusp") {
  Run r = run({"solve", data("cusp.prob"), "--minimizer", "--no-direct"});
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["kind"] == "finite");
  CHECK(std::abs(j["value"].get<double>()) <= 1e-6);
  CHECK(j["exit_code"] == r.code);
  CHECK(j["minimizer"]["point"] == Json::array({"0", "0"}));
}

TEST_CASE("solve with pretty JSON after the subcommand") {
  Run r = run({"solve", data("circle.prob"), "--no-direct", "--json-pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\n  ") != std::string::npos);
  CHECK(std::abs(r.json()["value"].get<double>() + 1.0) <= 1e-6);
}

TEST_CASE("non-attained infimum exits with 2") {
  Run r = run({"solve", temp_file("na.prob", "vars x y;\nminimize x^2 + (x*y - 1)^2;\n")});
  CHECK(r.code == 2);
  Json j = r.json();
  CHECK(j["non_attainment"] == true);
  CHECK_FALSE(j["advisories"].empty());
}

TEST_CASE("bounds report") {
  Run r = run({"bounds", "--case", "kkt", "-n", "2", "-l", "1", "-d", "3"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["case"] == "kkt");
  CHECK(j["n"] == 2);
  CHECK(j["l"] == 1);
  CHECK(j["d"] == 3);
  CHECK(j["value"].is_null());
  CHECK(j["tree"].contains("op"));
  CHECK(j["magnitude"]["level"].get<int>() >= 2);
  CHECK_FALSE(j["expression"].get<std::string>().empty());
}

TEST_CASE("certify the representation fixture") {
  Run ok = run({"certify", data("rep.prob"), data("rep_cert.json")});
  CHECK(ok.code == 0);
  CHECK(ok.json()["verdict"] == "exact");

  Json cert = Json::parse(std::ifstream(data("rep_cert.json")));
  cert["xi"] = "1";
  Run bad = run({"certify", data("rep.prob"), temp_file("bad_cert.json", cert.dump())});
  CHECK(bad.code == 2);
  CHECK(bad.json()["verdict"] == "failed");
}

TEST_CASE("hyperbolic membership") {
  Run r = run({"hyperbolic", "--poly", "x1*x2", "--direction", "1,1", "--point", "1,2", "--point", "-1,2"});
  REQUIRE(r.code == 0);
  Json j = r.json();
  CHECK(j["hyperbolicity"]["certified_on_samples"] == true);
  REQUIRE(j["memberships"].size() == 2);
  CHECK(j["memberships"][0]["membership"] == "member");
  CHECK(j["memberships"][1]["membership"] == "non-member");
}

TEST_CASE("hyperbolic refutation") {
  Run r = run({"hyperbolic", "--poly", "x1^2 + x2^2", "--direction", "1,0", "--seed", "5"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.json()["hyperbolicity"]["witness"].is_null());
}

TEST_CASE("hyperbolic conversion feeds the solver") {
  Run r = run({"hyperbolic", "--poly", "x1*x2", "--direction", "1,1", "--to-pop", "--cost", "1,2", "--row", "1,1:1"});
  REQUIRE(r.code == 0);
  Problem p = parse_problem(r.out);
  CHECK(p.variables == std::vector<std::string>{"x1", "x2", "z1", "z2"});
  Run s = run({"solve", temp_file("lp.prob", r.out), "--no-direct"});
  CHECK(s.code == 0);
  CHECK(std::abs(s.json()["value"].get<double>() - 1.0) <= 1e-6);
}
