// Copyright 2026 The fermice Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "fermice/cli/commands.hpp"
#include "fermice/ice/io.hpp"
#include "fermice/ring/io.hpp"

using namespace fermice;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fermice");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string line_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
  }
  return {};
}

}  // namespace

TEST_CASE("bracket golden values") {
  const auto plus = run({"bracket", "--plus", "--lambda", "5,3,2", "--mu", "4,3"});
  CHECK(plus.code == 0);
  CHECK(ring::parse_poly(line_value(plus.out, "oracle: ")) == ring::parse_poly("-x1^3*(1+t1)^2"));
  CHECK(count(plus.out, "EQUAL") == 1);
  const auto minus = run({"bracket", "--minus", "--k", "6", "--lambda", "5,3,2", "--mu", "4,3"});
  CHECK(minus.code == 0);
  CHECK(ring::parse_poly(line_value(minus.out, "closed: ")) == ring::parse_poly("t1*(1+t1)^2*x1^-3"));
  const auto zero = run({"bracket", "--plus", "--lambda", "3,1", "--mu", "4"});
  CHECK(zero.code == 0);
  CHECK(line_value(zero.out, "oracle: ") == "0");
}

TEST_CASE("bracket usage errors") {
  const auto weak = run({"bracket", "--plus", "--lambda", "3,3", "--mu", "2"});
  CHECK(weak.code == 2);
  CHECK(weak.err.find("strict") != std::string::npos);
  CHECK(run({"bracket", "--plus", "--lambda", "3,x", "--mu", "2"}).code == 2);
  CHECK(run({"bracket", "--lambda", "3,1", "--mu", "2"}).code == 2);
  CHECK(run({"bracket", "--minus", "--k", "3", "--lambda", "3,1", "--mu", "2"}).code == 2);
  CHECK(run({"bracket", "--plus", "--lambda", "3,1", "--mu", "2,1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("partition functions") {
  const auto all = run({"pf", "--lambda", "2,1", "--scheme", "delta", "--all"});
  CHECK(all.code == 0);
  CHECK(count(all.out, "x2*t2 + x1") == 3);
  CHECK(count(all.out, "AGREE") == 1);
  CHECK(run({"pf", "--lambda", "1", "--scheme", "delta"}).out == "1\n");
  CHECK(run({"pf", "--lambda", "2,1", "--scheme", "delta", "--set", "t1=0,t2=0"}).out == "x1\n");
  CHECK(run({"pf", "--lambda", "3,1", "--scheme", "ones"}).out == "3\n");
  CHECK(run({"pf", "--lambda", "3,1", "--scheme", "ones", "--method", "chain"}).code == 2);
  CHECK(run({"pf", "--lambda", "3,1", "--scheme", "square"}).code == 2);
  CHECK(run({"pf", "--lambda", "4,2,1", "--scheme", "gamma", "--all"}).code == 0);
}

TEST_CASE("enumerate emits readable states") {
  const auto r = run({"enumerate", "--lambda", "3,1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  for (const auto& s : j["states"]) CHECK(ice::is_admissible(ice::state_from_json(s)));
  const auto b = nlohmann::json::parse(run({"enumerate", "--lambda", "2,1", "--model", "bend"}).out);
  for (const auto& s : b["states"]) CHECK(ice::is_admissible(ice::bend_state_from_json(s)));
  CHECK(run({"enumerate", "--lambda", "2,1", "--model", "torus"}).code == 2);
}

TEST_CASE("render the three-row example") {
  const auto r = run({"render", "ice", "--example"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("rows=3 cols=5") != std::string::npos);
  CHECK(count(r.out, "class=\"vertical\"") == 4 * 5);
  CHECK(count(r.out, "class=\"horizontal\"") == 3 * 6);
  // Up arrows: 3 on the top boundary and 2 + 1 in the interior rows.
  CHECK(count(r.out, "class=\"arrow up\"") == 6);
  CHECK(count(r.out, "class=\"arrow right\"") == 3 + 2 + 3);
  CHECK(run({"render", "ice", "--example"}).out == r.out);
}

TEST_CASE("render the displayed bend state") {
  const auto r = run({"render", "bend", "--example"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("rows=6") != std::string::npos);
  CHECK(count(r.out, "<path class=\"uturn") == 3);
  CHECK(count(r.out, "uturn up") == 2);
  CHECK(count(r.out, "uturn down") == 1);
}

TEST_CASE("render the vacuum maya diagram") {
  const auto r = run({"render", "maya"});
  REQUIRE(r.code == 0);
  const std::regex circle("class=\"(occupied|empty)\" cx=\"(\\d+)\"");
  std::vector<std::pair<int, bool>> sites;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), circle); it != std::sregex_iterator(); ++it) {
    sites.emplace_back(std::stoi((*it)[2]), (*it)[1] == "occupied");
  }
  REQUIRE(sites.size() == 6);
  std::smatch m;
  REQUIRE(std::regex_search(r.out, m, std::regex("class=\"origin\" x1=\"(\\d+)\"")));
  const int origin = std::stoi(m[1]);
  for (const auto& [x, filled] : sites) CHECK(filled == (x < origin));
}

TEST_CASE("render patterns and inputs") {
  const auto p = run({"render", "pattern", "--lambda", "3,1", "--index", "1"});
  CHECK(p.code == 0);
  CHECK(count(p.out, "class=\"entry\"") == 3);
  CHECK(run({"render", "pattern", "--lambda", "3,1", "--index", "7"}).code == 2);
  CHECK(run({"render", "cube"}).code == 2);
  const std::string path = "test_cli_bad_state.json";
  {
    std::ofstream f(path);
    f << R"({"lambda":[2,1],"rows":2,"cols":2,"vertical_edges":[[1,1],[1,1],[0,0]],)"
      << R"("horizontal_edges":[[1,1,1],[1,1,1]],"pattern":[[2,1],[1]]})";
  }
  CHECK(run({"render", "ice", "--input", path}).code == 2);
  CHECK(run({"render", "ice", "--input", "no_such_file.json"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "--suite", "phat", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("phat: PASS") != std::string::npos);
  CHECK(r.out.find("phat(2) = x1*z1 - x1*z2 + y1*z1 - y1*z2") != std::string::npos);
  const auto j = run({"verify", "--suite", "wick", "--json"});
  CHECK(nlohmann::json::parse(j.out)[0]["passed"] == true);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "phat", "--n", "7"}).code == 2);
}

TEST_CASE("bench csv") {
  const auto r = run({"bench", "--n", "2", "--k-max", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("lambda,method,seconds,terms,states\n", 0) == 0);
  CHECK(count(r.out, "\n") == 1 + 2 * 3);
  CHECK(r.out.find("\"(2,1)\",enumerate,") != std::string::npos);
}

TEST_CASE("size caps from the environment") {
  ::setenv("FERMICE_CAPS", "k_max=1,n_max=2", 1);
  CHECK(run({"bench", "--n", "2", "--k-max", "2"}).code == 2);
  CHECK(run({"pf", "--lambda", "3,2,1"}).code == 2);
  CHECK(run({"pf", "--lambda", "3,1"}).code == 0);
  ::setenv("FERMICE_CAPS", "bogus=1", 1);
  CHECK(run({"pf", "--lambda", "3,1"}).code == 2);
  ::unsetenv("FERMICE_CAPS");
}
