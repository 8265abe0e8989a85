#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef GPOLYLOG_CLI_PATH
#error "GPOLYLOG_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string("'") + GPOLYLOG_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
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
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("eval") {
  auto r = cli("eval --p 1 --q 1 --a 1 --b 1 --z 0.5 --route series");
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0] == "route");
  CHECK(rows[1][0] == "series");
  CHECK(std::abs(std::stod(rows[1][1]) - 0.6579242117) <= 1e-10);

  CHECK(cli("eval --p 1 --q 1 --a 0.5 --b 1.2 --z 0.5 --route single-integral").code == 2);

  r = cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 0 --route single-integral");
  REQUIRE(r.code == 0);
  CHECK(std::stod(csv(r.out)[1][1]) == 0.0);
}

TEST_CASE("eval error exit codes") {
  CHECK(cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 1.5").code == 2);
  CHECK(cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route nonsense").code == 2);
  CHECK(cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 0.99 --max-terms 16").code == 3);
  CHECK(cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route single-integral-quad --max-evals 20").code == 3);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("eval json") {
  const auto r = cli("eval --p 2 --q 1 --a 1.4 --b 1.2 --z 0.5 --route hypergeometric --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["manifest"]["command"] == "eval");
  CHECK(j["manifest"]["params"]["p"] == 2.0);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["route"] == "hypergeometric");
  CHECK(j["results"][0]["value_re"].get<double>() > 0);
  CHECK(cli("eval --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route series --route hypergeometric").code == 2);
}

TEST_CASE("lerch routes through the CLI") {
  for (const char* route : {"lerch-series", "lerch-lambda", "lerch-kernel"}) {
    CAPTURE(route);
    const auto r = cli(std::string("eval --s 2 --a 1 --z 0.5 --lambda 0.25 --route ") + route);
    REQUIRE(r.code == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(std::stod(rows[1][1]) - 1.1644810529) <= 1e-9);
  }
  CHECK(cli("eval --s 2 --a 1 --z 0.5 --route lerch-lambda --lambda 0.6").code == 2);
}

TEST_CASE("compare") {
  auto r = cli("compare --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route series --route single-integral "
               "--route double-integral --route double-integral-known --tol 1e-10");
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  int pairs = 0;
  for (const auto& row : rows)
    if (!row.empty() && row[0] == "pair") {
      ++pairs;
      CHECK(row.back() == "1");
    }
  CHECK(pairs == 6);

  CHECK(cli("compare --p 2 --q 3 --a 1.2 --b 1.5 --z 0.7 --route series --route hypergeometric").code == 0);
  CHECK(cli("compare --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route series --route double-integral --agree-abs 0")
            .code == 4);
  CHECK(cli("compare --p 1 --q 1 --a 1.4 --b 1.2 --z 0.5 --route series").code == 2);
}

TEST_CASE("verify presets") {
  for (const char* preset : {"fig1", "fig2", "fig3", "fig4", "fig5"}) {
    CAPTURE(preset);
    CHECK(cli(std::string("verify --preset ") + preset).code == 0);
  }
  CHECK(cli("verify turan-phi-p --preset fig5").code == 0);
  CHECK(cli("verify cm --preset fig1 --psi-route single-integral").code == 0);
}

TEST_CASE("verify failures") {
  CHECK(cli("verify --preset fig2 --verdict-tol -1").code == 5);
  CHECK(cli("verify bogus --preset fig1").code == 2);
  CHECK(cli("verify cm --preset fig1 --max-order 7").code == 2);
  CHECK(cli("verify cm").code == 2);
}

TEST_CASE("verify output") {
  const auto r = cli("verify --preset fig5 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["verdict"] == "pass");
  CHECK(j["results"].size() == 19);
  const auto c = csv(cli("verify --preset fig1").out);
  REQUIRE(c.size() == 301);
  CHECK(c[0][0] == "property");
  CHECK(c[1][0] == "cm");
}

TEST_CASE("grid") {
  auto r = cli("grid --preset fig2 --quantity bounds");
  REQUIRE(r.code == 0);
  auto rows = csv(r.out);
  REQUIRE(rows.size() == 20);
  CHECK(rows[0] == std::vector<std::string>{"x", "lower", "phi", "upper"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double lo = std::stod(rows[i][1]), v = std::stod(rows[i][2]), hi = std::stod(rows[i][3]);
    CHECK(lo < v);
    CHECK(v < hi);
  }

  r = cli("grid --preset fig1 --quantity psi");
  REQUIRE(r.code == 0);
  rows = csv(r.out);
  REQUIRE(rows.size() == 51);
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));

  CHECK(cli("grid --preset fig1 --quantity psi --sweep p:2:1:0.1").code == 2);

  r = cli("grid --p 1 --q 1 --a 1.4 --b 1.2 --sweep x:0.1:0.5:0.1 --quantity phi --format json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["results"].size() == 5);
}

TEST_CASE("csv output is byte-identical across runs") {
  const std::string args = "grid --preset fig5 --quantity phi";
  const auto a = cli(args), b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
}
