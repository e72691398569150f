#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef BIORTHO_CLI_PATH
#error "BIORTHO_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BIORTHO_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("family tables") {
  const auto hermite = run_cli("family hermite --m-max 3");
  CHECK(hermite.exit_code == 0);
  CHECK(hermite.out == "1\n0,1\n-1,0,1\n0,-3,0,1\n");

  const auto laguerre = run_cli("family laguerre --alpha 0 --m-max 1");
  CHECK(laguerre.exit_code == 0);
  CHECK(laguerre.out == "1\n1,-1\n");

  const auto bernoulli = run_cli("family bernoulli --N 2 --m-max 1");
  CHECK(bernoulli.exit_code == 0);
  CHECK(bernoulli.out == "1\n-1,1\n");

  const auto unknown = run_cli("family nosuch --m-max 2");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.empty());
}

TEST_CASE("family json format carries the same coefficients") {
  const auto res = run_cli("family laguerre --alpha 1/2 --m-max 2 --format json");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["family"] == "laguerre");
  CHECK(doc["coefficients"][1][0] == "3/2");
  CHECK(doc["coefficients"][1][1] == "-1");
}

TEST_CASE("verify suites") {
  CHECK(run_cli("verify bernoulli-euler --N 8 --m-max 10").exit_code == 0);
  CHECK(run_cli("verify bernoulli-euler --N 0").exit_code == 2);
  CHECK(run_cli("verify appell --N 16 --m-max 8").exit_code == 0);
  CHECK(run_cli("verify scaling --N 4 --m-max 8").exit_code == 0);
  CHECK(run_cli("verify laguerre --alpha 2 --max 6 --n-max 20").exit_code == 0);
  CHECK(run_cli("verify refinement --N 6").exit_code == 0);
  CHECK(run_cli("verify moments --N 24").exit_code == 0);
  CHECK(run_cli("verify mgf --N 6 --order 10").exit_code == 0);
  CHECK(run_cli("verify nosuch").exit_code == 2);

  const auto bio = run_cli("verify biorthogonality --N 4 --max 5");
  CHECK(bio.exit_code == 0);
  const auto lines = lines_of(bio.out);
  CHECK(lines.size() == 36);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["passed"] == true);
    CHECK(j["value"] == (j["n"] == j["m"] ? "1" : "0"));
  }
}

TEST_CASE("converge cases") {
  const auto bern = run_cli("converge bernoulli-hermite --m 4 --N 16,32,64,128");
  CHECK(bern.exit_code == 0);
  const auto lines = lines_of(bern.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "param,sup_error");
  CHECK(lines[5].starts_with("empirical_rate,"));
  double prev = 1e300;
  for (int i = 1; i <= 4; ++i) {
    const auto comma = lines[static_cast<std::size_t>(i)].find(',');
    const double err = std::stod(lines[static_cast<std::size_t>(i)].substr(comma + 1));
    CHECK(err < prev);
    prev = err;
  }

  const auto meixner = run_cli("converge meixner-laguerre --n 1 --alpha 2 --c 0.9,0.95");
  CHECK(meixner.exit_code == 0);
  for (std::size_t i = 1; i <= 2; ++i) {
    const auto& line = lines_of(meixner.out)[i];
    CHECK(std::stod(line.substr(line.find(',') + 1)) <= 1e-12);
  }

  CHECK(run_cli("converge nosuch").exit_code == 2);
}

TEST_CASE("converge json report matches csv content and lands in REPORT_DIR") {
  const std::string dir = "/tmp/biortho_report_test";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  const std::string args = "converge euler-hermite --m 2 --N 8,16,32";
  const auto csv = run_cli(args);
  const auto json = run_cli(args + " --format json", "REPORT_DIR=" + dir);
  CHECK(csv.exit_code == 0);
  CHECK(json.exit_code == 0);

  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["case"] == "euler-hermite");
  CHECK(doc["passed"] == true);
  const auto csv_lines = lines_of(csv.out);
  REQUIRE(doc["entries"].size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& line = csv_lines[i + 1];
    const auto comma = line.find(',');
    CHECK(doc["entries"][i]["param"] == std::stoll(line.substr(0, comma)));
    CHECK(doc["entries"][i]["sup_error"] == std::stod(line.substr(comma + 1)));
  }
  const auto rate_line = csv_lines.back();
  CHECK(doc["empirical_rate"] == std::stod(rate_line.substr(rate_line.find(',') + 1)));

  std::ifstream file(dir + "/euler-hermite_deg2.json");
  REQUIRE(file.good());
  std::stringstream ss;
  ss << file.rdbuf();
  CHECK(nlohmann::json::parse(ss.str()) == doc);
}

TEST_CASE("bspline actions") {
  const auto pieces = run_cli("bspline 2 pieces");
  CHECK(pieces.exit_code == 0);
  CHECK(pieces.out == "0,1\n2,-1\n");

  const auto moments = run_cli("bspline 4 moments --k-max 2");
  CHECK(moments.exit_code == 0);
  CHECK(moments.out == "1,2,13/3\n");

  CHECK(run_cli("bspline 0 pieces").exit_code == 2);

  const auto gauss = run_cli("bspline 8 gauss-error --k 0 --N-list 8,16,32");
  CHECK(gauss.exit_code == 0);
  CHECK(lines_of(gauss.out).size() == 5);

  const auto single = run_cli("bspline 8 gauss-error --k 1");
  CHECK(single.exit_code == 0);
  CHECK(lines_of(single.out).size() == 2);
}

TEST_CASE("identical invocations give byte-identical output") {
  const std::string args = "converge gegenbauer-hermite --m 3 --N 16,32,64";
  const auto a = run_cli(args), b = run_cli(args);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
  const auto fa = run_cli("family meixner --beta 2 --c 0.25 --m-max 5");
  const auto fb = run_cli("family meixner --beta 2 --c 0.25 --m-max 5");
  CHECK(fa.out == fb.out);
}

TEST_CASE("series order cap guards expensive requests") {
  CHECK(run_cli("family hermite --m-max 10", "SERIES_ORDER_CAP=4").exit_code == 2);
  CHECK(run_cli("family hermite --m-max 4", "SERIES_ORDER_CAP=4").exit_code == 0);
  CHECK(run_cli("converge sinc --order 80 --N 16,32").exit_code == 2);
}

TEST_CASE("meixner-pollaczek family emits float rows") {
  const auto res = run_cli("family meixner-pollaczek --lambda 1 --omega 0.5 --m-max 2");
  CHECK(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 3);
  CHECK(std::stod(lines[0]) == 1.0);
  // P_1 constant term is 2 lambda cos(omega)
  CHECK(std::stod(lines[1].substr(0, lines[1].find(','))) ==
        doctest::Approx(2.0 * std::cos(0.5)));
}
