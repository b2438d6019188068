#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "contests/json_io.hpp"

namespace {

std::string g_cli;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

}  // namespace

TEST_CASE("solve prints JSON with the appendix value") {
  auto r = run("solve --contest 1,2,1 --kernel tullock");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["status"] == "Solved");
  double xs = std::stod(j["X_star"].get<std::string>());
  CHECK(std::abs(xs - (7.0 + std::sqrt(13.0)) / 12.0) <= 1e-9);
  CHECK(j["contest"] == std::vector<int>({1, 2, 1}));
}

TEST_CASE("JSON round-trip is byte-identical") {
  for (const char* args : {"solve --contest 1,2,1 --kernel tullock",
                           "solve --contest 1,2,1 --kernel tullock --exact",
                           "solve --contest 5 --kernel log --exact",
                           "solve --contest 2,2 --kernel exp:a=0.5,b=2"}) {
    auto r = run(args);
    auto j = nlohmann::ordered_json::parse(r.out);
    bool exact = std::string(args).find("--exact") != std::string::npos;
    auto sol = contests::solution_from_json(j);
    CHECK(contests::dump_json(contests::solution_to_json(sol, exact)) == r.out);
  }
}

TEST_CASE("measures prints the S vector") {
  auto r = run("measures --contest 1,2,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4,5,2\n");
}

TEST_CASE("sweep sim family pins n=10 at 0.9") {
  auto r = run("sweep --family sim --n-max 10 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("10,10,0.9,0.1,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("solve --contest 2 --kernel power").exit_code == 1);
  CHECK(run("solve --contest 0,1 --kernel tullock").exit_code == 2);
  CHECK(run("solve --kernel tullock").exit_code == 2);
  CHECK(run("solve --contest 2 --kernel nosuch").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  // NoInteriorCandidate still prints the result
  auto r = run("solve --contest 2 --kernel power");
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["status"] == "NoInteriorCandidate");
}

TEST_CASE("design finds the balanced two-period split") {
  auto r = run("design --players 10 --max-periods 2 --kernel tullock --objective max");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["best_contest"] == std::vector<int>({5, 5}));
}

TEST_CASE("best-response curve") {
  auto r = run("br --contest 1,1 --kernel tullock --period 2 --points 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 23) == "X_prev,best_response\n0,");
  // at X_prev = 1 the response is zero
  CHECK(r.out.find("\n1,0\n") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  auto r = run("oracle --contest 1,1 --kernel tullock --step 0.001");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(std::stod(j["total"].get<std::string>()) == doctest::Approx(0.5).epsilon(5e-3));
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int shift = 0;
  if (argc > 1 && argv[1][0] != '-') {
    g_cli = argv[1];
    shift = 1;
  } else {
    g_cli = "./contests_cli";
  }
  ctx.applyCommandLine(argc - shift, argv + shift);
  return ctx.run();
}
