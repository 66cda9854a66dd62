#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

const char* cli_path() { return std::getenv("WISOPT_CLI"); }

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(cli_path()) + " " + args + " 2>&1";
  std::array<char, 512> buffer{};
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) result.output += buffer.data();
  const int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("cli frobenius" * doctest::skip(cli_path() == nullptr)) {
  const auto r = run_cli("frobenius 3 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("frobenius: 7") != std::string::npos);
  CHECK(r.output.find("gaps: 1 2 4 7") != std::string::npos);

  const auto r1 = run_cli("frobenius 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("frobenius: 0") != std::string::npos);

  const auto r711 = run_cli("frobenius 7 11 --format json");
  CHECK(r711.exit_code == 0);
  CHECK(nlohmann::json::parse(r711.output).at("frobenius").get<int>() == 59);
}

TEST_CASE("cli rejects bad tuples with a categorized error" * doctest::skip(cli_path() == nullptr)) {
  const auto r = run_cli("frobenius 4 6");
  CHECK(r.exit_code == 1);
  CHECK(r.output.rfind("error: invalid-input:", 0) == 0);

  const auto usage = run_cli("solve");
  CHECK(usage.exit_code == 1);
  CHECK(usage.output.rfind("error:", 0) == 0);
}

TEST_CASE("cli solve with verification" * doctest::skip(cli_path() == nullptr)) {
  const auto naive = run_cli("solve --family example_3_1 --m 2 --solver naive --verify --format json");
  CHECK(naive.exit_code == 0);
  const auto naive_doc = nlohmann::json::parse(naive.output);
  CHECK(naive_doc.at("certificate").at("rank").get<long long>() == 2);

  const auto main_run = run_cli("solve --family example_3_1 --m 2 --solver main --verify --format json");
  CHECK(main_run.exit_code == 0);
  const auto main_doc = nlohmann::json::parse(main_run.output);
  CHECK(main_doc.at("certificate").at("rank").get<long long>() == 0);
  CHECK(main_doc.at("guarantee").get<long long>() == 0);
}

TEST_CASE("cli adversary thresholds" * doctest::skip(cli_path() == nullptr)) {
  const auto lb = run_cli("adversary --family lower_bound --m 2 --solver main --format json");
  CHECK(lb.exit_code == 0);
  const auto lb_doc = nlohmann::json::parse(lb.output);
  CHECK(lb_doc.at("threshold").get<long long>() == 4);
  CHECK(lb_doc.at("fooled").get<bool>() == false);

  const auto mem = run_cli("adversary --family membership --m 2 --solver exhaustive --format json");
  const auto mem_doc = nlohmann::json::parse(mem.output);
  CHECK(mem_doc.at("surviving_y").get<int>() == 0);
  CHECK(mem_doc.at("query_count").get<long long>() == 6);

  const auto lb3 = run_cli("adversary --family lower_bound --m 3 --solver naive --format json");
  CHECK(nlohmann::json::parse(lb3.output).at("threshold").get<long long>() == 15);

  const auto too_big = run_cli("adversary --family lower_bound --m 9 --solver naive");
  CHECK(too_big.exit_code == 1);
  CHECK(too_big.output.find("capped at m <=") != std::string::npos);
}

TEST_CASE("cli gen round trip" * doctest::skip(cli_path() == nullptr)) {
  const std::string path = "cli_gen_test_instance.json";
  const auto gen = run_cli("gen --n 7 --tuple 2,3 --generators 4 --seed 31 -o " + path);
  REQUIRE(gen.exit_code == 0);

  const auto solved = run_cli("verify --instance " + path + " --format json");
  CHECK(solved.exit_code == 0);
  const auto doc = nlohmann::json::parse(solved.output);
  CHECK(doc.at("certificate").at("within_guarantee").get<bool>());

  // identical seed, identical file
  const std::string path2 = "cli_gen_test_instance2.json";
  run_cli("gen --n 7 --tuple 2,3 --generators 4 --seed 31 -o " + path2);
  std::ifstream f1(path), f2(path2);
  const std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  const std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}
