#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(TORSQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() /
             ("torsq_cli_test_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> result;
  std::string token;
  while (in >> token) result.push_back(token);
  return result;
}

}  // namespace

TEST_CASE("square: classic labels of the default 3x3 run") {
  auto result = run_cli("square --n 3 --group product --labels classic");
  CHECK(result.exit_code == 0);
  CHECK(tokens(result.out) ==
        std::vector<std::string>{"3", "5", "7", "8", "1", "6", "4", "9", "2"});
}

TEST_CASE("square: even N is rejected with exit 2") {
  CHECK(run_cli("square --n 4 --group product").exit_code == 2);
}

TEST_CASE("square: symbolic 3-torsion golden grid") {
  auto result = run_cli("square --n 3 --group symbolic3");
  CHECK(result.exit_code == 0);
  CHECK(tokens(result.out) ==
        std::vector<std::string>{"B", "-A", "-D", "C", "O", "-C", "D", "A",
                                 "-B"});
}

TEST_CASE("square: symbolic group demands N = 3") {
  CHECK(run_cli("square --n 5 --group symbolic3").exit_code == 2);
}

TEST_CASE("square: curve group end to end, JSON verifies back") {
  auto result =
      run_cli("square --n 3 --group curve --curve 7,0,2 --format json");
  REQUIRE(result.exit_code == 0);
  auto doc = nlohmann::json::parse(result.out);
  CHECK(doc["n"] == 3);
  CHECK(doc["group"]["kind"] == "curve");
  CHECK(doc["cells"].size() == 9);

  auto path = write_temp("curve_square.json", result.out);
  CHECK(run_cli("verify " + path).exit_code == 0);
}

TEST_CASE("square: bad curve parameters exit 2, missing torsion exits 3") {
  CHECK(run_cli("square --n 3 --group curve --curve 6,0,2").exit_code == 2);
  CHECK(run_cli("square --n 3 --group curve --curve nonsense").exit_code == 2);
  // E(F_5) from y^2 = x^3 + 1 has 6 points, no full 3-torsion
  CHECK(run_cli("square --n 3 --group curve --curve 5,0,1").exit_code == 3);
}

TEST_CASE("verify: edited cell fails with exit 1, garbage with exit 4") {
  auto result = run_cli("square --n 3 --group product --format json");
  REQUIRE(result.exit_code == 0);

  auto doc = nlohmann::json::parse(result.out);
  doc["cells"][0] = doc["cells"][1];
  auto edited = write_temp("edited.json", doc.dump(2));
  CHECK(run_cli("verify " + edited).exit_code == 1);

  auto truncated = write_temp("truncated.json",
                              result.out.substr(0, result.out.size() / 2));
  CHECK(run_cli("verify " + truncated).exit_code == 4);

  CHECK(run_cli("verify /no/such/file.json").exit_code == 4);
}

TEST_CASE("json output is byte-stable across runs") {
  auto first = run_cli("square --n 5 --group product --format json");
  auto second = run_cli("square --n 5 --group product --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("every square emitted with exit 0 re-verifies as magic") {
  int idx = 0;
  for (const char* cmd :
       {"square --n 5 --group product --format json",
        "square --n 3 --group symbolic3 --format json",
        "square --n 7 --a 2 --b 3 --c 1 --d 1 --x1 1 --y1 4 --format json"}) {
    auto result = run_cli(cmd);
    REQUIRE(result.exit_code == 0);
    auto path = write_temp("roundtrip" + std::to_string(idx++) + ".json",
                           result.out);
    CHECK(run_cli("verify " + path).exit_code == 0);
  }
}

TEST_CASE("search: recovers the 3x3 grid, rejects the 4x4 one") {
  auto intro = write_temp("intro.txt", "3 5 7\n8 1 6\n4 9 2\n");
  auto found = run_cli("search " + intro);
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("a=1") != std::string::npos);

  auto durer = write_temp(
      "durer.txt", "16 3 2 13\n5 10 11 8\n9 6 7 12\n4 15 14 1\n");
  auto none = run_cli("search " + durer);
  CHECK(none.exit_code == 1);
  CHECK(none.out.find("not uniform-step generable") != std::string::npos);

  auto dupes = write_temp("dupes.txt", "1 2\n2 3\n");
  CHECK(run_cli("search " + dupes).exit_code == 4);

  CHECK(run_cli("search " + durer + " --max-n 3").exit_code == 2);
}

TEST_CASE("torsion: lists points and basis, reports missing torsion") {
  auto result = run_cli("torsion --n 3 --curve 7,0,2");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("0,3") != std::string::npos);
  CHECK(result.out.find("basis P = 0,3  Q = 3,1") != std::string::npos);
  CHECK(result.out.find("inf") != std::string::npos);

  CHECK(run_cli("torsion --n 9 --curve 7,0,2").exit_code == 3);

  auto trivial = run_cli("torsion --n 1 --curve 7,0,2");
  CHECK(trivial.exit_code == 0);
  CHECK(trivial.out.find("1-torsion points (1)") != std::string::npos);
}

TEST_CASE("latin: builds magic squares from files, rejects bad ones") {
  auto cyclic5 = write_temp(
      "latin5.txt", "0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\n");
  auto result = run_cli("latin " + cyclic5 + " --labels classic");
  CHECK(result.exit_code == 0);
  CHECK(tokens(result.out).size() == 25);

  auto constant = write_temp("latin_bad.txt", "0 0 0\n0 0 0\n0 0 0\n");
  CHECK(run_cli("latin " + constant).exit_code == 2);

  auto cyclic3 = write_temp("latin3.txt", "0 1 2\n1 2 0\n2 0 1\n");
  CHECK(run_cli("latin " + cyclic3 + " --group symbolic3").exit_code == 0);

  CHECK(run_cli("latin /no/such/latin.txt").exit_code == 4);
}

TEST_CASE("enumeration limit comes from the environment when not passed") {
  CHECK(run_cli("torsion --n 3 --curve 101,0,2 --enum-limit 50").exit_code ==
        2);
  // same thing through TORSQ_ENUM_LIMIT
  std::string cmd = std::string("TORSQ_ENUM_LIMIT=50 ") + TORSQ_CLI_PATH +
                    " torsion --n 3 --curve 101,0,2 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 1024> sink;
  while (fread(sink.data(), 1, sink.size(), pipe) > 0) {
  }
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
}
