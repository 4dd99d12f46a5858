#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr interleaved
};

// Runs the installed command-line binary with the given arguments.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ZEROK_CLI_BIN) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("nq subcommand reports the expected groups as json") {
  RunResult r = run_cli("nq --primes 3,5 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["K0"] == json({{"rank", 0}, {"torsion", {2}}}));
  CHECK(j["K1"] == json({{"rank", 0}, {"torsion", {2}}}));
  CHECK(j["status"] == "exact");
}

TEST_CASE("json output is deterministic byte for byte") {
  RunResult a = run_cli("nq --primes 3,5 --format json");
  RunResult b = run_cli("nq --primes 3,5 --format json");
  CHECK(a.out == b.out);
  RunResult t1 = run_cli("tiling --input {\\\"period\\\":\\\"ab\\\"} --format json");
  RunResult t2 = run_cli("tiling --input {\\\"period\\\":\\\"ab\\\"} --format json");
  REQUIRE(t1.exit_code == 0);
  CHECK(t1.out == t2.out);
}

TEST_CASE("graph subcommand handles the two-loop bouquet") {
  RunResult r = run_cli(
      "graph --input "
      "{\\\"vertices\\\":[\\\"v\\\"],\\\"edges\\\":[{\\\"src\\\":\\\"v\\\","
      "\\\"dst\\\":\\\"v\\\"},{\\\"src\\\":\\\"v\\\",\\\"dst\\\":\\\"v\\\"}]}"
      " --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["K0"] == json({{"rank", 0}, {"torsion", json::array()}}));
  CHECK(j["K1"] == json({{"rank", 0}, {"torsion", json::array()}}));
}

TEST_CASE("text and json modes agree on the groups") {
  RunResult text = run_cli("nq --primes 3,5 --format text");
  RunResult js = run_cli("nq --primes 3,5 --format json");
  REQUIRE(text.exit_code == 0);
  // Z/2 in text, {"rank":0,"torsion":[2]} in json.
  CHECK(text.out.find("K0 = Z/2") != std::string::npos);
  CHECK(text.out.find("K1 = Z/2") != std::string::npos);
  json j = json::parse(js.out);
  CHECK(j["K0"]["torsion"] == json::array({2}));
}

TEST_CASE("complex subcommand computes homology and round-trips") {
  RunResult r = run_cli(
      "complex --input {\\\"ranks\\\":[1,1],\\\"boundaries\\\":[[0]]} "
      "--format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["homology"][0] == json({{"rank", 1}, {"torsion", json::array()}}));
  CHECK(j["homology"][1] == json({{"rank", 1}, {"torsion", json::array()}}));

  // Feed the emitted json back in: identical homology, byte-identical out.
  std::string path = "roundtrip_complex.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  RunResult again = run_cli("complex --input " + path + " --format json");
  REQUIRE(again.exit_code == 0);
  CHECK(again.out == r.out);
  std::remove(path.c_str());
}

TEST_CASE("tiling subcommand accepts depth lists") {
  RunResult r = run_cli(
      "tiling --input {\\\"period\\\":\\\"ab\\\"} --depths 3,4 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["depths"].size() == 2);
  CHECK(j["depths"][0]["depth"] == 3);
  CHECK(j["depths"][1]["result"]["K0"] ==
        json({{"rank", 1}, {"torsion", json::array()}}));
  CHECK(j["stabilized"] == true);
}

TEST_CASE("check-covers emits a full report") {
  RunResult r = run_cli(
      "check-covers --input "
      "{\\\"family\\\":\\\"nq\\\",\\\"primes\\\":[3,5]} --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  bool saw_each[4] = {false, false, false, false};
  for (const auto& rec : j["records"]) {
    std::string c = rec["condition"].get<std::string>();
    if (c == "i") saw_each[0] = true;
    if (c == "ii") saw_each[1] = true;
    if (c == "iii") saw_each[2] = true;
    if (c == "iv") saw_each[3] = true;
  }
  for (bool s : saw_each) CHECK(s);
}

TEST_CASE("exit codes separate input errors from refusals") {
  // Malformed input: exit 1.
  CHECK(run_cli("nq --primes 4,5").exit_code == 1);
  CHECK(run_cli("graph --input {\\\"vertices\\\":[]}").exit_code == 1);
  CHECK(run_cli("graph --input no_such_file.json").exit_code == 1);
  CHECK(run_cli("complex --input {\\\"ranks\\\":[1]}").exit_code == 1);

  // Out-of-range mathematics: exit 2 with the refusal on the error stream.
  RunResult r = run_cli("nq --primes 2,3,5,7");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("refused") != std::string::npos);

  // Unknown flags and subcommands are parse errors.
  CHECK(run_cli("nq --primes 3,5 --bogus").exit_code != 0);
  CHECK(run_cli("frobnicate").exit_code != 0);
}

TEST_CASE("tiling accepts an explicit word list") {
  // Long factors of the (ab)-periodic word, handed over explicitly, give the
  // same groups as the period form.
  RunResult r = run_cli(
      "tiling --input "
      "{\\\"words\\\":[\\\"abababababab\\\",\\\"babababababa\\\"]} "
      "--depths 3,4 --format json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["stabilized"] == true);
  CHECK(j["depths"][0]["result"]["K0"] ==
        json({{"rank", 1}, {"torsion", json::array()}}));
}
