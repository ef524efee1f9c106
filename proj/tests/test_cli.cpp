#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("POSETFORM_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "POSETFORM_CLI must point at the binary");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / "posetform-cli-test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("analyze output is deterministic and exact") {
  RunResult a = run_cli("analyze \"zeta(3/2)\"");
  RunResult b = run_cli("analyze \"zeta(3/2)\"");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical reruns
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["poset"]["n"] == 4);
  CHECK(j["minimum"]["p_value"] == "12/5");
  CHECK(j["classification"]["shape"] == "r-set");
  CHECK(j["classification"]["r"] == "3/2");
  CHECK(j["cones"]["C"].is_null());
  CHECK(j["form"]["definiteness"] == "positive_definite");
}

TEST_CASE("min and classify subcommands") {
  RunResult m = run_cli("min \"chain(2)+chain(2)\"");
  CHECK(m.code == 0);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["value"] == "3/8");
  CHECK(j["p_value"] == "8/3");

  RunResult c = run_cli("classify \"primitive(1,2,5)\"");
  CHECK(c.code == 0);
  auto k = nlohmann::json::parse(c.out);
  CHECK(k["rep_type"] == "tame");
  CHECK(k["p_value"] == "4");
  CHECK(k["in_list_I"] == true);
}

TEST_CASE("cone subcommand reports witnesses") {
  RunResult r = run_cli("cone \"crown(2)\"");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(!j["C"].is_null());
  CHECK(!j["St"].is_null());
  CHECK(j["dynkin"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("analyze \"zeta(1/2)\"").code == 2);
  CHECK(run_cli("analyze \"nonsense(\"").code == 2);
  CHECK(run_cli("min --cap 10 \"crown(9)\"").code == 3);
}

TEST_CASE("gen writes a file analyze can read back") {
  fs::path dir = scratch_dir();
  RunResult g = run_cli("gen --out " + dir.string() + " \"zeta(8/3)\"");
  REQUIRE(g.code == 0);
  fs::path file = dir / "zeta8_3.poset";
  REQUIRE(fs::exists(file));
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  CHECK(first == "n 10");
  RunResult a = run_cli("analyze " + file.string());
  CHECK(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["classification"]["shape"] == "r-set");
  CHECK(j["classification"]["r"] == "8/3");
}

TEST_CASE("verify campaign writes jsonl and supports resume") {
  fs::path dir = scratch_dir() / "verify";
  fs::remove_all(dir);
  RunResult v = run_cli("verify theorem --n 4 --out " + dir.string());
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["counterexamples"].empty());
  CHECK(j["posets"] == 1 + 2 + 5 + 16);
  fs::path rows = dir / "campaign_theorem.jsonl";
  REQUIRE(fs::exists(rows));
  std::ifstream in(rows);
  std::string line;
  int count = 0;
  while (std::getline(in, line))
    if (!line.empty()) {
      auto row = nlohmann::json::parse(line);
      CHECK(row.contains("key"));
      CHECK(row["ok"] == true);
      ++count;
    }
  CHECK(count == j["rows"].get<int>());
  CHECK(count > 0);
  // resume: nothing new to do
  RunResult v2 = run_cli("verify theorem --n 4 --resume --out " + dir.string());
  CHECK(v2.code == 0);
  auto j2 = nlohmann::json::parse(v2.out);
  CHECK(j2["rows"] == 0);
}

TEST_CASE("hypothesis search finds no counterexample") {
  fs::path dir = scratch_dir() / "hypo";
  fs::remove_all(dir);
  RunResult h = run_cli("hypothesis --n 4 --out " + dir.string());
  CHECK(h.code == 0);
  auto j = nlohmann::json::parse(h.out);
  CHECK(j["counterexamples"].empty());
}
