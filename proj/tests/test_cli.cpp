// Runs the installed-style binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef MANIN_CLI
#error "MANIN_CLI must name the manin executable"
#endif

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  const fs::path dir = fs::temp_directory_path() / "manin_cli_test";
  fs::create_directories(dir);
  const fs::path in = dir / "stdin.txt";
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string(MANIN_CLI) + " " + args + " < '" + in.string() + "' 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) v.push_back(json::parse(l));
  return v;
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / "manin_cli_test" / name; }

}  // namespace

TEST_CASE("enumerate") {
  auto r = run("enumerate --type A2");
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls.back()["count"] == 3);

  r = run("enumerate --real-form 'su(2,2)'");
  CHECK(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0]["triple"]["pi1"].empty());

  r = run("enumerate --type B2");
  ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0]["triple"]["pi1"].empty());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("enumerate").code == 2);
  CHECK(run("enumerate --type A2 --real-form EII").code == 2);
  CHECK(run("enumerate --type Z2").code == 2);
  CHECK(run("enumerate --type A2 --jobs 0").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("report /nonexistent/file").code == 2);
  CHECK(run("construct --type A2").code == 2);
  CHECK(run("enumerate --type A4 --max-rank 3").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify") {
  auto r = run("verify -", R"({"schema":"manin/1","type":"A2","triple":{"pi1":[1],"pi2":[2],"phi":{"1":2}}})");
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["verdict"] == true);

  r = run("verify -", R"({"type":"B2","triple":{"pi1":[1],"pi2":[2],"phi":{"1":2}}})");
  CHECK(r.code == 0);
  const auto l = lines(r.out).at(0);
  CHECK(l["verdict"] == false);
  CHECK(l["bd_conditions"]["violation"] == "not_isometric");
  CHECK(l["bd_conditions"]["witness"] == json::array({1, 1}));

  CHECK(run("verify -", R"({"type":"A2","triple":)").code == 2);
  CHECK(run("verify -", R"({"type":"A2","triple":{"pi1":[9],"pi2":[1],"phi":{"9":1}}})").code == 2);
}

TEST_CASE("round trip through files") {
  const auto en = scratch("d4.jsonl"), ve = scratch("d4.verify.jsonl");
  REQUIRE(run("enumerate --type D4 --type G2 --jobs 3 --out '" + en.string() + "'").code == 0);
  auto r = run("verify '" + en.string() + "' --out '" + ve.string() + "'");
  CHECK(r.code == 0);
  std::ifstream in(ve);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto ls = lines(ss.str());
  CHECK(ls.size() == 25 + 1);
  for (const auto& l : ls) CHECK(l["verdict"] == true);

  r = run("report '" + en.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.find("\nD4: 25 triples") != std::string::npos);
  CHECK(r.out.find("\nG2: 1 triples") != std::string::npos);
  CHECK(run("report -").code == 0);
}

TEST_CASE("construct with a supplied extension") {
  const auto ext = scratch("rot.json");
  std::ofstream(ext) << R"({"hbar1":[[1,0],[0,1]],"hbar2":[[1,0],[0,1]],"l1":[],"l2":[],"phi_h":[["0","-1"],["1","-1"]]})";
  auto r = run("construct --type A2 --triple '{\"pi1\":[1],\"pi2\":[2],\"phi\":{\"1\":2}}' --ext '" + ext.string() + "'");
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"] == true);
  CHECK(j["extension"]["status"] == "supplied");
}

TEST_CASE("byte-identical output") {
  const auto a = run("enumerate --type A4 --type C3 --jobs 1");
  const auto b = run("enumerate --type A4 --type C3 --jobs 4");
  CHECK(a.code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
}
