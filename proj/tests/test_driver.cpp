#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "driver.hpp"

#include <sstream>

using namespace manin;

namespace {

std::vector<json> lines(const std::string& jsonl) {
  std::vector<json> out;
  std::istringstream is(jsonl);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) out.push_back(json::parse(l));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("triple JSON round trip") {
  BDTriple t;
  t.pi1 = {0, 1};
  t.pi2 = {1, 2};
  t.phi = {{0, 1}, {1, 2}};
  const auto j = triple_to_json(t);
  CHECK(j.dump() == R"({"pi1":[1,2],"pi2":[2,3],"phi":{"1":2,"2":3}})");
  CHECK(triple_from_json(j, 3) == t);
  CHECK(code_of([&] { triple_from_json(j, 2); }) == ErrorCode::Parse);
  CHECK(code_of([] { triple_from_json(json::parse(R"({"pi1":[1],"pi2":[2]})"), 3); }) == ErrorCode::Parse);
  CHECK(code_of([] { triple_from_json(json::parse(R"({"pi1":[1],"pi2":[2],"phi":{"x":2}})"), 3); }) == ErrorCode::Parse);
  CHECK(code_of([] { triple_from_json(json::parse(R"({"pi1":["1"],"pi2":[2],"phi":{}})"), 3); }) == ErrorCode::Parse);
}

TEST_CASE("extension JSON round trip") {
  auto L = LieAlgebra::build(RootSystem::build(parse_type("B2")));
  Matrix<Rational> m(2, 2);
  m(0, 0) = ratio(-1, 1);
  m(1, 1) = -1;
  const auto ext = trivial_extension(*L, m);
  const auto j = extension_to_json(*L, ext);
  CHECK(j["field"] == "rational");
  CHECK(j["phi_h"].dump() == R"([["-1","0"],["0","-1"]])");
  auto back = std::get<CartanExtension<Rational>>(extension_from_json(*L, j));
  CHECK(back.phi_h == ext.phi_h);
  CHECK(back.hbar1 == ext.hbar1);
  CHECK(back.l2 == ext.l2);

  const auto g = to_gaussian(ext);
  const auto jg = extension_to_json(*L, g);
  CHECK(jg["field"] == "gaussian");
  auto gb = std::get<CartanExtension<Gaussian>>(extension_from_json(*L, jg));
  CHECK(gb.phi_h == g.phi_h);

  auto bad = j;
  bad["phi_h"][0][0] = "1/0";
  CHECK(code_of([&] { extension_from_json(*L, bad); }) == ErrorCode::Parse);
  bad = j;
  bad["field"] = "real";
  CHECK(code_of([&] { extension_from_json(*L, bad); }) == ErrorCode::Parse);
  bad = j;
  bad["hbar1"] = json::array({json::array({"1"})});
  CHECK(code_of([&] { extension_from_json(*L, bad); }) == ErrorCode::Parse);
}

TEST_CASE("enumerate output") {
  auto ctx = Context::for_type("A2");
  const auto r = enumerate(*ctx, 8, 1);
  CHECK(r.consistent);
  const auto ls = lines(r.jsonl);
  REQUIRE(ls.size() == 4);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(ls[k]["schema"] == "manin/1");
    CHECK(ls[k]["index"] == k + 1);
    CHECK(ls[k]["verdict"] == true);
    CHECK(ls[k]["extension"]["status"] == "found");
  }
  CHECK(ls[3]["kind"] == "summary");
  CHECK(ls[3]["count"] == 3);
  CHECK(ls[3]["verified"] == 3);

  const auto b2 = lines(enumerate(*Context::for_type("B2"), 8, 1).jsonl);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0]["triple"]["pi1"].empty());
}

TEST_CASE("enumerate is independent of the thread count") {
  for (const char* t : {"A4", "D4"}) {
    auto ctx = Context::for_type(t);
    CHECK(enumerate(*ctx, 8, 1).jsonl == enumerate(*ctx, 6, 4).jsonl);
  }
  auto rf = Context::for_real_form("realification:A2");
  CHECK(enumerate(*rf, 8, 1).jsonl == enumerate(*rf, 8, 3).jsonl);
  CHECK(code_of([] { enumerate(*Context::for_type("A4"), 3, 1); }) == ErrorCode::RankLimitExceeded);
}

TEST_CASE("real form enumeration keeps only sigma-equivariant triples") {
  const auto ls = lines(enumerate(*Context::for_real_form("su(2,2)"), 8, 2).jsonl);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0]["triple"]["pi1"].empty());
  CHECK(ls[0]["sigma_equivariant"] == true);
  CHECK(ls[0]["invariance"]["equivalent"] == true);
  CHECK(ls[0]["real_points_match"] == true);
  CHECK(ls[0]["real_report"]["verdict"] == true);
  CHECK(ls[1]["triples"] == 9);
  CHECK(ls[1]["count"] == 1);
}

TEST_CASE("supplied extensions") {
  auto ctx = Context::for_type("A2");
  const auto t = json::parse(R"({"pi1":[1],"pi2":[2],"phi":{"1":2}})");
  const auto rot = json::parse(R"({"hbar1":[[1,0],[0,1]],"hbar2":[[1,0],[0,1]],"l1":[],"l2":[],"phi_h":[["0","-1"],["1","-1"]]})");
  auto ev = construct(*ctx, t, &rot);
  CHECK(ev.verdict);
  CHECK(ev.body["extension"]["status"] == "supplied");
  CHECK(ev.body["w_basis"].size() == 8);

  // +id on the empty triple: condition iv) fails, the input is invalid
  const auto plus = json::parse(R"({"hbar1":[[1,0],[0,1]],"hbar2":[[1,0],[0,1]],"l1":[],"l2":[],"phi_h":[[1,0],[0,1]]})");
  ev = construct(*ctx, json::parse(R"({"pi1":[],"pi2":[],"phi":{}})"), &plus);
  CHECK(!ev.input_valid);
  CHECK(!ev.verdict);
  CHECK(ev.consistent());
  CHECK(ev.body["condition_iv"]["kind"] == "fixed_point");
  CHECK(ev.body["report"]["checks"]["trivial_intersection"]["pass"] == false);

  // does not extend H_1 -> H_2
  ev = construct(*ctx, t, &plus);
  CHECK(ev.body["condition_iv"]["kind"] == "inconsistent");
  CHECK(!ev.input_valid);
}

TEST_CASE("verify documents") {
  const std::string a2 = R"({"type":"A2","triple":{"pi1":[1],"pi2":[2],"phi":{"1":2}}})";
  auto r = verify_document(a2);
  CHECK(r.consistent);
  CHECK(lines(r.jsonl).at(0)["verdict"] == true);

  r = verify_document("[" + a2 + "," + R"({"type":"B2","triple":{"pi1":[1],"pi2":[2],"phi":{"1":2}}})" + "]");
  auto ls = lines(r.jsonl);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1]["verdict"] == false);
  CHECK(ls[1]["bd_conditions"]["violation"] == "not_isometric");
  CHECK(r.consistent);

  const auto en = enumerate(*Context::for_real_form("su(1,2)"), 8, 1).jsonl;
  r = verify_document(en);
  for (const auto& l : lines(r.jsonl)) CHECK(l["verdict"] == true);

  try {
    verify_document(a2 + "\n{\"type\":\"A2\",\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(code_of([] { verify_document(R"({"triple":{}})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { verify_document(R"({"type":"Q7","triple":{}})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { verify_document(R"({"type":"A2","triple":{"pi1":[5],"pi2":[1],"phi":{"5":1}}})"); }) ==
        ErrorCode::Parse);
  CHECK(verify_document("").jsonl.empty());
}

TEST_CASE("report table") {
  const auto a3 = enumerate(*Context::for_type("A3"), 8, 1).jsonl;
  const auto su = enumerate(*Context::for_real_form("su(2,2)"), 8, 1).jsonl;
  const auto table = report_table(a3 + su);
  CHECK(table.find("\nA3: 9 triples | - | 9 | 9 |") != std::string::npos);
  CHECK(table.find("\nsu(2,2): 9 triples | 1 | 1 | 1 | none") != std::string::npos);
  std::istringstream is(report_table(""));
  std::string header, extra;
  std::getline(is, header);
  CHECK(!std::getline(is, extra));
  CHECK(code_of([] { report_table("{\"x\":1}"); }) == ErrorCode::Parse);
}
