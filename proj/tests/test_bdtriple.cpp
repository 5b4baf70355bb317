#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdtriple.hpp"
#include "oracles.hpp"

#include <set>

using namespace manin;

namespace {

RootSystem rs_of(const char* t) { return RootSystem::build(parse_type(t)); }

BDTriple make(std::vector<int> pi1, std::vector<int> images) {
  BDTriple t;
  for (std::size_t k = 0; k < pi1.size(); ++k) t.phi[pi1[k]] = images[k];
  t.pi1 = pi1;
  t.pi2 = images;
  std::sort(t.pi1.begin(), t.pi1.end());
  std::sort(t.pi2.begin(), t.pi2.end());
  return t;
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

}  // namespace

TEST_CASE("enumeration equals the brute-force oracle") {
  const std::vector<std::pair<const char*, std::size_t>> known = {{"A1", 1}, {"A2", 3}, {"A3", 9}, {"B2", 1}, {"G2", 1}};
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2"}) {
    CAPTURE(t);
    const auto brute = oracle::brute_force(oracle::hand_cartan(t));
    std::set<Key> expected;
    for (const auto& b : brute) expected.insert({b.pi1, b.images});
    REQUIRE(expected.size() == brute.size());

    const auto got = enumerate_bd_triples(rs_of(t));
    std::set<Key> actual;
    for (const auto& g : got) actual.insert({g.pi1, g.images()});
    CHECK(actual.size() == got.size());
    CHECK(actual == expected);
    for (const auto& [name, n] : known)
      if (std::string(name) == t) CHECK(got.size() == n);
  }
}

TEST_CASE("A2 triples in enumeration order") {
  const auto got = enumerate_bd_triples(rs_of("A2"));
  REQUIRE(got.size() == 3);
  CHECK(got[0].empty());
  CHECK(got[1] == make({0}, {1}));
  CHECK(got[2] == make({1}, {0}));
  for (std::size_t k = 1; k < got.size(); ++k) CHECK(enumeration_less(got[k - 1], got[k]));
}

TEST_CASE("A3 split by size") {
  std::map<std::size_t, int> by_size;
  for (const auto& t : enumerate_bd_triples(rs_of("A3"))) ++by_size[t.pi1.size()];
  CHECK(by_size == std::map<std::size_t, int>{{0, 1}, {1, 6}, {2, 2}});
}

TEST_CASE("condition checks") {
  auto a2 = rs_of("A2");
  CHECK(check_bd_conditions(a2, make({0}, {1})).ok);

  const auto fixed = check_bd_conditions(a2, make({0}, {0}));
  CHECK(!fixed.ok);
  CHECK(fixed.condition == 3);
  CHECK(fixed.witness == std::vector<int>{0});

  const auto b2 = check_bd_conditions(rs_of("B2"), make({0}, {1}));
  CHECK(!b2.ok);
  CHECK(b2.condition == 2);
  CHECK(b2.witness == std::vector<int>{0, 0});

  BDTriple bad = make({0}, {1});
  bad.pi2 = {0, 1};
  CHECK(check_bd_conditions(a2, bad).condition == 1);

  // lengths kept but (a1, a2) = -1 while (a3, a1) = 0
  const auto pair = check_bd_conditions(rs_of("A3"), make({0, 1}, {2, 0}));
  CHECK(!pair.ok);
  CHECK(pair.condition == 2);
}

TEST_CASE("rank limit") {
  CHECK_THROWS_AS(enumerate_bd_triples(rs_of("A4"), 3), Error);
  CHECK(enumerate_bd_triples(rs_of("A4"), 4).size() == 33);
}

TEST_CASE("maximal chains") {
  const auto t = make({0, 1}, {1, 2});
  CHECK(maximal_chains(t) == std::vector<Chain>{Chain{{0, 1, 2}}});
  CHECK(maximal_chains(BDTriple{}).empty());
  CHECK(maximal_chains(make({0}, {1})) == std::vector<Chain>{Chain{{0, 1}}});
  CHECK(chain_position(t, 0) == 1);
  CHECK(chain_position(t, 2) == 3);
  CHECK_THROWS_AS(chain_position(t, 3), Error);
  CHECK(chain_position(make({0}, {2}), 2) == 2);
  CHECK_THROWS_AS(maximal_chains(make({0}, {0})), Error);
}

TEST_CASE("maximal chains partition Pi_0 on every enumerated triple") {
  for (const char* name : {"A4", "B3", "C3", "D4", "F4", "E6"}) {
    CAPTURE(name);
    for (const auto& t : enumerate_bd_triples(rs_of(name))) {
      std::vector<int> seen;
      for (const auto& c : maximal_chains(t)) {
        for (std::size_t k = 0; k + 1 < c.elements.size(); ++k) CHECK(t.phi.at(c.elements[k]) == c.elements[k + 1]);
        CHECK(!t.phi.count(c.elements.back()));
        seen.insert(seen.end(), c.elements.begin(), c.elements.end());
      }
      std::sort(seen.begin(), seen.end());
      CHECK(seen == t.pi0());
    }
  }
}

TEST_CASE("sigma equivariance") {
  auto a3 = rs_of("A3");
  const Permutation id{0, 1, 2}, rev{2, 1, 0};
  for (const auto& t : enumerate_bd_triples(a3)) CHECK(check_sigma_equivariance(a3, t, id));
  CHECK(!check_sigma_equivariance(a3, make({0, 1}, {1, 2}), rev));
  CHECK(check_sigma_equivariance(a3, BDTriple{}, rev));
  CHECK_THROWS_AS(check_sigma_equivariance(a3, BDTriple{}, {1, 0, 2}), Error);

  // equivariant count equals the number of triples fixed by conjugation with sigma
  std::size_t fixed = 0, equivariant = 0;
  for (const auto& t : enumerate_bd_triples(a3)) {
    fixed += apply_permutation(t, rev) == t;
    equivariant += check_sigma_equivariance(a3, t, rev);
  }
  CHECK(fixed == equivariant);
  CHECK(equivariant == 1);
}
