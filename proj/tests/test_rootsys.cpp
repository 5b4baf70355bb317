#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rootsys.hpp"

using namespace manin;

namespace {

RootSystem rs_of(const char* t) { return RootSystem::build(parse_type(t)); }

}  // namespace

TEST_CASE("rank one") {
  auto rs = rs_of("A1");
  CHECK(rs.positive_roots() == std::vector<Root>{{1}});
  CHECK(rs.cartan() == std::vector<std::vector<int>>{{2}});
}

TEST_CASE("A2 and G2 root counts and Cartan matrices") {
  auto a2 = rs_of("A2");
  CHECK(a2.num_positive() == 3);
  CHECK(a2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  auto g2 = rs_of("G2");
  CHECK(g2.num_positive() == 6);
  CHECK(g2.cartan() == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
}

TEST_CASE("Cartan matrices and Gram matrices agree with hand-typed tables") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2"}) {
    CAPTURE(t);
    auto rs = rs_of(t);
    const auto hand = oracle::hand_cartan(t);
    CHECK(rs.cartan() == hand.a);
    CHECK(rs.inner() == oracle::gram(hand));
  }
}

TEST_CASE("positive root counts") {
  // |Delta+| : A_n n(n+1)/2, B_n C_n n^2, D_n n(n-1), E6 36, E7 63, E8 120, F4 24, G2 6
  const std::vector<std::pair<const char*, std::size_t>> expected = {
      {"A1", 1}, {"A4", 10}, {"A7", 28}, {"B2", 4}, {"B5", 25}, {"C3", 9}, {"C4", 16}, {"D4", 12},
      {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [t, n] : expected) {
    CAPTURE(t);
    CHECK(rs_of(t).num_positive() == n);
  }
}

TEST_CASE("highest roots") {
  auto last = [](const char* t) { return rs_of(t).positive_roots().back(); };
  CHECK(last("G2") == Root{3, 2});
  CHECK(last("F4") == Root{2, 3, 4, 2});
  CHECK(last("E8") == Root{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(last("B3") == Root{1, 2, 2});
  CHECK(last("C3") == Root{2, 2, 1});
}

TEST_CASE("inner products") {
  auto a2 = rs_of("A2");
  CHECK(a2.inner_product(a2.simple_root(0), a2.simple_root(1)) == -1);
  auto b2 = rs_of("B2");
  CHECK(b2.inner_product(b2.simple_root(0), b2.simple_root(0)) != b2.inner_product(b2.simple_root(1), b2.simple_root(1)));
  for (const char* t : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    auto rs = rs_of(t);
    for (const auto& b : rs.positive_roots()) CHECK(rs.inner_product(b, b) > 0);
  }
  CHECK_THROWS_AS(a2.inner_product(Root{1}, Root{1, 0}), Error);
}

TEST_CASE("root strings close under reflections") {
  // s_i(b) = b - <b, a_i^vee> a_i stays in Delta
  for (const char* t : {"B3", "C3", "F4", "G2", "E6"}) {
    CAPTURE(t);
    auto rs = rs_of(t);
    for (const auto& b : rs.positive_roots())
      for (int i = 0; i < rs.rank(); ++i) {
        const auto ai = rs.simple_root(i);
        const int c = 2 * rs.inner_product_int(b, ai) / rs.inner_product_int(ai, ai);
        Root r = b;
        r[i] -= c;
        CHECK(rs.is_root(r));
      }
  }
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(rs_of("A1")).size() == 1);
  auto a3 = diagram_automorphisms(rs_of("A3"));
  CHECK(a3.size() == 2);
  CHECK(std::find(a3.begin(), a3.end(), Permutation{2, 1, 0}) != a3.end());
  CHECK(diagram_automorphisms(rs_of("D4")).size() == 6);
  CHECK(diagram_automorphisms(rs_of("E6")).size() == 2);
  CHECK(diagram_automorphisms(rs_of("B3")).size() == 1);
  CHECK(!is_diagram_automorphism(rs_of("A3"), {1, 0, 2}));
}

TEST_CASE("type parsing") {
  CHECK(to_string(parse_type("e6")) == "E6");
  CHECK_THROWS_AS(parse_type("B1"), Error);
  CHECK_THROWS_AS(parse_type("G3"), Error);
  CHECK_THROWS_AS(parse_type("X2"), Error);
  CHECK_THROWS_AS(parse_type("A"), Error);
  try {
    parse_type("E9");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InadmissibleType);
  }
}

TEST_CASE("doubled system") {
  auto d = RootSystem::build_doubled(parse_type("A2"));
  CHECK(d.rank() == 4);
  CHECK(d.num_positive() == 6);
  CHECK(d.inner()[0][2] == 0);
  CHECK(d.inner()[2][3] == -1);
}

TEST_CASE("connected components") {
  auto a4 = rs_of("A4");
  CHECK(connected_components(a4, {0, 1, 3}) == std::vector<std::vector<int>>{{0, 1}, {3}});
}
