#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan.hpp"
#include "oracles.hpp"

using namespace manin;

namespace {

AlgebraPtr alg(const char* t) { return LieAlgebra::build(RootSystem::build(parse_type(t))); }

BDTriple make(std::vector<int> pi1, std::vector<int> images) {
  BDTriple t;
  for (std::size_t k = 0; k < pi1.size(); ++k) t.phi[pi1[k]] = images[k];
  t.pi1 = pi1;
  t.pi2 = images;
  std::sort(t.pi1.begin(), t.pi1.end());
  std::sort(t.pi2.begin(), t.pi2.end());
  return t;
}

Matrix<Rational> mat(std::vector<std::vector<long>> rows) {
  Matrix<Rational> m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  return m;
}

// K on H-coordinates from the ad-trace oracle.
Matrix<Rational> oracle_gram(const LieAlgebra& L) {
  const auto K = oracle::ad_trace(L);
  const auto n = static_cast<std::size_t>(L.rank());
  Matrix<Rational> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = K(L.cartan_index(static_cast<int>(i)), L.cartan_index(static_cast<int>(j)));
  return g;
}

}  // namespace

TEST_CASE("radical of Cartan subspaces") {
  auto L = alg("B2");
  CHECK(radical(*L, cartan_subalgebra<Rational>(*L)).is_zero_space());
  CHECK(radical(*L, Subspace<Rational>(L->dim(), L->id())).is_zero_space());

  // x = H_a1 + i H_(a1+2a2): two orthogonal long roots, so K(x, x) = 0
  Vec<Gaussian> x = to_gaussian(L->H_root<Rational>({1, 0}));
  axpy(x, Gaussian::i(), to_gaussian(L->H_root<Rational>({1, 2})));
  CHECK(is_zero(L->killing(x, x)));
  auto V = Subspace<Gaussian>::span(L->dim(), L->id(), {x});
  CHECK(radical(*L, V) == V);

  auto whole = Subspace<Gaussian>::span(L->dim(), L->id(), {to_gaussian(L->H<Rational>(0)), to_gaussian(L->H<Rational>(1))});
  CHECK(radical(*L, whole).is_zero_space());
  CHECK_THROWS_AS(radical(*L, nilradical_plus<Rational>(*L)), Error);
}

TEST_CASE("positive definite K on the rational Cartan") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(t);
    auto L = alg(t);
    CHECK(cartan_gram(*L) == oracle_gram(*L));
    // leading principal minors
    const auto g = cartan_gram(*L);
    for (std::size_t k = 1; k <= g.rows(); ++k) {
      Matrix<Rational> m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, j);
      CHECK(determinant(m) > 0);
    }
  }
}

TEST_CASE("condition iv on the empty triple") {
  auto L = alg("A2");
  auto minus = trivial_extension(*L, mat({{-1, 0}, {0, -1}}));
  CHECK(verify_condition_iv(*L, BDTriple{}, minus).ok());

  auto plus = trivial_extension(*L, mat({{1, 0}, {0, 1}}));
  const auto v = verify_condition_iv(*L, BDTriple{}, plus);
  CHECK(v.kind == IVKind::FixedPoint);
  REQUIRE(v.witness.size() == 1);
  CHECK(!is_zero_vec(v.witness[0]));
  CHECK(cartan_subalgebra<Rational>(*L).contains(v.witness[0]));

  auto doubled = trivial_extension(*L, mat({{-2, 0}, {0, -2}}));
  CHECK(verify_condition_iv(*L, BDTriple{}, doubled).kind == IVKind::NotIsometric);
}

TEST_CASE("rotation of order three on the A2 Cartan") {
  auto L = alg("A2");
  const auto M = mat({{0, -1}, {1, -1}});  // H1 -> H2, H2 -> -H1 - H2
  const auto G = oracle_gram(*L);
  CHECK(M.transpose() * G * M == G);
  CHECK(determinant(M - Matrix<Rational>::identity(2)) != 0);
  auto ext = trivial_extension(*L, M);
  CHECK(verify_condition_iv(*L, BDTriple{}, ext).ok());
  CHECK(verify_condition_iv(*L, make({0}, {1}), ext).ok());
  // the rotation does not send H1 to H2 for the reversed triple
  CHECK_THROWS_AS(verify_condition_iv(*L, make({1}, {0}), ext), Error);
}

TEST_CASE("inconsistent extensions are rejected") {
  auto L = alg("A2");
  const auto t = make({0}, {1});
  auto ext = trivial_extension(*L, mat({{0, -1}, {1, -1}}));
  auto bad = ext;
  bad.hbar1 = Subspace<Rational>::span(L->dim(), L->id(), {L->H<Rational>(1)});
  bad.hbar2 = bad.hbar1;
  try {
    check_extension_consistency(*L, t, bad);
    FAIL("expected InconsistentExtension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentExtension);
  }
  auto wrong_l = ext;
  wrong_l.l1 = Subspace<Rational>::span(L->dim(), L->id(), {L->H<Rational>(0)});
  CHECK_THROWS_AS(check_extension_consistency(*L, t, wrong_l), Error);
  auto not_cartan = ext;
  not_cartan.hbar1 = not_cartan.hbar1.sum(Subspace<Rational>::span(L->dim(), L->id(), {L->E<Rational>({1, 0})}));
  CHECK_THROWS_AS(check_extension_consistency(*L, t, not_cartan), Error);
}

TEST_CASE("isotropic Gaussian Cartan data") {
  // B2, empty triple, hbar_1 = C x, hbar_2 = C conj(x), both isotropic
  auto L = alg("B2");
  Vec<Gaussian> x = to_gaussian(L->H_root<Rational>({1, 0}));
  axpy(x, Gaussian::i(), to_gaussian(L->H_root<Rational>({1, 2})));
  const auto xb = conj_vec(x);
  CartanExtension<Gaussian> ext;
  ext.hbar1 = ext.l1 = Subspace<Gaussian>::span(L->dim(), L->id(), {x});
  ext.hbar2 = ext.l2 = Subspace<Gaussian>::span(L->dim(), L->id(), {xb});
  ext.phi_h = Matrix<Gaussian>(2, 2);
  CHECK_NOTHROW(check_extension_consistency(*L, BDTriple{}, ext));
  CHECK(verify_condition_iv(*L, BDTriple{}, ext).ok());

  // same line on both sides: x is fixed modulo l_2
  auto same = ext;
  same.hbar2 = same.l2 = ext.hbar1;
  CHECK(verify_condition_iv(*L, BDTriple{}, same).kind == IVKind::FixedPoint);
}

TEST_CASE("default extension on small examples") {
  auto A1 = alg("A1");
  auto e1 = construct_default_extension(*A1, BDTriple{});
  REQUIRE(e1);
  CHECK(e1->phi_h == mat({{-1}}));

  auto A2 = alg("A2");
  auto e2 = construct_default_extension(*A2, make({0}, {1}));
  REQUIRE(e2);
  const auto& M = e2->phi_h;
  CHECK(M.col(0) == Vec<Rational>{0, 1});
  const auto G = oracle_gram(*A2);
  CHECK(M.transpose() * G * M == G);
  CHECK(determinant(M - Matrix<Rational>::identity(2)) != 0);
}

TEST_CASE("default extension exists and is correct for every small triple") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    auto L = alg(name);
    const auto G = oracle_gram(*L);
    const auto n = static_cast<std::size_t>(L->rank());
    for (const auto& t : enumerate_bd_triples(L->root_system())) {
      auto ext = construct_default_extension(*L, t);
      REQUIRE(ext);
      const auto& M = ext->phi_h;
      CHECK(M.transpose() * G * M == G);
      for (const auto& [a, fa] : t.phi) CHECK(M.col(static_cast<std::size_t>(a)) == unit_vec<Rational>(n, static_cast<std::size_t>(fa)));
      CHECK(determinant(M - Matrix<Rational>::identity(n)) != 0);
      CHECK(verify_condition_iv(*L, t, *ext).ok());
    }
  }
}

TEST_CASE("sigma-aware default extensions commute with sigma") {
  auto L = alg("A3");
  const Permutation rev{2, 1, 0};
  Matrix<Rational> P(3, 3);
  for (int i = 0; i < 3; ++i) P(static_cast<std::size_t>(rev[i]), static_cast<std::size_t>(i)) = 1;
  for (const auto& t : enumerate_bd_triples(L->root_system())) {
    if (!check_sigma_equivariance(L->root_system(), t, rev)) continue;
    auto ext = construct_default_extension(*L, t, &rev);
    REQUIRE(ext);
    CHECK(ext->phi_h * P == P * ext->phi_h);
  }
  auto D4 = alg("D4");
  const Permutation triality{2, 1, 3, 0};
  REQUIRE(is_diagram_automorphism(D4->root_system(), triality));
  try {
    construct_default_extension(*D4, BDTriple{}, &triality);
    FAIL("expected NotDiagramAutomorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDiagramAutomorphism);
  }
}

TEST_CASE("stabilizer subalgebra") {
  // dim h^phi = rank - rank{(a - phi a) : a in Pi_1} over the root Gram matrix
  auto rank_drop = [](const LieAlgebra& L, const BDTriple& t) {
    const auto& g = L.root_system().inner();
    std::vector<Vec<Rational>> rows;
    for (const auto& [a, fa] : t.phi) {
      Vec<Rational> r(static_cast<std::size_t>(L.rank()));
      for (int j = 0; j < L.rank(); ++j) r[static_cast<std::size_t>(j)] = g[a][j] - g[fa][j];
      rows.push_back(r);
    }
    return static_cast<std::size_t>(L.rank()) - rank_of(rows, static_cast<std::size_t>(L.rank()));
  };
  auto A2 = alg("A2");
  CHECK(stabilizer_subalgebra(*A2, BDTriple{}).dim() == 2);
  CHECK(stabilizer_subalgebra(*A2, make({0}, {1})).dim() == 1);
  auto A3 = alg("A3");
  CHECK(stabilizer_subalgebra(*A3, make({0, 1}, {1, 2})).dim() == 1);
  for (const char* name : {"A4", "B3", "D4", "F4"}) {
    auto L = alg(name);
    for (const auto& t : enumerate_bd_triples(L->root_system())) {
      const auto S = stabilizer_subalgebra(*L, t);
      CHECK(S.dim() == rank_drop(*L, t));
      for (const auto& v : S.basis())
        for (const auto& [a, fa] : t.phi)
          CHECK(L->killing(L->H<Rational>(a), v) == L->killing(L->H<Rational>(fa), v));
    }
  }
}

TEST_CASE("root map extends to an isomorphism") {
  auto L = alg("A3");
  SimpleRootMap f(*L, {{0, 1}, {1, 2}});
  const auto& rs = L->root_system();
  const std::vector<Root> dom = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {-1, -1, 0}};
  for (const auto& a : dom)
    for (const auto& b : dom) {
      const auto x = L->E<Rational>(a), y = L->E<Rational>(b);
      CHECK(f.apply(L->bracket(x, y)) == L->bracket(f.apply(x), f.apply(y)));
    }
  CHECK(f.apply(L->E<Rational>({1, 1, 0})) != zero_vec<Rational>(L->dim()));
  CHECK(rs.is_root({0, 1, 1}));
  CHECK_THROWS_AS(f.apply(L->E<Rational>({0, 0, 1})), Error);
  CHECK_THROWS_AS(SimpleRootMap(*alg("B2"), {{0, 1}}), Error);
}
