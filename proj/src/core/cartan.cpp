#include "cartan.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace manin {

SimpleRootMap::SimpleRootMap(const LieAlgebra& L, const std::map<int, int>& f) {
  const RootSystem& rs = L.root_system();
  // inner products, not just the Cartan matrix: H_a -> H_fa must keep K
  const auto& ip = rs.inner();
  for (const auto& [a, fa] : f) {
    if (a < 0 || a >= rs.rank() || fa < 0 || fa >= rs.rank())
      throw Error(ErrorCode::IndexOutOfRange, "simple root index out of range");
    for (const auto& [b, fb] : f)
      if (ip[fa][fb] != ip[a][b]) throw Error(ErrorCode::InvalidTriple, "map does not preserve the root inner products");
  }
  std::vector<int> S;
  for (const auto& kv : f) S.push_back(kv.first);
  const auto& pos = rs.positive_roots();

  auto push_image = [&](const Root& src, const Root& dst) {
    image_[L.root_vector_index(src)] = L.E<Rational>(dst);
  };
  auto neg = [](Root r) {
    for (auto& c : r) c = -c;
    return r;
  };
  auto coeff_of = [&](std::size_t i, std::size_t j, std::size_t target) {
    for (const auto& t : L.bracket_terms(i, j))
      if (static_cast<std::size_t>(t.index) == target) return t.coeff;
    throw Error(ErrorCode::Internal, "expected nonzero bracket");
  };

  for (const auto& [a, fa] : f) image_[L.cartan_index(a)] = L.H<Rational>(fa);
  // Supported roots come in height order, so lower pieces are mapped first.
  for (int k : rs.positive_roots_supported_on(S)) {
    const Root& beta = pos[k];
    if (RootSystem::height(beta) == 1) {
      int a = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin());
      Root img = rs.simple_root(f.at(a));
      push_image(beta, img);
      push_image(neg(beta), neg(img));
      continue;
    }
    int a = -1;
    Root rest;
    for (int i : S) {
      rest = beta;
      rest[i] -= 1;
      if (rs.index_of(rest) >= 0) {
        a = i;
        break;
      }
    }
    const Root ai = rs.simple_root(a);
    for (int sign : {+1, -1}) {
      const Root x = sign > 0 ? ai : neg(ai);
      const Root y = sign > 0 ? rest : neg(rest);
      const Root target = sign > 0 ? beta : neg(beta);
      const std::size_t ix = L.root_vector_index(x), iy = L.root_vector_index(y), it = L.root_vector_index(target);
      Rational c = coeff_of(ix, iy, it);
      image_[it] = scaled(L.bracket(image_.at(ix), image_.at(iy)), Rational(1 / c));
    }
  }
}

CartanExtension<Gaussian> to_gaussian(const CartanExtension<Rational>& ext) {
  return {to_gaussian(ext.hbar1), to_gaussian(ext.hbar2), to_gaussian(ext.l1), to_gaussian(ext.l2),
          to_gaussian(ext.phi_h)};
}

Matrix<Rational> cartan_gram(const LieAlgebra& L) {
  const auto n = static_cast<std::size_t>(L.rank());
  Matrix<Rational> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = L.killing_matrix()(L.cartan_index(static_cast<int>(i)), L.cartan_index(static_cast<int>(j)));
  return g;
}

namespace {

template <class F> F form(const Matrix<Rational>& g, const Vec<F>& u, const Vec<F>& v) {
  F s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(g(i, j)) && !is_zero(v[j])) s += u[i] * F(g(i, j)) * v[j];
  }
  return s;
}

[[noreturn]] void inconsistent(const std::string& msg) { throw Error(ErrorCode::InconsistentExtension, msg); }

template <class F> void check_in_cartan(const LieAlgebra& L, const Subspace<F>& V, const char* name) {
  if (V.ambient() != L.dim()) inconsistent(std::string(name) + " has the wrong ambient dimension");
  if (V.parent() != 0 && V.parent() != L.id()) throw Error(ErrorCode::ParentMismatch, std::string(name) + " belongs to another algebra");
  for (const auto& b : V.basis())
    for (std::size_t k = static_cast<std::size_t>(L.rank()); k < b.size(); ++k)
      if (!is_zero(b[k])) inconsistent(std::string(name) + " is not contained in h");
}

template <class F> Vec<F> apply_h(const LieAlgebra& L, const Matrix<F>& M, const Vec<F>& v) {
  return embed_cartan(L, M.apply(cartan_coords(L, v)));
}

}  // namespace

template <class F> void check_extension_consistency(const LieAlgebra& L, const BDTriple& t, const CartanExtension<F>& ext) {
  const auto n = static_cast<std::size_t>(L.rank());
  check_in_cartan(L, ext.hbar1, "hbar_1");
  check_in_cartan(L, ext.hbar2, "hbar_2");
  check_in_cartan(L, ext.l1, "l_1");
  check_in_cartan(L, ext.l2, "l_2");
  if (ext.phi_h.rows() != n || ext.phi_h.cols() != n) inconsistent("phi_h must be rank x rank");
  for (int a : t.pi1)
    if (!ext.hbar1.contains(L.H<F>(a))) inconsistent("hbar_1 does not contain H_alpha" + std::to_string(a + 1));
  for (int b : t.pi2)
    if (!ext.hbar2.contains(L.H<F>(b))) inconsistent("hbar_2 does not contain H_alpha" + std::to_string(b + 1));
  if (!(ext.l1 == radical(L, ext.hbar1))) inconsistent("l_1 is not the radical of hbar_1");
  if (!(ext.l2 == radical(L, ext.hbar2))) inconsistent("l_2 is not the radical of hbar_2");
  if (ext.hbar1.dim() - ext.l1.dim() != ext.hbar2.dim() - ext.l2.dim())
    inconsistent("hbar_1 / l_1 and hbar_2 / l_2 have different dimensions");
  for (const auto& b : ext.hbar1.basis())
    if (!ext.hbar2.contains(apply_h(L, ext.phi_h, b))) inconsistent("phi_h does not map hbar_1 into hbar_2");
  for (const auto& b : ext.l1.basis())
    if (!ext.l2.contains(apply_h(L, ext.phi_h, b))) inconsistent("phi_h does not map l_1 into l_2");
  for (const auto& [a, fa] : t.phi)
    if (!ext.l2.contains(apply_h(L, ext.phi_h, L.H<F>(a)) - L.H<F>(fa)))
      inconsistent("phi_h does not extend H_alpha" + std::to_string(a + 1) + " -> H_alpha" + std::to_string(fa + 1));
  // injectivity of hbar_1 / l_1 -> hbar_2 / l_2
  std::vector<Vec<F>> rows;
  for (const auto& b : ext.hbar1.basis()) rows.push_back(ext.l2.reduce(apply_h(L, ext.phi_h, b)));
  if (!rows.empty())
    for (const auto& c : left_kernel(rows, L.dim())) {
      Vec<F> x = zero_vec<F>(L.dim());
      for (std::size_t k = 0; k < c.size(); ++k) axpy(x, c[k], ext.hbar1.basis()[k]);
      if (!ext.l1.contains(x)) inconsistent("induced map hbar_1 / l_1 -> hbar_2 / l_2 is not injective");
    }
}

template <class F> IVVerdict<F> verify_condition_iv(const LieAlgebra& L, const BDTriple& t, const CartanExtension<F>& ext) {
  check_extension_consistency(L, t, ext);
  IVVerdict<F> v;
  const auto G = cartan_gram(L);
  const auto& hb = ext.hbar1.basis();
  std::vector<Vec<F>> hc, mc;
  for (const auto& b : hb) {
    hc.push_back(cartan_coords(L, b));
    mc.push_back(ext.phi_h.apply(hc.back()));
  }
  for (std::size_t i = 0; i < hb.size(); ++i)
    for (std::size_t j = i; j < hb.size(); ++j)
      if (form(G, mc[i], mc[j]) != form(G, hc[i], hc[j])) {
        v.kind = IVKind::NotIsometric;
        v.witness = {hb[i], hb[j]};
        v.message = "phi_h does not preserve the Killing form on hbar_1";
        return v;
      }

  const auto r1 = rbar(L, t.pi1, ext.hbar1);
  const auto r2 = rbar(L, t.pi2, ext.hbar2);
  const auto meet = r1.intersect(r2);
  if (meet.is_zero_space()) return v;
  PhiMap<F> phi(L, t, ext);
  std::vector<Vec<F>> diffs;
  for (const auto& x : meet.basis()) diffs.push_back(ext.l2.reduce(phi.apply(x) - x));
  auto ker = left_kernel(diffs, L.dim());
  if (!ker.empty()) {
    Vec<F> x = zero_vec<F>(L.dim());
    for (std::size_t k = 0; k < ker[0].size(); ++k) axpy(x, ker[0][k], meet.basis()[k]);
    v.kind = IVKind::FixedPoint;
    v.witness = {x};
    v.message = "phi fixes a nonzero vector of rbar_1 n rbar_2 modulo l_2";
  }
  return v;
}

template void check_extension_consistency(const LieAlgebra&, const BDTriple&, const CartanExtension<Rational>&);
template void check_extension_consistency(const LieAlgebra&, const BDTriple&, const CartanExtension<Gaussian>&);
template IVVerdict<Rational> verify_condition_iv(const LieAlgebra&, const BDTriple&, const CartanExtension<Rational>&);
template IVVerdict<Gaussian> verify_condition_iv(const LieAlgebra&, const BDTriple&, const CartanExtension<Gaussian>&);

CartanExtension<Rational> trivial_extension(const LieAlgebra& L, const Matrix<Rational>& phi_h) {
  auto h = cartan_subalgebra<Rational>(L);
  Subspace<Rational> zero(L.dim(), L.id());
  return {h, h, zero, zero, phi_h};
}

namespace {

using QVec = Vec<Rational>;
using QMat = Matrix<Rational>;

// Reflection matrix in r with respect to the Gram matrix g.
QMat reflection(const QMat& g, const QVec& r) {
  const std::size_t n = r.size();
  const Rational rr = form(g, r, r);
  QVec gr = g.apply(r);
  QMat s = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= 2 * r[i] * gr[j] / rr;
  return s;
}

std::vector<QVec> gram_schmidt(const QMat& g, const std::vector<QVec>& basis) {
  std::vector<QVec> out;
  for (QVec v : basis) {
    for (const auto& e : out) axpy(v, Rational(-form(g, e, v) / form(g, e, e)), e);
    if (!is_zero_vec(v)) out.push_back(std::move(v));
  }
  return out;
}

bool fixed_point_free(const QMat& M) { return determinant(M - QMat::identity(M.rows())) != 0; }

}  // namespace

std::optional<CartanExtension<Rational>> construct_default_extension(const LieAlgebra& L, const BDTriple& t,
                                                                    const Permutation* sigma) {
  const auto n = static_cast<std::size_t>(L.rank());
  const QMat G = cartan_gram(L);
  QMat P = QMat::identity(n);
  if (sigma) {
    if (sigma->size() != n) throw Error(ErrorCode::DimensionMismatch, "sigma has the wrong length");
    P = QMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sigma->at(sigma->at(i)) != static_cast<int>(i))
        throw Error(ErrorCode::NotDiagramAutomorphism, "sigma must be an involution");
      P(static_cast<std::size_t>(sigma->at(i)), i) = 1;
    }
  }
  auto eigen = [&](int s) {
    QMat A = P;
    for (std::size_t i = 0; i < n; ++i) A(i, i) -= s;
    return kernel(A);
  };

  // Witt reflections carrying H_a to H_{phi a}, done inside each eigenspace of P.
  QMat T = QMat::identity(n);
  std::vector<QVec> U;  // echelonized span of the H_a, a in Pi_1
  for (int s : {+1, -1}) {
    std::vector<QVec> kept;
    for (int a : t.pi1) {
      const int sa = sigma ? sigma->at(a) : a;
      QVec u = unit_vec<Rational>(n, a), fu = unit_vec<Rational>(n, t.phi.at(a));
      if (sigma) {
        axpy(u, Rational(s), unit_vec<Rational>(n, sa));
        axpy(fu, Rational(s), unit_vec<Rational>(n, t.phi.at(sa)));
      } else if (s < 0) {
        continue;
      }
      if (is_zero_vec(u)) continue;
      auto trial = kept;
      trial.push_back(u);
      if (rank_of(trial, n) == kept.size()) continue;
      kept.push_back(u);
      QVec a_img = T.apply(u);
      if (a_img != fu) T = reflection(G, a_img - fu) * T;
    }
    U.insert(U.end(), kept.begin(), kept.end());
  }

  // Orthogonal complement of U, split by eigenvalue of P, with orthogonal bases.
  std::vector<QVec> comp;
  std::vector<int> block;
  for (int s : {+1, -1}) {
    auto E = eigen(s);
    if (E.empty()) continue;
    std::vector<QVec> cons;
    for (const auto& u : U) cons.push_back(G.apply(u));
    // x = sum c_k E_k with (u, x) = 0
    QMat A(cons.size(), E.size());
    for (std::size_t r = 0; r < cons.size(); ++r)
      for (std::size_t c = 0; c < E.size(); ++c) {
        Rational s2 = 0;
        for (std::size_t k = 0; k < n; ++k) s2 += cons[r][k] * E[c][k];
        A(r, c) = s2;
      }
    std::vector<QVec> part;
    for (const auto& c : kernel(A)) {
      QVec x = zero_vec<Rational>(n);
      for (std::size_t k = 0; k < E.size(); ++k) axpy(x, c[k], E[k]);
      part.push_back(std::move(x));
    }
    for (auto& e : gram_schmidt(G, part)) {
      comp.push_back(std::move(e));
      block.push_back(s);
    }
  }

  const std::size_t c = comp.size();
  std::vector<QMat> flips(c);
  for (std::size_t k = 0; k < c; ++k) flips[k] = reflection(G, comp[k]);
  // sign patterns on the orthogonal basis, most negative first
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << c); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  auto sign_matrix = [&](std::uint32_t m) {
    QMat R = QMat::identity(n);
    for (std::size_t k = 0; k < c; ++k)
      if (m & (1u << k)) R = flips[k] * R;
    return R;
  };

  auto finish = [&](const QMat& M) -> std::optional<CartanExtension<Rational>> {
    auto ext = trivial_extension(L, M);
    if (verify_condition_iv(L, t, ext).ok()) return ext;
    return std::nullopt;
  };

  for (auto m : masks) {
    QMat M = T * sign_matrix(m);
    if (fixed_point_free(M))
      if (auto ext = finish(M)) return ext;
  }
  // reflections in e_j + q e_k inside one block, composed with sign patterns
  const std::vector<Rational> qs = {1, -1, 2, -2, ratio(1, 2), ratio(-1, 2)};
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t k = j + 1; k < c; ++k) {
      if (block[j] != block[k]) continue;
      for (const auto& q : qs) {
        QVec r = comp[j];
        axpy(r, q, comp[k]);
        QMat S = reflection(G, r);
        for (auto m : masks) {
          QMat M = T * S * sign_matrix(m);
          if (fixed_point_free(M))
            if (auto ext = finish(M)) return ext;
        }
      }
    }
  return std::nullopt;
}

Subspace<Rational> stabilizer_subalgebra(const LieAlgebra& L, const BDTriple& t) {
  const auto n = static_cast<std::size_t>(L.rank());
  const QMat G = cartan_gram(L);
  QMat A(t.pi1.size(), n);
  std::size_t r = 0;
  for (const auto& [a, fa] : t.phi) {
    for (std::size_t j = 0; j < n; ++j) A(r, j) = G(static_cast<std::size_t>(a), j) - G(static_cast<std::size_t>(fa), j);
    ++r;
  }
  std::vector<QVec> vs;
  for (const auto& k : kernel(A)) vs.push_back(embed_cartan(L, k));
  return Subspace<Rational>::span(L.dim(), L.id(), std::move(vs));
}

}  // namespace manin
