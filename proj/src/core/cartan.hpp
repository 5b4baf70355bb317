#ifndef MANIN_CARTAN_HPP
#define MANIN_CARTAN_HPP

// Cartan extension data (hbar_1, hbar_2, l_1, l_2, phi on the Cartan part),
// condition iv), and the stabilizer subalgebra h^phi.

#include "bdtriple.hpp"
#include "chevalley.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace manin {

// Lie algebra isomorphism g_S -> g_T extending E_{+-a} -> E_{+-f(a)} and
// H_a -> H_{f(a)} for simple a in S.  Images are stored per basis index of g_S.
// f must preserve the root inner products on S.
class SimpleRootMap {
public:
  SimpleRootMap(const LieAlgebra& L, const std::map<int, int>& f);

  bool in_domain(std::size_t basis_index) const { return image_.count(basis_index) != 0; }
  const Vec<Rational>& image(std::size_t basis_index) const { return image_.at(basis_index); }
  const std::map<std::size_t, Vec<Rational>>& images() const { return image_; }

  // Applies the map to a vector supported on the domain; throws InvalidExtension otherwise.
  template <class F> Vec<F> apply(const Vec<F>& x) const {
    Vec<F> out = zero_vec<F>(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (is_zero(x[k])) continue;
      auto it = image_.find(k);
      if (it == image_.end()) throw Error(ErrorCode::InvalidExtension, "vector is outside the domain of the root map");
      for (std::size_t j = 0; j < out.size(); ++j)
        if (!is_zero(it->second[j])) out[j] += x[k] * F(it->second[j]);
    }
    return out;
  }

private:
  std::map<std::size_t, Vec<Rational>> image_;
};

template <class F> struct CartanExtension {
  // Subspaces of the algebra, contained in h.
  Subspace<F> hbar1, hbar2, l1, l2;
  // rank x rank matrix on H-coordinates (column j = image of H_j); only its
  // restriction to hbar1 matters, read modulo l2.
  Matrix<F> phi_h;

  static constexpr FieldTag field = FieldOf<F>::tag;
};

CartanExtension<Gaussian> to_gaussian(const CartanExtension<Rational>& ext);

// Full phi on rbar_1 = g_1 + hbar_1: root map on root vectors, phi_h on the
// Cartan part; images reduced to their canonical representative mod l_2.
template <class F> class PhiMap {
public:
  PhiMap(const LieAlgebra& L, const BDTriple& t, const CartanExtension<F>& ext)
      : L_(&L), roots_(L, t.phi), ext_(&ext) {}

  Vec<F> apply(const Vec<F>& x) const {
    const std::size_t n = static_cast<std::size_t>(L_->rank());
    Vec<F> root_part = x;
    Vec<F> h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h[i] = x[i];
      root_part[i] = F(0);
    }
    Vec<F> out = roots_.apply(root_part);
    Vec<F> mh = ext_->phi_h.apply(h);
    for (std::size_t i = 0; i < n; ++i) out[i] += mh[i];
    return ext_->l2.reduce(std::move(out));
  }
  const SimpleRootMap& root_map() const { return roots_; }

private:
  const LieAlgebra* L_;
  SimpleRootMap roots_;
  const CartanExtension<F>* ext_;
};

// Embeds an H-coordinate vector into the algebra.
template <class F> Vec<F> embed_cartan(const LieAlgebra& L, const Vec<F>& h) {
  Vec<F> v = zero_vec<F>(L.dim());
  for (int i = 0; i < L.rank(); ++i) v[L.cartan_index(i)] = h.at(i);
  return v;
}
// H-coordinates of a vector in h; throws NotInCartan.
template <class F> Vec<F> cartan_coords(const LieAlgebra& L, const Vec<F>& v) {
  Vec<F> h(static_cast<std::size_t>(L.rank()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < h.size()) {
      h[k] = v[k];
    } else if (!is_zero(v[k])) {
      throw Error(ErrorCode::NotInCartan, "vector has a root-vector component");
    }
  }
  return h;
}

Matrix<Rational> cartan_gram(const LieAlgebra& L);

// Kernel of K restricted to V (V inside h); throws NotInCartan.
template <class F> Subspace<F> radical(const LieAlgebra& L, const Subspace<F>& V) {
  const auto& b = V.basis();
  for (const auto& v : b) (void)cartan_coords(L, v);
  Matrix<F> gram(b.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) gram(i, j) = L.killing(b[i], b[j]);
  std::vector<Vec<F>> rad;
  for (const auto& c : kernel(gram)) {
    Vec<F> x = zero_vec<F>(L.dim());
    for (std::size_t i = 0; i < b.size(); ++i) axpy(x, c[i], b[i]);
    rad.push_back(std::move(x));
  }
  return Subspace<F>::span(L.dim(), L.id(), std::move(rad));
}

enum class IVKind { Ok, NotIsometric, FixedPoint };

template <class F> struct IVVerdict {
  IVKind kind = IVKind::Ok;
  std::vector<Vec<F>> witness;  // offending pair (NotIsometric) or fixed vector
  std::string message;
  bool ok() const { return kind == IVKind::Ok; }
};

// Structural consistency of ext with t; throws InconsistentExtension.
template <class F> void check_extension_consistency(const LieAlgebra& L, const BDTriple& t, const CartanExtension<F>& ext);

template <class F> IVVerdict<F> verify_condition_iv(const LieAlgebra& L, const BDTriple& t, const CartanExtension<F>& ext);

// The split extension hbar_i = h, l_i = 0 with the identity block on h.
CartanExtension<Rational> trivial_extension(const LieAlgebra& L, const Matrix<Rational>& phi_h);

// Searches hbar = h, l = 0 and phi_h = (reflections carrying H_a to H_{phi a})
// composed with a member of a finite family of isometries of the orthogonal
// complement.  With sigma (an involutive diagram automorphism) given, only
// extensions commuting with the induced permutation of the H_i are considered.  nullopt means none found.
std::optional<CartanExtension<Rational>> construct_default_extension(const LieAlgebra& L, const BDTriple& t,
                                                                    const Permutation* sigma = nullptr);

// h^phi = {v in h : a(v) = (phi a)(v), a in Pi_1}.
Subspace<Rational> stabilizer_subalgebra(const LieAlgebra& L, const BDTriple& t);

// rbar_i = g_i + hbar_i.
template <class F> Subspace<F> rbar(const LieAlgebra& L, const std::vector<int>& pi, const Subspace<F>& hbar) {
  return Subspace<F>::coordinate(L.dim(), L.id(), semisimple_part_indices(L, pi)).sum(hbar);
}

}  // namespace manin

#endif
