#ifndef MANIN_CHEVALLEY_HPP
#define MANIN_CHEVALLEY_HPP

// Lie algebras with exact rational structure constants.
//
// Root algebras are built in the Weyl basis
//   H_1..H_n, E_{b_1}..E_{b_m}, E_{-b_1}..E_{-b_m}
// (b_k the positive roots in RootSystem order) with
//   [H, E_a] = a(H) E_a,  [E_a, E_{-a}] = H_a,  a(H) = K(H_a, H),  K(E_a, E_{-a}) = 1,
// K the Killing form.  It is obtained from a Chevalley basis (signs fixed by
// taking N_{a,b} = +(p+1) on extraspecial pairs and N_{-a,-b} = -N_{a,b}) by
// rescaling E_{-a} -> E_{-a} / K(e_a, e_{-a}) and h_i -> h_i / K(e_i, e_{-i}).
// Since [e_a, e_{-a}] = K(e_a, e_{-a}) H_a, the rescaled basis satisfies all
// four relations with the unscaled Killing form; every constant stays rational.

#include "linalg.hpp"
#include "rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace manin {

struct Term {
  int index;
  Rational coeff;
};

class LieAlgebra {
public:
  // Weyl-basis algebra of a (possibly doubled) root system.
  static std::shared_ptr<const LieAlgebra> build(const RootSystem& rs);
  // Algebra given by an explicit table (table[i*dim+j] = [b_i, b_j]).
  static std::shared_ptr<const LieAlgebra> from_table(std::size_t dim, std::vector<std::vector<Term>> table,
                                                      std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }
  SpaceId id() const { return id_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }

  // Root data; null for algebras built from a table.
  const RootSystem* roots() const { return rs_ ? &*rs_ : nullptr; }
  const RootSystem& root_system() const;
  int rank() const;
  std::size_t num_positive() const;

  std::size_t cartan_index(int i) const;        // H_{i+1}
  std::size_t positive_index(int k) const;      // E_{b_k}
  std::size_t negative_index(int k) const;      // E_{-b_k}
  // Basis index of E_r for a (signed) root r; throws IndexOutOfRange.
  std::size_t root_vector_index(const Root& r) const;
  bool is_cartan_index(std::size_t k) const { return rs_ && k < static_cast<std::size_t>(rank()); }

  const std::vector<Term>& bracket_terms(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  template <class F> Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket operand length");
    Vec<F> out = zero_vec<F>(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const auto& terms = table_[i * dim_ + j];
        if (terms.empty()) continue;
        F xy = x[i] * y[j];
        for (const auto& t : terms) out[t.index] += xy * F(t.coeff);
      }
    }
    return out;
  }

  // Killing form (bilinear, no conjugation).
  const Matrix<Rational>& killing_matrix() const { return killing_; }
  template <class F> F killing(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "killing operand length");
    F s(0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(killing_(i, j)) && !is_zero(y[j])) s += x[i] * F(killing_(i, j)) * y[j];
    }
    return s;
  }

  // ad(b_k) as a dim x dim matrix (column j = [b_k, b_j]).
  Matrix<Rational> ad_matrix(std::size_t k) const;
  // trace(ad x ad y) over all basis pairs, straight from the table.
  Matrix<Rational> ad_trace_form() const;

  // Basis vector helpers for root algebras.
  template <class F> Vec<F> H(int i) const { return unit_vec<F>(dim_, cartan_index(i)); }
  template <class F> Vec<F> E(const Root& r) const { return unit_vec<F>(dim_, root_vector_index(r)); }
  template <class F> Vec<F> basis_vector(std::size_t k) const { return unit_vec<F>(dim_, k); }
  // H_r = sum_j r_j H_j for a root r.
  template <class F> Vec<F> H_root(const Root& r) const {
    Vec<F> v = zero_vec<F>(dim_);
    for (int j = 0; j < rank(); ++j) v[cartan_index(j)] = F(Rational(r[j]));
    return v;
  }

private:
  LieAlgebra() = default;
  void finish_killing_from_table();

  std::size_t dim_ = 0;
  SpaceId id_ = 0;
  std::optional<RootSystem> rs_;
  std::vector<std::vector<Term>> table_;
  Matrix<Rational> killing_;
  std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Structure constants N_{a,b} of the Chevalley basis (exposed for tests).
class ChevalleyConstants {
public:
  explicit ChevalleyConstants(const RootSystem& rs);
  // N_{a,b} for roots a, b with a + b a root; 0 otherwise.
  int N(const Root& a, const Root& b) const;

private:
  int lookup_positive(int i, int j) const;

  const RootSystem* rs_;
  std::vector<int> table_;  // m x m, positive pairs
  std::size_t m_;
};

// Named subalgebras of the parabolic pair (Pi_1, Pi_2).
template <class F> struct ParabolicData {
  Subspace<F> g1, g2, h1, h2, n1_plus, n2_minus, r1, r2, m1, m2;
};

// Subspaces h, n+, n-, and the span of a set of basis indices.
template <class F> Subspace<F> cartan_subalgebra(const LieAlgebra& L) {
  std::vector<std::size_t> idx;
  for (int i = 0; i < L.rank(); ++i) idx.push_back(L.cartan_index(i));
  return Subspace<F>::coordinate(L.dim(), L.id(), idx);
}
template <class F> Subspace<F> nilradical_plus(const LieAlgebra& L) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < L.num_positive(); ++k) idx.push_back(L.positive_index(static_cast<int>(k)));
  return Subspace<F>::coordinate(L.dim(), L.id(), idx);
}
template <class F> Subspace<F> nilradical_minus(const LieAlgebra& L) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < L.num_positive(); ++k) idx.push_back(L.negative_index(static_cast<int>(k)));
  return Subspace<F>::coordinate(L.dim(), L.id(), idx);
}

// Semisimple part g_S (root vectors E_{+-b}, b supported on S, and H_a, a in S).
std::vector<std::size_t> semisimple_part_indices(const LieAlgebra& L, const std::vector<int>& simple_subset);
// E_b for positive b not supported on S (sign = +1), or E_{-b} (sign = -1).
std::vector<std::size_t> complement_root_indices(const LieAlgebra& L, const std::vector<int>& simple_subset, int sign);

template <class F>
ParabolicData<F> parabolic_data(const LieAlgebra& L, const std::vector<int>& pi1, const std::vector<int>& pi2) {
  const std::size_t n = L.dim();
  ParabolicData<F> d;
  d.g1 = Subspace<F>::coordinate(n, L.id(), semisimple_part_indices(L, pi1));
  d.g2 = Subspace<F>::coordinate(n, L.id(), semisimple_part_indices(L, pi2));
  std::vector<std::size_t> h1, h2;
  for (int i : pi1) h1.push_back(L.cartan_index(i));
  for (int i : pi2) h2.push_back(L.cartan_index(i));
  d.h1 = Subspace<F>::coordinate(n, L.id(), h1);
  d.h2 = Subspace<F>::coordinate(n, L.id(), h2);
  d.n1_plus = Subspace<F>::coordinate(n, L.id(), complement_root_indices(L, pi1, +1));
  d.n2_minus = Subspace<F>::coordinate(n, L.id(), complement_root_indices(L, pi2, -1));
  auto h = cartan_subalgebra<F>(L);
  d.r1 = d.g1.sum(h);
  d.r2 = d.g2.sum(h);
  d.m1 = d.g1.intersect(d.n2_minus);
  d.m2 = d.g2.intersect(d.n1_plus);
  return d;
}

// True iff [v, w] lies in V for all basis pairs; optionally reports a failing pair.
template <class F>
bool is_subalgebra_closed(const LieAlgebra& L, const Subspace<F>& V, std::pair<std::size_t, std::size_t>* witness = nullptr) {
  if (V.ambient() != L.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace is not in this algebra");
  if (V.parent() != 0 && V.parent() != L.id()) throw Error(ErrorCode::ParentMismatch, "subspace belongs to another algebra");
  const auto& b = V.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!V.contains(L.bracket(b[i], b[j]))) {
        if (witness) *witness = {i, j};
        return false;
      }
  return true;
}

}  // namespace manin

#endif
