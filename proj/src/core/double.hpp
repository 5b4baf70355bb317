#ifndef MANIN_DOUBLE_HPP
#define MANIN_DOUBLE_HPP

// The double d = g e + g f.  Elements are vectors [a | b] of length 2 dim g,
// the bracket is componentwise and Q(ae + bf, a'e + b'f) = K(a, a') - K(b, b').

#include "bdtriple.hpp"
#include "cartan.hpp"
#include "chevalley.hpp"

#include <array>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

namespace manin {

class DoubleAlgebra {
public:
  explicit DoubleAlgebra(AlgebraPtr base);
  // Same bracket, arbitrary symmetric form (used to exercise the invariance check).
  DoubleAlgebra(AlgebraPtr base, Matrix<Rational> gram);

  const LieAlgebra& base() const { return *base_; }
  const AlgebraPtr& base_ptr() const { return base_; }
  std::size_t dim() const { return 2 * base_->dim(); }
  SpaceId id() const { return id_; }
  const Matrix<Rational>& gram() const { return gram_; }

  template <class F> Vec<F> element(const Vec<F>& a, const Vec<F>& b) const {
    if (a.size() != base_->dim() || b.size() != base_->dim())
      throw Error(ErrorCode::DimensionMismatch, "double element halves have the wrong length");
    return concat(a, b);
  }
  template <class F> std::pair<Vec<F>, Vec<F>> split(const Vec<F>& x) const {
    if (x.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "double element has the wrong length");
    const auto n = static_cast<std::ptrdiff_t>(base_->dim());
    return {Vec<F>(x.begin(), x.begin() + n), Vec<F>(x.begin() + n, x.end())};
  }
  template <class F> Vec<F> diagonal(const Vec<F>& x) const { return element(x, x); }

  template <class F> Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return concat(base_->bracket(a, c), base_->bracket(b, d));
  }

  template <class F> F q(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "Q operand length");
    F s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      for (const auto& [j, g] : rows_[i])
        if (!is_zero(y[j])) s += x[i] * F(g) * y[j];
    }
    return s;
  }

  template <class F> Subspace<F> diagonal_subspace() const {
    std::vector<Vec<F>> rows;
    for (std::size_t k = 0; k < base_->dim(); ++k) rows.push_back(diagonal(unit_vec<F>(base_->dim(), k)));
    return Subspace<F>::span(dim(), id_, std::move(rows));
  }

  // Cached per double: exact determinant test and invariance witness (z, x, y
  // basis indices) if Q is not ad-invariant.
  bool q_nondegenerate() const;
  std::optional<std::array<std::size_t, 3>> q_invariance_failure() const;

private:
  void index_rows();

  AlgebraPtr base_;
  SpaceId id_;
  Matrix<Rational> gram_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;

  mutable std::once_flag nondeg_once_, invariant_once_;
  mutable bool nondegenerate_ = false;
  mutable std::optional<std::array<std::size_t, 3>> invariance_failure_;
};

// Lifts an algebra-level subspace to a summand of the double (side 0 = e, 1 = f).
template <class F> std::vector<Vec<F>> on_side(const DoubleAlgebra& D, const std::vector<Vec<F>>& vs, int side) {
  std::vector<Vec<F>> out;
  const auto z = zero_vec<F>(D.base().dim());
  for (const auto& v : vs) out.push_back(side == 0 ? D.element(v, z) : D.element(z, v));
  return out;
}

// W(phi) = l_1 e + n_1^+ e + {x e + phi(x) f : x in rbar_1} + n_2^- f + l_2 f.
// Throws InvalidTriple if t fails i)-iii), InvalidExtension if ext is
// inconsistent with t.  Condition iv) is not required; the verifier reports
// the consequences when it fails.
template <class F> Subspace<F> build_W_phi(const DoubleAlgebra& D, const BDTriple& t, const CartanExtension<F>& ext);

// Same summands with the graph images phi(x) (canonical mod l_2) passed
// through `lift` first; any lift with lift(v) = v mod l_2 gives the same W.
template <class F>
Subspace<F> build_W_phi_with_lift(const DoubleAlgebra& D, const BDTriple& t, const CartanExtension<F>& ext,
                                  const std::function<Vec<F>(const Vec<F>&)>& lift);

}  // namespace manin

#endif
