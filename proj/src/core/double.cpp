#include "double.hpp"

namespace manin {

DoubleAlgebra::DoubleAlgebra(AlgebraPtr base) : base_(std::move(base)), id_(next_space_id()) {
  const std::size_t n = base_->dim();
  gram_ = Matrix<Rational>(2 * n, 2 * n);
  const auto& K = base_->killing_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(K(i, j))) continue;
      gram_(i, j) = K(i, j);
      gram_(n + i, n + j) = -K(i, j);
    }
  index_rows();
}

DoubleAlgebra::DoubleAlgebra(AlgebraPtr base, Matrix<Rational> gram)
    : base_(std::move(base)), id_(next_space_id()), gram_(std::move(gram)) {
  if (gram_.rows() != dim() || gram_.cols() != dim()) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be 2 dim g square");
  if (!(gram_ == gram_.transpose())) throw Error(ErrorCode::DimensionMismatch, "Gram matrix must be symmetric");
  index_rows();
}

void DoubleAlgebra::index_rows() {
  rows_.assign(dim(), {});
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!is_zero(gram_(i, j))) rows_[i].emplace_back(j, gram_(i, j));
}

bool DoubleAlgebra::q_nondegenerate() const {
  std::call_once(nondeg_once_, [this] { nondegenerate_ = determinant(gram_) != 0; });
  return nondegenerate_;
}

// Q is invariant iff for every basis z the matrix A = G ad(z) is skew:
// A(x, y) = Q(x, [z, y]) and Q([z, x], y) = A(y, x).
std::optional<std::array<std::size_t, 3>> DoubleAlgebra::q_invariance_failure() const {
  std::call_once(invariant_once_, [this] {
    const std::size_t n = base_->dim();
    const std::size_t N = dim();
    for (std::size_t z = 0; z < N; ++z) {
      const std::size_t zb = z % n, off = z < n ? 0 : n;
      // ad z is supported on one half: column y (same half) is [b_zb, b_y].
      Matrix<Rational> A(N, N);
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& t : base_->bracket_terms(zb, y)) {
          const std::size_t w = off + static_cast<std::size_t>(t.index);
          for (std::size_t x = 0; x < N; ++x)
            if (!is_zero(gram_(x, w))) A(x, off + y) += gram_(x, w) * t.coeff;
        }
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = x; y < N; ++y)
          if (A(x, y) + A(y, x) != 0) {
            invariance_failure_ = std::array<std::size_t, 3>{z, y, x};
            return;
          }
    }
  });
  return invariance_failure_;
}

namespace {

template <class F> std::vector<Vec<F>> coordinate_vectors(std::size_t dim, const std::vector<std::size_t>& idx) {
  std::vector<Vec<F>> out;
  for (auto k : idx) out.push_back(unit_vec<F>(dim, k));
  return out;
}

template <class F> void validate(const DoubleAlgebra& D, const BDTriple& t, const CartanExtension<F>& ext) {
  const LieAlgebra& L = D.base();
  BDVerdict v = check_bd_conditions(L.root_system(), t);
  if (!v.ok) throw Error(ErrorCode::InvalidTriple, "condition " + std::to_string(v.condition) + ": " + v.message);
  try {
    check_extension_consistency(L, t, ext);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentExtension) throw;
    throw Error(ErrorCode::InvalidExtension, e.what());
  }
}

}  // namespace

template <class F>
Subspace<F> build_W_phi_with_lift(const DoubleAlgebra& D, const BDTriple& t, const CartanExtension<F>& ext,
                                  const std::function<Vec<F>(const Vec<F>&)>& lift) {
  validate(D, t, ext);
  const LieAlgebra& L = D.base();
  const std::size_t n = L.dim();
  std::vector<Vec<F>> rows;
  auto append = [&](std::vector<Vec<F>> vs) { rows.insert(rows.end(), vs.begin(), vs.end()); };
  append(on_side(D, ext.l1.basis(), 0));
  append(on_side(D, coordinate_vectors<F>(n, complement_root_indices(L, t.pi1, +1)), 0));
  PhiMap<F> phi(L, t, ext);
  const auto r1 = rbar(L, t.pi1, ext.hbar1);
  for (const auto& x : r1.basis()) rows.push_back(D.element(x, lift(phi.apply(x))));
  append(on_side(D, coordinate_vectors<F>(n, complement_root_indices(L, t.pi2, -1)), 1));
  append(on_side(D, ext.l2.basis(), 1));
  return Subspace<F>::span(D.dim(), D.id(), std::move(rows));
}

template <class F> Subspace<F> build_W_phi(const DoubleAlgebra& D, const BDTriple& t, const CartanExtension<F>& ext) {
  return build_W_phi_with_lift<F>(D, t, ext, [](const Vec<F>& v) { return v; });
}

template Subspace<Rational> build_W_phi(const DoubleAlgebra&, const BDTriple&, const CartanExtension<Rational>&);
template Subspace<Gaussian> build_W_phi(const DoubleAlgebra&, const BDTriple&, const CartanExtension<Gaussian>&);
template Subspace<Rational> build_W_phi_with_lift(const DoubleAlgebra&, const BDTriple&, const CartanExtension<Rational>&,
                                                  const std::function<Vec<Rational>(const Vec<Rational>&)>&);
template Subspace<Gaussian> build_W_phi_with_lift(const DoubleAlgebra&, const BDTriple&, const CartanExtension<Gaussian>&,
                                                  const std::function<Vec<Gaussian>(const Vec<Gaussian>&)>&);

}  // namespace manin
