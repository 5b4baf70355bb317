#include "verifier.hpp"

namespace manin {

const std::vector<std::string>& manin_check_names() {
  static const std::vector<std::string> names = {"w_subalgebra",         "w_isotropic",  "diag_isotropic",
                                                 "w_dimension",          "trivial_intersection",
                                                 "spans_double",         "q_nondegenerate", "q_ad_invariant"};
  return names;
}

namespace {

template <class F> std::vector<std::string> fmt(const Vec<F>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

template <class F>
std::optional<std::pair<Vec<F>, Vec<F>>> isotropy_witness(const DoubleAlgebra& D, const Subspace<F>& V) {
  if (V.ambient() != D.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace is not in this double");
  const auto& b = V.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!is_zero(D.q(b[i], b[j]))) return std::make_pair(b[i], b[j]);
  return std::nullopt;
}

bool is_ad_invariant_form(const DoubleAlgebra& D) { return !D.q_invariance_failure(); }

template <class F> ManinReport verify_manin_triple(const DoubleAlgebra& D, const Subspace<F>& W) {
  if (W.ambient() != D.dim()) throw Error(ErrorCode::DimensionMismatch, "subspace is not in this double");
  if (W.parent() != 0 && W.parent() != D.id()) throw Error(ErrorCode::ParentMismatch, "subspace belongs to another double");
  ManinReport r;
  const auto diag = D.diagonal_subspace<F>();
  const auto meet = W.intersect(diag);
  const auto join = W.sum(diag);
  r.dims = {D.base().dim(), W.dim(), meet.dim(), join.dim()};

  {
    CheckResult c;
    const auto& b = W.basis();
    for (std::size_t i = 0; i < b.size() && c.pass; ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vec<F> z = D.bracket(b[i], b[j]);
        if (!W.contains(z)) {
          c.pass = false;
          c.detail = "bracket of basis vectors " + std::to_string(i) + ", " + std::to_string(j) + " leaves W";
          c.witness = {fmt(b[i]), fmt(b[j])};
          break;
        }
      }
    r.checks["w_subalgebra"] = c;
  }
  for (const auto& [name, V] : {std::pair{"w_isotropic", &W}, std::pair{"diag_isotropic", &diag}}) {
    CheckResult c;
    if (auto w = isotropy_witness(D, *V)) {
      c.pass = false;
      c.detail = "Q(x, y) = " + to_string(D.q(w->first, w->second));
      c.witness = {fmt(w->first), fmt(w->second)};
    }
    r.checks[name] = c;
  }
  {
    CheckResult c;
    c.pass = W.dim() == D.base().dim();
    c.detail = "dim W = " + std::to_string(W.dim()) + ", dim g = " + std::to_string(D.base().dim());
    r.checks["w_dimension"] = c;
  }
  {
    CheckResult c;
    c.pass = meet.is_zero_space();
    if (!c.pass) {
      c.detail = "dim W n diag = " + std::to_string(meet.dim());
      c.witness = {fmt(meet.basis().front())};
    }
    r.checks["trivial_intersection"] = c;
  }
  {
    CheckResult c;
    c.pass = join.dim() == D.dim();
    c.detail = "dim (W + diag) = " + std::to_string(join.dim()) + " of " + std::to_string(D.dim());
    r.checks["spans_double"] = c;
  }
  {
    CheckResult c;
    c.pass = D.q_nondegenerate();
    if (!c.pass) c.detail = "Gram matrix of Q is singular";
    r.checks["q_nondegenerate"] = c;
  }
  {
    CheckResult c;
    if (auto f = D.q_invariance_failure()) {
      c.pass = false;
      c.detail = "Q([z, x], y) + Q(x, [z, y]) != 0 for basis indices (z, x, y)";
      c.witness = {{std::to_string((*f)[0]), std::to_string((*f)[1]), std::to_string((*f)[2])}};
    }
    r.checks["q_ad_invariant"] = c;
  }
  r.verdict = true;
  for (const auto& [name, c] : r.checks) r.verdict = r.verdict && c.pass;
  return r;
}

template std::optional<std::pair<Vec<Rational>, Vec<Rational>>> isotropy_witness(const DoubleAlgebra&, const Subspace<Rational>&);
template std::optional<std::pair<Vec<Gaussian>, Vec<Gaussian>>> isotropy_witness(const DoubleAlgebra&, const Subspace<Gaussian>&);
template ManinReport verify_manin_triple(const DoubleAlgebra&, const Subspace<Rational>&);
template ManinReport verify_manin_triple(const DoubleAlgebra&, const Subspace<Gaussian>&);

InvarianceRecord check_invariance_criterion(const DoubleAlgebra& D, const SemilinearInvolution& s, const BDTriple& t,
                                const CartanExtension<Gaussian>& ext) {
  if (D.base().id() != s.algebra().id()) throw Error(ErrorCode::ParentMismatch, "double and involution disagree on g");
  InvarianceRecord r;
  r.sigma_invariant = s.is_invariant(build_W_phi(D, t, ext));
  r.v_star = check_v_star(s, t, ext);
  r.equivalent = r.sigma_invariant == r.v_star;
  return r;
}

}  // namespace manin
