#include "realform.hpp"

#include <regex>

namespace manin {

RootSystem RealFormSpec::complex_root_system() const {
  return kind == RealFormKind::Realification ? RootSystem::build_doubled(base_type) : RootSystem::build(base_type);
}

namespace {

[[noreturn]] void inconsistent_spec(const std::string& msg) { throw Error(ErrorCode::InconsistentSpec, msg); }

Permutation identity_perm(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

RealFormSpec parse_real_form(std::string_view text) {
  const std::string s(text);
  RealFormSpec spec;
  std::smatch m;
  static const std::regex split_re(R"(split:([A-Ga-g][0-9]+))");
  static const std::regex real_re(R"(realification:([A-Ga-g][0-9]+))");
  static const std::regex su_re(R"(su\((\d+),(\d+)\))");
  static const std::regex so_re(R"(so\((\d+),(\d+)\))");
  if (std::regex_match(s, m, split_re)) {
    spec.kind = RealFormKind::Split;
    spec.base_type = parse_type(m[1].str());
    spec.sigma_pi = identity_perm(spec.base_type.rank);
    spec.name = "split:" + to_string(spec.base_type);
  } else if (std::regex_match(s, m, real_re)) {
    spec.kind = RealFormKind::Realification;
    spec.base_type = parse_type(m[1].str());
    const int n = spec.base_type.rank;
    spec.sigma_pi.resize(2 * n);
    for (int i = 0; i < n; ++i) {
      spec.sigma_pi[i] = i + n;
      spec.sigma_pi[i + n] = i;
    }
    spec.name = "realification:" + to_string(spec.base_type);
  } else if (std::regex_match(s, m, su_re)) {
    int p = std::stoi(m[1].str()), q = std::stoi(m[2].str());
    if (p > q) std::swap(p, q);
    if (p < 1 || (q != p && q != p + 1)) inconsistent_spec("only the quasi-split su(p,p) and su(p,p+1) are supported");
    spec.kind = RealFormKind::SU;
    spec.base_type = {Family::A, p + q - 1};
    const int n = p + q - 1;
    spec.sigma_pi.resize(n);
    for (int i = 0; i < n; ++i) spec.sigma_pi[i] = n - 1 - i;
    spec.name = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  } else if (std::regex_match(s, m, so_re)) {
    int p = std::stoi(m[1].str()), q = std::stoi(m[2].str());
    if (p > q) std::swap(p, q);
    if (p < 2 || q != p + 2) inconsistent_spec("only so(p,p+2) with p >= 2 is supported");
    spec.kind = RealFormKind::SO;
    spec.base_type = {Family::D, p + 1};
    const int n = p + 1;
    spec.sigma_pi = identity_perm(n);
    std::swap(spec.sigma_pi[n - 2], spec.sigma_pi[n - 1]);
    spec.name = "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  } else if (s == "EII") {
    spec.kind = RealFormKind::EII;
    spec.base_type = {Family::E, 6};
    spec.sigma_pi = {5, 1, 4, 3, 2, 0};
    spec.name = "EII";
  } else {
    throw Error(ErrorCode::Parse, "unknown real form '" + s + "'");
  }
  validate_spec(spec, spec.complex_root_system());
  return spec;
}

void validate_spec(const RealFormSpec& spec, const RootSystem& rs) {
  const int n = rs.rank();
  if (static_cast<int>(spec.sigma_pi.size()) != n) inconsistent_spec("sigma has the wrong number of simple roots");
  if (!is_diagram_automorphism(rs, spec.sigma_pi)) inconsistent_spec("sigma is not a diagram automorphism");
  for (int i = 0; i < n; ++i)
    if (spec.sigma_pi[spec.sigma_pi[i]] != i) inconsistent_spec("sigma is not an involution");
  const bool realified = rs.copies() == 2;
  if (realified != (spec.kind == RealFormKind::Realification)) inconsistent_spec("root system does not match the real form kind");
  const bool trivial = spec.sigma_pi == identity_perm(n);
  if (spec.kind == RealFormKind::Split && !trivial) inconsistent_spec("split form needs the identity");
  if (spec.kind == RealFormKind::Realification)
    for (int i = 0; i < n / 2; ++i)
      if (spec.sigma_pi[i] != i + n / 2) inconsistent_spec("realification needs the swap of the two copies");
  if ((spec.kind == RealFormKind::SO || spec.kind == RealFormKind::EII) && trivial)
    inconsistent_spec("outer form needs a nontrivial involution");
}

SemilinearInvolution::SemilinearInvolution(AlgebraPtr L, const RealFormSpec& spec)
    : L_(std::move(L)), sigma_pi_(spec.sigma_pi) {
  const LieAlgebra& A = *L_;
  validate_spec(spec, A.root_system());
  std::map<int, int> f;
  for (int i = 0; i < A.rank(); ++i) f[i] = sigma_pi_[i];
  SimpleRootMap theta(A, f);
  const std::size_t N = A.dim();
  target_.resize(N);
  sign_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    const auto& img = theta.image(k);
    int hits = 0;
    for (std::size_t j = 0; j < N; ++j) {
      if (is_zero(img[j])) continue;
      ++hits;
      target_[k] = j;
      if (img[j] == 1) sign_[k] = 1;
      else if (img[j] == -1) sign_[k] = -1;
      else throw Error(ErrorCode::ExtensionSignConflict, "lift of sigma is not a signed permutation at " + A.label(k));
    }
    if (hits != 1) throw Error(ErrorCode::ExtensionSignConflict, "lift of sigma is not a signed permutation at " + A.label(k));
  }
  for (std::size_t k = 0; k < N; ++k)
    if (target_[target_[k]] != k || sign_[k] * sign_[target_[k]] != 1)
      throw Error(ErrorCode::ExtensionSignConflict, "sigma^2 != id at " + A.label(k));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Vec<Rational> lhs = zero_vec<Rational>(N), rhs = zero_vec<Rational>(N);
      for (const auto& t : A.bracket_terms(i, j)) lhs[target_[t.index]] += t.coeff * sign_[t.index];
      for (const auto& t : A.bracket_terms(target_[i], target_[j])) rhs[t.index] += t.coeff * (sign_[i] * sign_[j]);
      if (lhs != rhs)
        throw Error(ErrorCode::ExtensionSignConflict, "sigma is not an automorphism on [" + A.label(i) + ", " + A.label(j) + "]");
    }

  std::vector<std::string> labels;
  const Gaussian I = Gaussian::i();
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t j = target_[k];
    const int c = sign_[k];
    if (j == k) {
      slots_.push_back({k, k, c, c < 0});
      Vec<Gaussian> v = zero_vec<Gaussian>(N);
      v[k] = c > 0 ? Gaussian(1) : I;
      real_basis_.push_back(std::move(v));
      labels.push_back(c > 0 ? A.label(k) : "i " + A.label(k));
    } else if (j > k) {
      slots_.push_back({k, j, c, false});
      slots_.push_back({k, j, c, true});
      Vec<Gaussian> u = zero_vec<Gaussian>(N), w = zero_vec<Gaussian>(N);
      u[k] = Gaussian(1);
      u[j] = Gaussian(c);
      w[k] = I;
      w[j] = I * Gaussian(-c);
      real_basis_.push_back(std::move(u));
      real_basis_.push_back(std::move(w));
      labels.push_back(A.label(k) + (c > 0 ? " + " : " - ") + A.label(j));
      labels.push_back("i (" + A.label(k) + (c > 0 ? " - " : " + ") + A.label(j) + ")");
    }
  }

  std::vector<std::vector<Term>> table(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      Vec<Rational> r = to_real(A.bracket(real_basis_[a], real_basis_[b]));
      for (std::size_t k = 0; k < N; ++k)
        if (!is_zero(r[k])) table[a * N + b].push_back({static_cast<int>(k), r[k]});
    }
  real_model_ = LieAlgebra::from_table(N, std::move(table), std::move(labels));
}

Vec<Gaussian> SemilinearInvolution::apply(const Vec<Gaussian>& x) const {
  const std::size_t N = L_->dim();
  if (N == 0 || x.size() % N != 0) throw Error(ErrorCode::DimensionMismatch, "sigma operand length");
  Vec<Gaussian> out = zero_vec<Gaussian>(x.size());
  for (std::size_t off = 0; off < x.size(); off += N)
    for (std::size_t k = 0; k < N; ++k) {
      const Gaussian& v = x[off + k];
      if (is_zero(v)) continue;
      out[off + target_[k]] = sign_[k] > 0 ? conj(v) : -conj(v);
    }
  return out;
}

Vec<Rational> SemilinearInvolution::apply_rational(const Vec<Rational>& x) const {
  const std::size_t N = L_->dim();
  if (N == 0 || x.size() % N != 0) throw Error(ErrorCode::DimensionMismatch, "sigma operand length");
  Vec<Rational> out = zero_vec<Rational>(x.size());
  for (std::size_t off = 0; off < x.size(); off += N)
    for (std::size_t k = 0; k < N; ++k)
      if (!is_zero(x[off + k])) out[off + target_[k]] = sign_[k] > 0 ? x[off + k] : Rational(-x[off + k]);
  return out;
}

bool SemilinearInvolution::is_invariant(const Subspace<Gaussian>& V) const {
  for (const auto& b : V.basis())
    if (!V.contains(apply(b))) return false;
  return true;
}

Vec<Rational> SemilinearInvolution::to_real(const Vec<Gaussian>& x) const {
  const std::size_t N = L_->dim();
  if (N == 0 || x.size() % N != 0) throw Error(ErrorCode::DimensionMismatch, "real coordinates operand length");
  Vec<Rational> r(x.size());
  for (std::size_t off = 0; off < x.size(); off += N)
    for (std::size_t s = 0; s < N; ++s) {
      const auto& slot = slots_[s];
      const Gaussian& v = x[off + slot.k];
      r[off + s] = slot.imaginary ? v.im() : v.re();
    }
  if (from_real(r) != x) throw Error(ErrorCode::NotInvariant, "vector is not fixed by sigma");
  return r;
}

Vec<Gaussian> SemilinearInvolution::from_real(const Vec<Rational>& r) const {
  const std::size_t N = L_->dim();
  if (N == 0 || r.size() % N != 0) throw Error(ErrorCode::DimensionMismatch, "real coordinates operand length");
  Vec<Gaussian> x = zero_vec<Gaussian>(r.size());
  for (std::size_t off = 0; off < r.size(); off += N)
    for (std::size_t s = 0; s < N; ++s) {
      if (is_zero(r[off + s])) continue;
      const auto& b = real_basis_[s];
      for (std::size_t k : {slots_[s].k, slots_[s].j}) {
        x[off + k] += Gaussian(r[off + s]) * b[k];
        if (slots_[s].j == slots_[s].k) break;
      }
    }
  return x;
}

Subspace<Rational> real_points(const SemilinearInvolution& s, const Subspace<Gaussian>& V, SpaceId parent) {
  if (!s.is_invariant(V)) throw Error(ErrorCode::NotInvariant, "subspace is not sigma-invariant");
  const Gaussian I = Gaussian::i();
  std::vector<Vec<Rational>> rows;
  for (const auto& b : V.basis()) {
    Vec<Gaussian> sb = s.apply(b);
    rows.push_back(s.to_real(b + sb));
    rows.push_back(s.to_real(scaled(b - sb, I)));
  }
  return Subspace<Rational>::span(V.ambient(), parent, std::move(rows));
}

Subspace<Rational> real_intersection(const SemilinearInvolution& s, const Subspace<Gaussian>& X, SpaceId parent) {
  const std::size_t M = X.ambient();
  const std::size_t N = s.algebra().dim();
  // Annihilator of X: rows c with c . x = 0 on X.
  const auto cons = kernel(Matrix<Gaussian>::from_rows(X.basis(), M));
  Matrix<Rational> A(2 * cons.size(), M);
  for (std::size_t r = 0; r < cons.size(); ++r)
    for (std::size_t off = 0; off < M; off += N)
      for (std::size_t col = 0; col < N; ++col) {
        const auto& b = s.real_basis()[col];
        Gaussian v(0);
        for (std::size_t k = 0; k < N; ++k)
          if (!is_zero(b[k]) && !is_zero(cons[r][off + k])) v += cons[r][off + k] * b[k];
        A(2 * r, off + col) = v.re();
        A(2 * r + 1, off + col) = v.im();
      }
  return Subspace<Rational>::span(M, parent, kernel(A));
}

bool check_v_star(const SemilinearInvolution& s, const BDTriple& t, const CartanExtension<Gaussian>& ext) {
  const LieAlgebra& L = s.algebra();
  const auto r1 = rbar(L, t.pi1, ext.hbar1);
  const auto r2 = rbar(L, t.pi2, ext.hbar2);
  for (const auto* V : {&r1, &r2, &ext.l1, &ext.l2})
    if (!s.is_invariant(*V)) return false;
  PhiMap<Gaussian> phi(L, t, ext);
  for (const auto& x : r1.basis())
    if (!ext.l2.contains(s.apply(phi.apply(x)) - phi.apply(s.apply(x)))) return false;
  return true;
}

Subspace<Rational> build_W_phi_real(const DoubleAlgebra& RD, const SemilinearInvolution& s, const BDTriple& t,
                                    const CartanExtension<Gaussian>& ext) {
  const LieAlgebra& L = s.algebra();
  if (RD.base().id() != s.real_model()->id()) throw Error(ErrorCode::ParentMismatch, "double is not built on this real model");
  if (!(apply_permutation(t, s.sigma_pi()) == t)) throw Error(ErrorCode::NotSigmaEquivariant, "triple is not sigma-equivariant");
  BDVerdict bv = check_bd_conditions(L.root_system(), t);
  if (!bv.ok) throw Error(ErrorCode::InvalidTriple, bv.message);
  try {
    check_extension_consistency(L, t, ext);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentExtension) throw;
    throw Error(ErrorCode::InvalidExtension, e.what());
  }
  const std::size_t N = L.dim();
  const SpaceId g = s.real_model()->id();
  auto coord = [&](const std::vector<std::size_t>& idx) { return Subspace<Gaussian>::coordinate(N, L.id(), idx); };
  auto real = [&](const Subspace<Gaussian>& X) { return real_intersection(s, X, g).basis(); };
  const Vec<Rational> zero = zero_vec<Rational>(N);
  std::vector<Vec<Rational>> rows;
  for (const auto& v : real(ext.l1)) rows.push_back(concat(v, zero));
  for (const auto& v : real(coord(complement_root_indices(L, t.pi1, +1)))) rows.push_back(concat(v, zero));
  PhiMap<Gaussian> phi(L, t, ext);
  const Gaussian half(ratio(1, 2));
  for (const auto& xr : real(rbar(L, t.pi1, ext.hbar1))) {
    Vec<Gaussian> y = phi.apply(s.from_real(xr));
    Vec<Gaussian> fixed = scaled(y + s.apply(y), half);  // sigma-fixed lift of y mod l_2
    if (!ext.l2.contains(fixed - y)) throw Error(ErrorCode::InvalidExtension, "phi does not commute with sigma");
    rows.push_back(concat(xr, s.to_real(fixed)));
  }
  for (const auto& v : real(coord(complement_root_indices(L, t.pi2, -1)))) rows.push_back(concat(zero, v));
  for (const auto& v : real(ext.l2)) rows.push_back(concat(zero, v));
  return Subspace<Rational>::span(RD.dim(), RD.id(), std::move(rows));
}

BDTriple realification_phi(const RootSystem& pair, const BDTriple& t, const std::vector<bool>& linear_flags) {
  if (pair.copies() != 2) throw Error(ErrorCode::InvalidFlags, "realification needs the doubled root system");
  const int n = pair.rank() / 2;
  for (int a : t.pi0())
    if (a < 0 || a >= n) throw Error(ErrorCode::InvalidFlags, "triple must live on the first copy");
  const auto comps = connected_components(pair, t.pi1);
  if (comps.size() != linear_flags.size())
    throw Error(ErrorCode::InvalidFlags, "expected " + std::to_string(comps.size()) + " component flags, got " +
                                             std::to_string(linear_flags.size()));
  BDTriple out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int a : comps[c]) {
      const int fa = t.phi.at(a);
      out.phi[a] = linear_flags[c] ? fa : fa + n;
      out.phi[a + n] = linear_flags[c] ? fa + n : fa;
    }
  for (const auto& [a, b] : out.phi) {
    out.pi1.push_back(a);
    out.pi2.push_back(b);
  }
  std::sort(out.pi1.begin(), out.pi1.end());
  std::sort(out.pi2.begin(), out.pi2.end());
  return out;
}

}  // namespace manin
