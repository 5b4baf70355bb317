#ifndef MANIN_REALFORM_HPP
#define MANIN_REALFORM_HPP

// Quasi-split real forms g(R) = g(C)^sigma with sigma = theta o conj, theta
// the lift of a diagram involution fixing the pinning E_{+-a_i}.
//   split:X          identity                    (L1)
//   realification:X  swap of Pi and Pi' on g+g    (L2)
//   su(p,p), su(p,p+1)  A_{2p-1}, A_{2p} reversal (L3)
//   so(p,p+2)        D_{p+1} fork swap, p >= 2    (L4)
//   EII              E6, 1<->6, 3<->5             (L5)

#include "bdtriple.hpp"
#include "cartan.hpp"
#include "chevalley.hpp"
#include "double.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace manin {

enum class RealFormKind { Split, Realification, SU, SO, EII };

struct RealFormSpec {
  RealFormKind kind = RealFormKind::Split;
  RootSystemType base_type;
  Permutation sigma_pi;  // on the simple roots of the complexified system
  std::string name;      // canonical textual form

  // Root system of g(C): the base type, or its doubled system for L2.
  RootSystem complex_root_system() const;
};

// Throws Parse for bad syntax, InconsistentSpec for unsupported parameters.
RealFormSpec parse_real_form(std::string_view text);
// Validates sigma_pi against the kind and the root system; throws InconsistentSpec.
void validate_spec(const RealFormSpec& spec, const RootSystem& rs);

// sigma(x) = theta(conj x), cached as a signed permutation of the basis.
class SemilinearInvolution {
public:
  // Builds theta by extending the diagram map along root strings and checks
  // sigma^2 = id and sigma[x, y] = [sigma x, sigma y] on all basis pairs.
  SemilinearInvolution(AlgebraPtr L, const RealFormSpec& spec);

  const LieAlgebra& algebra() const { return *L_; }
  const AlgebraPtr& algebra_ptr() const { return L_; }
  const Permutation& sigma_pi() const { return sigma_pi_; }
  std::size_t target(std::size_t k) const { return target_[k]; }
  int sign(std::size_t k) const { return sign_[k]; }

  // Acts blockwise on vectors of length m * dim g (so it also acts on the double).
  Vec<Gaussian> apply(const Vec<Gaussian>& x) const;
  // Rational vectors only have their basis permuted (conjugation is trivial).
  Vec<Rational> apply_rational(const Vec<Rational>& x) const;

  bool is_invariant(const Subspace<Gaussian>& V) const;

  // Real basis of g(R): for sigma b_k = c b_k the vector b_k (c = 1) or i b_k
  // (c = -1); for a pair sigma b_k = c b_j (k < j) the vectors b_k + c b_j and
  // i (b_k - c b_j).  real_basis()[r] is a vector of g(C).
  const std::vector<Vec<Gaussian>>& real_basis() const { return real_basis_; }
  // Coordinates of a sigma-fixed vector in the real basis, blockwise; throws
  // NotInvariant when x is not fixed.
  Vec<Rational> to_real(const Vec<Gaussian>& x) const;
  Vec<Gaussian> from_real(const Vec<Rational>& r) const;

  // g(R) as a Lie algebra over Q in the real basis.
  const AlgebraPtr& real_model() const { return real_model_; }

private:
  AlgebraPtr L_;
  Permutation sigma_pi_;
  std::vector<std::size_t> target_;
  std::vector<int> sign_;
  std::vector<Vec<Gaussian>> real_basis_;
  // per real basis vector: (k, j, c, imaginary) with j == k for singletons
  struct RealSlot {
    std::size_t k, j;
    int c;
    bool imaginary;
  };
  std::vector<RealSlot> slots_;
  AlgebraPtr real_model_;
};

// Fixed points {v in V : sigma v = v} by averaging b + sigma b, i (b - sigma b),
// in real coordinates; parent is `parent`.  Throws NotInvariant.
Subspace<Rational> real_points(const SemilinearInvolution& s, const Subspace<Gaussian>& V, SpaceId parent);

// X n g(R) in real coordinates by solving Re / Im of the defining equations of X.
Subspace<Rational> real_intersection(const SemilinearInvolution& s, const Subspace<Gaussian>& X, SpaceId parent);

// Condition v*): sigma preserves rbar_i and l_i, and sigma phi = phi sigma on rbar_1 mod l_2.
bool check_v_star(const SemilinearInvolution& s, const BDTriple& t, const CartanExtension<Gaussian>& ext);

// W(phi)_R in the real double over s.real_model(), summand by summand:
// l_1(R) e + n_1^+(R) e + {x e + phi(x) f : x in rbar_1(R)} + n_2^-(R) f + l_2(R) f.
// Throws NotSigmaEquivariant when t is not sigma-equivariant, InvalidExtension
// when phi does not commute with sigma.
Subspace<Rational> build_W_phi_real(const DoubleAlgebra& real_double, const SemilinearInvolution& s, const BDTriple& t,
                                    const CartanExtension<Gaussian>& ext);

// Extension of t on Pi to Pi u Pi' for a realification: component s of Pi_1
// maps into the unprimed copy when linear_flags[s], else into the primed copy;
// the primed copy is mapped the other way.  Throws InvalidFlags.
BDTriple realification_phi(const RootSystem& pair, const BDTriple& t, const std::vector<bool>& linear_flags);

}  // namespace manin

#endif
