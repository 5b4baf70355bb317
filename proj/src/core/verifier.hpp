#ifndef MANIN_VERIFIER_HPP
#define MANIN_VERIFIER_HPP

// Manin-triple axioms checked directly on a subspace W of the double, plus
// the sigma-invariance / v*) comparison.

#include "double.hpp"
#include "realform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace manin {

struct CheckResult {
  bool pass = true;
  std::string detail;
  // Offending vectors (coordinates as canonical scalar strings) or indices.
  std::vector<std::vector<std::string>> witness;
};

struct ManinDims {
  std::size_t dim_g = 0, dim_w = 0, dim_w_cap_diag = 0, dim_w_plus_diag = 0;
};

struct ManinReport {
  std::map<std::string, CheckResult> checks;
  ManinDims dims;
  bool verdict = false;
};

// Names of the checks, in report order.
const std::vector<std::string>& manin_check_names();

// nullopt when Q vanishes on V, otherwise an offending pair of basis vectors.
template <class F>
std::optional<std::pair<Vec<F>, Vec<F>>> isotropy_witness(const DoubleAlgebra& D, const Subspace<F>& V);
template <class F> bool is_isotropic(const DoubleAlgebra& D, const Subspace<F>& V) { return !isotropy_witness(D, V); }

bool is_ad_invariant_form(const DoubleAlgebra& D);

template <class F> ManinReport verify_manin_triple(const DoubleAlgebra& D, const Subspace<F>& W);

struct InvarianceRecord {
  bool sigma_invariant = false;
  bool v_star = false;
  bool equivalent = false;
};

// Both sides computed independently: sigma-invariance of W(phi) in the
// complex double, and v*) on the data.
InvarianceRecord check_invariance_criterion(const DoubleAlgebra& D, const SemilinearInvolution& s, const BDTriple& t,
                                const CartanExtension<Gaussian>& ext);

}  // namespace manin

#endif
