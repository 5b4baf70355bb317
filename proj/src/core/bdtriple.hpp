#ifndef MANIN_BDTRIPLE_HPP
#define MANIN_BDTRIPLE_HPP

// Belavin-Drinfeld data (Pi_1, Pi_2, phi) on the simple roots.
//   i)   phi : Pi_1 -> Pi_2 is a bijection
//   ii)  (phi a, phi b) = (a, b) for a, b in Pi_1 (diagonal included)
//   iii) every a in Pi_1 leaves Pi_1 after finitely many applications of phi
// Indices are 0-based internally; the JSON form is 1-based.

#include "rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace manin {

struct BDTriple {
  std::vector<int> pi1;     // sorted
  std::vector<int> pi2;     // sorted
  std::map<int, int> phi;   // pi1 -> pi2

  // phi images listed in pi1 order
  std::vector<int> images() const;
  bool empty() const { return pi1.empty(); }
  // Pi_0 = Pi_1 u Pi_2, sorted
  std::vector<int> pi0() const;

  friend bool operator==(const BDTriple&, const BDTriple&) = default;
};

// Orders by (|Pi_1|, Pi_1, Pi_2, phi images).
bool enumeration_less(const BDTriple& a, const BDTriple& b);

struct BDVerdict {
  bool ok = true;
  int condition = 0;          // 1, 2 or 3 when violated
  std::vector<int> witness;   // offending simple roots
  std::string message;
};

BDVerdict check_bd_conditions(const RootSystem& rs, const BDTriple& t);

// All triples satisfying i)-iii), duplicate-free, in enumeration order.
// Throws RankLimitExceeded if rs.rank() > rank_limit.
std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs, int rank_limit = 8);

struct Chain {
  std::vector<int> elements;  // a, phi(a), phi^2(a), ...
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain& a, const Chain& b) { return a.elements <=> b.elements; }
};

// Maximal chains of Pi_0, ordered by head.  Throws InvalidTriple when phi is
// not a cycle-free bijection.
std::vector<Chain> maximal_chains(const BDTriple& t);
// 1-based position of a in its maximal chain; throws NotInPi0.
int chain_position(const BDTriple& t, int alpha);

// sigma(Pi_1) = Pi_1, sigma(Pi_2) = Pi_2, sigma phi = phi sigma on Pi_1.
// Throws NotDiagramAutomorphism when sigma does not preserve the Cartan matrix.
bool check_sigma_equivariance(const RootSystem& rs, const BDTriple& t, const Permutation& sigma);

// Image of a triple under a diagram permutation.
BDTriple apply_permutation(const BDTriple& t, const Permutation& p);

}  // namespace manin

#endif
