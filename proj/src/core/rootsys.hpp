#ifndef MANIN_ROOTSYS_HPP
#define MANIN_ROOTSYS_HPP

// Root systems of the simple types A-G (and the doubled system of a
// realification), with roots stored as coordinate vectors over the simple
// roots.
//
// Normalization: short roots have squared length 2; long roots have 4
// (B, C, F) or 6 (G).  Labels follow Bourbaki: B_n has alpha_n short, C_n has
// alpha_n long, F_4 has alpha_1, alpha_2 long, G_2 has alpha_1 short.

#include "scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace manin {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

bool is_admissible(RootSystemType t);
std::string to_string(RootSystemType t);
// "A3", "G2", ...; throws InadmissibleType / Parse.
RootSystemType parse_type(std::string_view text);

using Root = std::vector<int>;       // coordinates over the simple roots
using Permutation = std::vector<int>;  // image of each simple-root index (0-based)

class RootSystem {
public:
  // Simple root system of type t.
  static RootSystem build(RootSystemType t);
  // Two orthogonal copies Pi and Pi' of type t; Pi' occupies indices rank..2*rank-1.
  static RootSystem build_doubled(RootSystemType t);

  RootSystemType type() const { return type_; }
  int copies() const { return copies_; }
  // Number of simple roots (rank of the whole, possibly doubled, system).
  int rank() const { return static_cast<int>(cartan_.size()); }
  std::size_t num_positive() const { return positive_.size(); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& inner() const { return inner_; }
  // Positive roots ordered by height, then lexicographically by coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }

  // Index of a positive root in positive_roots(), or -1.
  int index_of(const Root& r) const;
  bool is_root(const Root& r) const;  // accepts negative roots too
  Root simple_root(int i) const;
  static int height(const Root& r);

  // Symmetric bilinear extension of inner(); throws DimensionMismatch.
  Rational inner_product(const Root& a, const Root& b) const;
  int inner_product_int(const Root& a, const Root& b) const;

  // Indices of positive roots whose support lies in the given simple subset.
  std::vector<int> positive_roots_supported_on(const std::vector<int>& simple_subset) const;

  // Simple roots adjacent in the Dynkin diagram.
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

private:
  void generate_roots();

  RootSystemType type_;
  int copies_ = 1;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> inner_;
  std::vector<Root> positive_;
};

// All permutations p of the simple-root indices with cartan[p(i)][p(j)] = cartan[i][j].
std::vector<Permutation> diagram_automorphisms(const RootSystem& rs);
bool is_diagram_automorphism(const RootSystem& rs, const Permutation& p);

// Connected components of the Dynkin subdiagram on a subset, each sorted and
// ordered by smallest element.
std::vector<std::vector<int>> connected_components(const RootSystem& rs, const std::vector<int>& subset);

}  // namespace manin

#endif
