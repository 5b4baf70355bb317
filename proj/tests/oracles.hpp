#ifndef MANIN_TEST_ORACLES_HPP
#define MANIN_TEST_ORACLES_HPP

// Independent reference computations for the tests.  Nothing here calls the
// library except to read brackets out of a built algebra.

#include "chevalley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<int>>;

// Cartan matrices typed in by hand (a_ij = 2 (a_i, a_j) / (a_j, a_j), Bourbaki labels)
// together with the squared root lengths.
struct Cartan {
  IntMatrix a;
  std::vector<int> len;
};

inline Cartan hand_cartan(const std::string& t) {
  if (t == "A1") return {{{2}}, {2}};
  if (t == "A2") return {{{2, -1}, {-1, 2}}, {2, 2}};
  if (t == "A3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {2, 2, 2}};
  if (t == "A4") return {{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, {2, 2, 2, 2}};
  if (t == "B2") return {{{2, -2}, {-1, 2}}, {4, 2}};
  if (t == "B3") return {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {4, 4, 2}};
  if (t == "C2") return {{{2, -1}, {-2, 2}}, {2, 4}};
  if (t == "C3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, {2, 2, 4}};
  if (t == "D4") return {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, {2, 2, 2, 2}};
  if (t == "F4") return {{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}, {4, 4, 2, 2}};
  if (t == "G2") return {{{2, -1}, {-3, 2}}, {2, 6}};
  return {};
}

// (a_i, a_j) = a_ij (a_j, a_j) / 2
inline IntMatrix gram(const Cartan& c) {
  const std::size_t n = c.a.size();
  IntMatrix g(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = c.a[i][j] * c.len[j] / 2;
  return g;
}

struct Triple {
  std::vector<int> pi1, images;  // images[k] = phi(pi1[k])
};

// All subset pairs x all bijections, conditions checked literally:
// i) bijection, ii) all inner products kept, iii) every root leaves Pi_1
// within |Pi_1| steps.
inline std::vector<Triple> brute_force(const Cartan& c) {
  const int n = static_cast<int>(c.a.size());
  const IntMatrix g = gram(c);
  std::vector<Triple> out;
  for (int m1 = 0; m1 < (1 << n); ++m1)
    for (int m2 = 0; m2 < (1 << n); ++m2) {
      if (__builtin_popcount(m1) != __builtin_popcount(m2)) continue;
      std::vector<int> p1, p2;
      for (int i = 0; i < n; ++i) {
        if (m1 >> i & 1) p1.push_back(i);
        if (m2 >> i & 1) p2.push_back(i);
      }
      std::vector<int> perm = p2;
      do {
        std::map<int, int> phi;
        for (std::size_t k = 0; k < p1.size(); ++k) phi[p1[k]] = perm[k];
        bool ok = true;
        for (int a : p1)
          for (int b : p1)
            if (g[phi[a]][phi[b]] != g[a][b]) ok = false;
        for (int a : p1) {
          int x = a;
          int steps = 0;
          while (phi.count(x) && steps <= n) {
            x = phi[x];
            ++steps;
          }
          if (phi.count(x)) ok = false;
        }
        if (ok) out.push_back({p1, perm});
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return out;
}

// trace(ad x ad y) for basis vectors, computed by applying brackets twice.
inline manin::Matrix<manin::Rational> ad_trace(const manin::LieAlgebra& L) {
  using namespace manin;
  const std::size_t n = L.dim();
  // ad[k] column j = [b_k, b_j]
  std::vector<Matrix<Rational>> ad;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Rational> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = L.bracket(L.basis_vector<Rational>(k), L.basis_vector<Rational>(j));
      for (std::size_t r = 0; r < n; ++r) m(r, j) = v[r];
    }
    ad.push_back(std::move(m));
  }
  Matrix<Rational> K(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Rational tr = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (ad[a](r, s) != 0 && ad[b](s, r) != 0) tr += ad[a](r, s) * ad[b](s, r);
      K(a, b) = K(b, a) = tr;
    }
  return K;
}

// Largest |Jacobi| residual index triple, or empty if the identity holds.
inline std::vector<std::size_t> jacobi_failure(const manin::LieAlgebra& L) {
  using namespace manin;
  const std::size_t n = L.dim();
  std::vector<Vec<Rational>> b;
  for (std::size_t k = 0; k < n; ++k) b.push_back(L.basis_vector<Rational>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto ij = L.bracket(b[i], b[j]);
      for (std::size_t k = j + 1; k < n; ++k) {
        auto s = L.bracket(ij, b[k]) + L.bracket(L.bracket(b[j], b[k]), b[i]) + L.bracket(L.bracket(b[k], b[i]), b[j]);
        if (!is_zero_vec(s)) return {i, j, k};
      }
    }
  return {};
}

}  // namespace oracle

#endif
