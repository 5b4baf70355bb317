#include "bdtriple.hpp"

#include "error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace manin {

std::vector<int> BDTriple::images() const {
  std::vector<int> out;
  for (int a : pi1) {
    auto it = phi.find(a);
    out.push_back(it == phi.end() ? -1 : it->second);
  }
  return out;
}

std::vector<int> BDTriple::pi0() const {
  std::set<int> s(pi1.begin(), pi1.end());
  s.insert(pi2.begin(), pi2.end());
  return {s.begin(), s.end()};
}

bool enumeration_less(const BDTriple& a, const BDTriple& b) {
  auto key = [](const BDTriple& t) { return std::make_tuple(t.pi1.size(), t.pi1, t.pi2, t.images()); };
  return key(a) < key(b);
}

namespace {

std::string idx_name(int i) { return "alpha" + std::to_string(i + 1); }

// Condition i) without reference to a root system.
BDVerdict check_bijection(const BDTriple& t, int rank) {
  BDVerdict v;
  auto fail = [&](std::vector<int> w, std::string msg) {
    v.ok = false;
    v.condition = 1;
    v.witness = std::move(w);
    v.message = std::move(msg);
    return v;
  };
  for (const auto* set : {&t.pi1, &t.pi2})
    for (int a : *set)
      if (a < 0 || (rank >= 0 && a >= rank)) return fail({a}, "index out of range");
  if (std::set<int>(t.pi1.begin(), t.pi1.end()).size() != t.pi1.size()) return fail({}, "repeated element in Pi_1");
  if (std::set<int>(t.pi2.begin(), t.pi2.end()).size() != t.pi2.size()) return fail({}, "repeated element in Pi_2");
  if (t.phi.size() != t.pi1.size()) return fail({}, "phi must be defined exactly on Pi_1");
  std::set<int> image;
  for (int a : t.pi1) {
    auto it = t.phi.find(a);
    if (it == t.phi.end()) return fail({a}, "phi undefined at " + idx_name(a));
    if (!std::binary_search(t.pi2.begin(), t.pi2.end(), it->second) &&
        std::find(t.pi2.begin(), t.pi2.end(), it->second) == t.pi2.end())
      return fail({a, it->second}, "phi(" + idx_name(a) + ") not in Pi_2");
    if (!image.insert(it->second).second) return fail({a, it->second}, "phi is not injective");
  }
  if (image.size() != t.pi2.size()) return fail({}, "phi is not onto Pi_2");
  return v;
}

// Condition iii) as cycle-freeness of the partial map Pi_1 -> Pi.
BDVerdict check_exits(const BDTriple& t) {
  BDVerdict v;
  for (int a : t.pi1) {
    std::set<int> seen{a};
    int x = a;
    while (true) {
      auto it = t.phi.find(x);
      if (it == t.phi.end()) break;  // left Pi_1
      x = it->second;
      if (!seen.insert(x).second) {
        v.ok = false;
        v.condition = 3;
        v.witness = {a};
        v.message = "iterates of " + idx_name(a) + " never leave Pi_1";
        return v;
      }
    }
  }
  return v;
}

}  // namespace

BDVerdict check_bd_conditions(const RootSystem& rs, const BDTriple& t) {
  BDVerdict v = check_bijection(t, rs.rank());
  if (!v.ok) return v;
  const auto& g = rs.inner();
  for (int a : t.pi1)
    for (int b : t.pi1) {
      int fa = t.phi.at(a), fb = t.phi.at(b);
      if (g[fa][fb] != g[a][b]) {
        v.ok = false;
        v.condition = 2;
        v.witness = {a, b};
        v.message = "(phi " + idx_name(a) + ", phi " + idx_name(b) + ") = " + std::to_string(g[fa][fb]) +
                    " but (" + idx_name(a) + ", " + idx_name(b) + ") = " + std::to_string(g[a][b]);
        return v;
      }
    }
  return check_exits(t);
}

std::vector<BDTriple> enumerate_bd_triples(const RootSystem& rs, int rank_limit) {
  const int n = rs.rank();
  if (n > rank_limit)
    throw Error(ErrorCode::RankLimitExceeded,
                "rank " + std::to_string(n) + " exceeds limit " + std::to_string(rank_limit));
  const auto& g = rs.inner();
  std::vector<BDTriple> out;
  // Pi_1 = Pi is impossible under iii), so sizes stop at n - 1.
  for (int k = 0; k < std::max(n, 1); ++k) {
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    do {
      std::vector<int> pi1;
      for (int i = 0; i < n; ++i)
        if (mask[i]) pi1.push_back(i);
      std::vector<int> img(pi1.size(), -1);
      std::vector<bool> used(n, false);
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == pi1.size()) {
          BDTriple t;
          t.pi1 = pi1;
          for (std::size_t s = 0; s < pi1.size(); ++s) t.phi[pi1[s]] = img[s];
          t.pi2 = img;
          std::sort(t.pi2.begin(), t.pi2.end());
          if (check_exits(t).ok) out.push_back(std::move(t));
          return;
        }
        const int a = pi1[pos];
        for (int v = 0; v < n; ++v) {
          if (used[v] || v == a || g[v][v] != g[a][a]) continue;
          bool ok = true;
          for (std::size_t s = 0; s < pos && ok; ++s) ok = g[v][img[s]] == g[a][pi1[s]];
          if (!ok) continue;
          used[v] = true;
          img[pos] = v;
          self(self, pos + 1);
          used[v] = false;
        }
      };
      rec(rec, 0);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

std::vector<Chain> maximal_chains(const BDTriple& t) {
  BDVerdict v = check_bijection(t, -1);
  if (v.ok) v = check_exits(t);
  if (!v.ok) throw Error(ErrorCode::InvalidTriple, v.message);
  std::set<int> in_pi2(t.pi2.begin(), t.pi2.end());
  std::vector<Chain> chains;
  for (int head : t.pi0()) {
    if (in_pi2.count(head)) continue;  // has a predecessor
    Chain c{{head}};
    for (auto it = t.phi.find(head); it != t.phi.end(); it = t.phi.find(it->second)) c.elements.push_back(it->second);
    chains.push_back(std::move(c));
  }
  return chains;
}

int chain_position(const BDTriple& t, int alpha) {
  for (const auto& c : maximal_chains(t)) {
    auto it = std::find(c.elements.begin(), c.elements.end(), alpha);
    if (it != c.elements.end()) return static_cast<int>(it - c.elements.begin()) + 1;
  }
  throw Error(ErrorCode::NotInPi0, idx_name(alpha) + " is not in Pi_0");
}

BDTriple apply_permutation(const BDTriple& t, const Permutation& p) {
  BDTriple out;
  for (int a : t.pi1) out.pi1.push_back(p.at(a));
  for (int a : t.pi2) out.pi2.push_back(p.at(a));
  for (const auto& [a, b] : t.phi) out.phi[p.at(a)] = p.at(b);
  std::sort(out.pi1.begin(), out.pi1.end());
  std::sort(out.pi2.begin(), out.pi2.end());
  return out;
}

bool check_sigma_equivariance(const RootSystem& rs, const BDTriple& t, const Permutation& sigma) {
  if (!is_diagram_automorphism(rs, sigma))
    throw Error(ErrorCode::NotDiagramAutomorphism, "permutation does not preserve the Cartan matrix");
  return apply_permutation(t, sigma) == t;
}

}  // namespace manin
