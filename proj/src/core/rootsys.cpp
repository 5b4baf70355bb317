#include "rootsys.hpp"

#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace manin {

bool is_admissible(RootSystemType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

std::string to_string(RootSystemType t) {
  static const char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

RootSystemType parse_type(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorCode::Parse, "type must look like 'A3', got '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw Error(ErrorCode::Parse, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorCode::Parse, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (text[k] - '0');
    if (rank > 1000) throw Error(ErrorCode::InadmissibleType, "rank too large in '" + std::string(text) + "'");
  }
  RootSystemType t{static_cast<Family>(letter - 'A'), rank};
  if (!is_admissible(t)) throw Error(ErrorCode::InadmissibleType, "no simple root system " + std::string(text));
  return t;
}

namespace {

// Symmetrized Gram matrix of the simple roots.
std::vector<std::vector<int>> simple_inner(RootSystemType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };  // 1-based
  auto set_len = [&](int i, int v) { g[i][i] = v; };
  auto L = [&](int i, int j, int v) { link(i - 1, j - 1, v); };
  auto S = [&](int i, int v) { set_len(i - 1, v); };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) S(i, 2);
      for (int i = 1; i < n; ++i) L(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) S(i, 4);
      S(n, 2);
      for (int i = 1; i < n; ++i) L(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) S(i, 2);
      S(n, 4);
      for (int i = 1; i < n - 1; ++i) L(i, i + 1, -1);
      L(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) S(i, 2);
      for (int i = 1; i < n - 1; ++i) L(i, i + 1, -1);
      L(n - 2, n, -1);
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) S(i, 2);
      L(1, 3, -1);
      L(2, 4, -1);
      for (int i = 3; i < n; ++i) L(i, i + 1, -1);
      break;
    case Family::F:
      S(1, 4), S(2, 4), S(3, 2), S(4, 2);
      L(1, 2, -2), L(2, 3, -2), L(3, 4, -1);
      break;
    case Family::G:
      S(1, 2), S(2, 6);
      L(1, 2, -3);
      break;
  }
  return g;
}

std::vector<std::vector<int>> cartan_from_inner(const std::vector<std::vector<int>>& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = 2 * g[i][j] / g[j][j];
  return a;
}

std::size_t expected_positive(RootSystemType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

RootSystem RootSystem::build(RootSystemType t) {
  if (!is_admissible(t)) throw Error(ErrorCode::InadmissibleType, "no simple root system " + to_string(t));
  RootSystem rs;
  rs.type_ = t;
  rs.copies_ = 1;
  rs.inner_ = simple_inner(t);
  rs.cartan_ = cartan_from_inner(rs.inner_);
  rs.generate_roots();
  if (rs.positive_.size() != expected_positive(t))
    throw Error(ErrorCode::Internal, "root count mismatch for " + to_string(t));
  return rs;
}

RootSystem RootSystem::build_doubled(RootSystemType t) {
  if (!is_admissible(t)) throw Error(ErrorCode::InadmissibleType, "no simple root system " + to_string(t));
  RootSystem rs;
  rs.type_ = t;
  rs.copies_ = 2;
  auto g = simple_inner(t);
  const int n = t.rank;
  rs.inner_.assign(2 * n, std::vector<int>(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.inner_[i][j] = rs.inner_[n + i][n + j] = g[i][j];
  rs.cartan_ = cartan_from_inner(rs.inner_);
  rs.generate_roots();
  if (rs.positive_.size() != 2 * expected_positive(t))
    throw Error(ErrorCode::Internal, "root count mismatch for doubled " + to_string(t));
  return rs;
}

// Height-by-height closure using root strings: for a root b and simple a_i
// with b - p a_i the bottom of the string, b + a_i is a root iff
// p - <b, a_i^vee> > 0.
void RootSystem::generate_roots() {
  const int n = rank();
  std::set<Root> known;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    layer.push_back(simple_root(i));
    known.insert(layer.back());
  }
  positive_ = layer;
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& b : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Root down = b;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;  // <b, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += b[j] * cartan_[j][i];
        if (p - pairing > 0) {
          Root up = b;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    positive_.insert(positive_.end(), layer.begin(), layer.end());
  }
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 first among simple roots
  });
}

int RootSystem::height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root RootSystem::simple_root(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
  Root r(rank(), 0);
  r[i] = 1;
  return r;
}

int RootSystem::index_of(const Root& r) const {
  if (static_cast<int>(r.size()) != rank()) return -1;
  auto it = std::find(positive_.begin(), positive_.end(), r);
  return it == positive_.end() ? -1 : static_cast<int>(it - positive_.begin());
}

bool RootSystem::is_root(const Root& r) const {
  if (index_of(r) >= 0) return true;
  Root neg = r;
  for (auto& c : neg) c = -c;
  return index_of(neg) >= 0;
}

int RootSystem::inner_product_int(const Root& a, const Root& b) const {
  const int n = rank();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "root vectors must have length " + std::to_string(n));
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += a[i] * inner_[i][j] * b[j];
  }
  return s;
}

Rational RootSystem::inner_product(const Root& a, const Root& b) const { return Rational(inner_product_int(a, b)); }

std::vector<int> RootSystem::positive_roots_supported_on(const std::vector<int>& simple_subset) const {
  std::vector<bool> allowed(rank(), false);
  for (int i : simple_subset) {
    if (i < 0 || i >= rank()) throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i));
    allowed[i] = true;
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    bool ok = true;
    for (int i = 0; i < rank(); ++i)
      if (positive_[k][i] != 0 && !allowed[i]) ok = false;
    if (ok) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool is_diagram_automorphism(const RootSystem& rs, const Permutation& p) {
  const int n = rs.rank();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan()[p[i]][p[j]] != rs.cartan()[i][j]) return false;
  return true;
}

// Backtracking over partial permutations; prunes as soon as an assigned pair
// disagrees with the Cartan matrix.
std::vector<Permutation> diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  const auto& a = rs.cartan();
  std::vector<Permutation> out;
  Permutation p(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || a[v][v] != a[i][i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a[v][p[j]] == a[i][j] && a[p[j]][v] == a[j][i];
      if (!ok) continue;
      p[i] = v;
      used[v] = true;
      self(self, i + 1);
      used[v] = false;
    }
    p[i] = -1;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_components(const RootSystem& rs, const std::vector<int>& subset) {
  std::vector<int> items = subset;
  std::sort(items.begin(), items.end());
  std::vector<bool> done(items.size(), false);
  std::vector<std::vector<int>> comps;
  for (std::size_t s = 0; s < items.size(); ++s) {
    if (done[s]) continue;
    std::vector<int> comp{items[s]};
    done[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t k = 0; k < items.size(); ++k)
        if (!done[k] && rs.adjacent(comp[head], items[k])) {
          done[k] = true;
          comp.push_back(items[k]);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace manin
