#include "chevalley.hpp"

#include <atomic>
#include <map>
#include <sstream>

namespace manin {

SpaceId next_space_id() {
  static std::atomic<SpaceId> counter{1};
  return counter.fetch_add(1);
}

namespace {

Root negate(Root r) {
  for (auto& c : r) c = -c;
  return r;
}

Root add(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

bool is_positive(const Root& r) {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

std::string root_label(const Root& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
  os << ")";
  return os.str();
}

}  // namespace

// Carter's scheme: choose N on extraspecial pairs, derive every other positive
// pair from the four-root relation, and mixed-sign pairs from the three-root
// relation.  Positive pairs are processed by height of their sum.
ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : rs_(&rs), m_(rs.num_positive()) {
  table_.assign(m_ * m_, 0);
  const auto& pos = rs.positive_roots();
  const int n = rs.rank();
  std::map<Root, int> index;
  for (std::size_t k = 0; k < m_; ++k) index[pos[k]] = static_cast<int>(k);
  auto len = [&](const Root& r) { return rs.inner_product_int(r, r); };
  auto idx = [&](const Root& r) {
    auto it = index.find(r);
    return it == index.end() ? -1 : it->second;
  };

  for (std::size_t g = 0; g < m_; ++g) {
    const Root& gamma = pos[g];
    if (RootSystem::height(gamma) < 2) continue;
    // extraspecial pair: smallest simple a with gamma - a a root
    int a_idx = -1, b_idx = -1;
    for (int i = 0; i < n && a_idx < 0; ++i) {
      Root rest = gamma;
      rest[i] -= 1;
      int k = idx(rest);
      if (k >= 0) {
        a_idx = idx(rs.simple_root(i));
        b_idx = k;
      }
    }
    const Root& alpha = pos[a_idx];
    const Root& beta = pos[b_idx];
    int p = 0;
    for (Root down = add(beta, negate(alpha)); rs.is_root(down); down = add(down, negate(alpha))) ++p;
    table_[a_idx * m_ + b_idx] = p + 1;
    table_[b_idx * m_ + a_idx] = -(p + 1);
    const int n_ab = p + 1;
    const Rational gg = len(gamma);

    for (std::size_t xi_i = 0; xi_i < m_; ++xi_i) {
      const Root& xi = pos[xi_i];
      Root zeta = add(gamma, negate(xi));
      int zi = idx(zeta);
      if (zi < 0) continue;
      if ((static_cast<int>(xi_i) == a_idx && zi == b_idx) || (static_cast<int>(xi_i) == b_idx && zi == a_idx)) continue;
      // four-root relation on (xi, zeta, -alpha, -beta)
      Rational acc = 0;
      Root zma = add(zeta, negate(alpha));
      if (rs.is_root(zma)) acc += ratio(N(zeta, negate(alpha)) * N(xi, negate(beta)), len(zma));
      Root xma = add(xi, negate(alpha));
      if (rs.is_root(xma)) acc += ratio(N(negate(alpha), xi) * N(zeta, negate(beta)), len(xma));
      Rational val = gg * acc / n_ab;
      if (val.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral structure constant");
      table_[xi_i * m_ + zi] = static_cast<int>(val.get_num().get_si());
    }
  }
}

int ChevalleyConstants::lookup_positive(int i, int j) const { return table_[i * m_ + j]; }

int ChevalleyConstants::N(const Root& a, const Root& b) const {
  const RootSystem& rs = *rs_;
  Root c = add(a, b);
  if (!rs.is_root(c)) return 0;
  const bool pa = is_positive(a), pb = is_positive(b);
  auto len = [&](const Root& r) { return rs.inner_product_int(r, r); };
  if (pa && pb) return lookup_positive(rs.index_of(a), rs.index_of(b));
  if (!pa && !pb) return -N(negate(a), negate(b));
  if (!pa && pb) return -N(b, a);
  // a > 0 > b
  Rational v;
  if (is_positive(c)) {
    v = -ratio(len(c), len(a)) * N(negate(b), c);
  } else {
    v = ratio(len(c), len(b)) * N(negate(c), a);
  }
  if (v.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral mixed structure constant at " + root_label(a) + ", " + root_label(b));
  return static_cast<int>(v.get_num().get_si());
}

const RootSystem& LieAlgebra::root_system() const {
  if (!rs_) throw Error(ErrorCode::Internal, "algebra has no root data");
  return *rs_;
}
int LieAlgebra::rank() const { return rs_ ? rs_->rank() : 0; }
std::size_t LieAlgebra::num_positive() const { return rs_ ? rs_->num_positive() : 0; }

std::size_t LieAlgebra::cartan_index(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorCode::IndexOutOfRange, "Cartan index " + std::to_string(i));
  return static_cast<std::size_t>(i);
}
std::size_t LieAlgebra::positive_index(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= num_positive()) throw Error(ErrorCode::IndexOutOfRange, "root index");
  return static_cast<std::size_t>(rank() + k);
}
std::size_t LieAlgebra::negative_index(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= num_positive()) throw Error(ErrorCode::IndexOutOfRange, "root index");
  return static_cast<std::size_t>(rank()) + num_positive() + static_cast<std::size_t>(k);
}
std::size_t LieAlgebra::root_vector_index(const Root& r) const {
  const RootSystem& rs = root_system();
  int k = rs.index_of(r);
  if (k >= 0) return positive_index(k);
  k = rs.index_of(negate(r));
  if (k >= 0) return negative_index(k);
  throw Error(ErrorCode::IndexOutOfRange, "not a root: " + root_label(r));
}

Matrix<Rational> LieAlgebra::ad_matrix(std::size_t k) const {
  Matrix<Rational> a(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (const auto& t : table_[k * dim_ + j]) a(t.index, j) += t.coeff;
  return a;
}

// K(b_x, b_y) = sum_{j} (ad b_x ad b_y)_{jj} = sum_j sum_{[b_y,b_j]=c b_w} c * coeff of b_j in [b_x, b_w].
Matrix<Rational> LieAlgebra::ad_trace_form() const {
  Matrix<Rational> k(dim_, dim_);
  for (std::size_t x = 0; x < dim_; ++x)
    for (std::size_t y = x; y < dim_; ++y) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& t : table_[y * dim_ + j])
          for (const auto& u : table_[x * dim_ + t.index])
            if (u.index == static_cast<int>(j)) s += t.coeff * u.coeff;
      k(x, y) = s;
      k(y, x) = s;
    }
  return k;
}

void LieAlgebra::finish_killing_from_table() { killing_ = ad_trace_form(); }

std::shared_ptr<const LieAlgebra> LieAlgebra::from_table(std::size_t dim, std::vector<std::vector<Term>> table,
                                                        std::vector<std::string> labels) {
  if (table.size() != dim * dim) throw Error(ErrorCode::DimensionMismatch, "structure table must be dim*dim");
  if (labels.size() != dim) throw Error(ErrorCode::DimensionMismatch, "label count must equal dim");
  std::shared_ptr<LieAlgebra> L(new LieAlgebra());
  L->dim_ = dim;
  L->id_ = next_space_id();
  L->table_ = std::move(table);
  L->labels_ = std::move(labels);
  L->finish_killing_from_table();
  return L;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::build(const RootSystem& rs) {
  const int n = rs.rank();
  const std::size_t m = rs.num_positive();
  const std::size_t dim = static_cast<std::size_t>(n) + 2 * m;
  const auto& pos = rs.positive_roots();
  ChevalleyConstants chev(rs);

  // basis vector index -> signed root (Cartan entries get an empty root)
  auto root_of = [&](std::size_t k) -> Root {
    if (k < static_cast<std::size_t>(n)) return {};
    if (k < n + m) return pos[k - n];
    return negate(pos[k - n - m]);
  };
  auto index_of_root = [&](const Root& r) -> std::size_t {
    int k = rs.index_of(r);
    if (k >= 0) return n + static_cast<std::size_t>(k);
    return n + m + static_cast<std::size_t>(rs.index_of(negate(r)));
  };
  auto len = [&](const Root& r) { return rs.inner_product_int(r, r); };

  // Chevalley table over h_i (coroots), e_b, e_{-b}.
  std::vector<std::vector<Term>> chev_table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      auto& out = chev_table[x * dim + y];
      const bool hx = x < static_cast<std::size_t>(n), hy = y < static_cast<std::size_t>(n);
      if (hx && hy) continue;
      if (hx || hy) {
        // [h_i, e_r] = <r, alpha_i^vee> e_r
        const int i = static_cast<int>(hx ? x : y);
        const Root r = root_of(hx ? y : x);
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += r[j] * rs.cartan()[j][i];
        if (pairing != 0) out.push_back({static_cast<int>(hx ? y : x), Rational(hx ? pairing : -pairing)});
        continue;
      }
      const Root a = root_of(x), b = root_of(y);
      const Root s = add(a, b);
      bool zero_sum = true;
      for (int c : s) zero_sum = zero_sum && c == 0;
      if (zero_sum) {
        // [e_a, e_{-a}] = h_a = sum_j a_j (a_j,a_j)/(a,a) h_j, sign flips for a < 0
        const Root pa = is_positive(a) ? a : negate(a);
        const int sign = is_positive(a) ? 1 : -1;
        for (int j = 0; j < n; ++j) {
          if (pa[j] == 0) continue;
          Rational c = ratio(pa[j] * rs.inner()[j][j], len(pa));
          out.push_back({j, sign * c});
        }
        continue;
      }
      const int N = chev.N(a, b);
      if (N != 0) out.push_back({static_cast<int>(index_of_root(s)), Rational(N)});
    }

  // Killing form entries of the Chevalley basis needed for rescaling.
  auto k0 = [&](std::size_t x, std::size_t y) {
    Rational s = 0;
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& t : chev_table[y * dim + j])
        for (const auto& u : chev_table[x * dim + t.index])
          if (u.index == static_cast<int>(j)) s += t.coeff * u.coeff;
    return s;
  };

  std::vector<Rational> scale(dim, Rational(1));
  for (std::size_t k = 0; k < m; ++k) {
    Rational kk = k0(n + k, n + m + k);
    if (sgn(kk) == 0) throw Error(ErrorCode::Internal, "degenerate Killing pairing");
    scale[n + m + k] = 1 / kk;
  }
  for (int i = 0; i < n; ++i) {
    std::size_t k = static_cast<std::size_t>(rs.index_of(rs.simple_root(i)));
    scale[i] = scale[n + m + k];
  }

  std::vector<std::vector<Term>> table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y)
      for (const auto& t : chev_table[x * dim + y]) {
        Rational c = t.coeff * scale[x] * scale[y] / scale[t.index];
        table[x * dim + y].push_back({t.index, c});
      }

  std::vector<std::string> labels(dim);
  for (int i = 0; i < n; ++i) labels[i] = "H" + std::to_string(i + 1);
  for (std::size_t k = 0; k < m; ++k) {
    labels[n + k] = "E" + root_label(pos[k]);
    labels[n + m + k] = "E-" + root_label(pos[k]);
  }

  std::shared_ptr<LieAlgebra> L(new LieAlgebra());
  L->dim_ = dim;
  L->id_ = next_space_id();
  L->rs_ = rs;
  L->table_ = std::move(table);
  L->labels_ = std::move(labels);
  // The Killing form vanishes off weight-zero pairs; fill only those.
  L->killing_ = Matrix<Rational>(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) L->killing_(i, j) = k0(i, j) * scale[i] * scale[j];
  for (std::size_t k = 0; k < m; ++k) {
    Rational v = k0(n + k, n + m + k) * scale[n + k] * scale[n + m + k];
    L->killing_(n + k, n + m + k) = v;
    L->killing_(n + m + k, n + k) = v;
  }
  return L;
}

std::vector<std::size_t> semisimple_part_indices(const LieAlgebra& L, const std::vector<int>& simple_subset) {
  std::vector<std::size_t> idx;
  for (int i : simple_subset) idx.push_back(L.cartan_index(i));
  for (int k : L.root_system().positive_roots_supported_on(simple_subset)) {
    idx.push_back(L.positive_index(k));
    idx.push_back(L.negative_index(k));
  }
  return idx;
}

std::vector<std::size_t> complement_root_indices(const LieAlgebra& L, const std::vector<int>& simple_subset, int sign) {
  auto inside = L.root_system().positive_roots_supported_on(simple_subset);
  std::vector<bool> in(L.num_positive(), false);
  for (int k : inside) in[k] = true;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < L.num_positive(); ++k)
    if (!in[k]) idx.push_back(sign > 0 ? L.positive_index(static_cast<int>(k)) : L.negative_index(static_cast<int>(k)));
  return idx;
}

}  // namespace manin
