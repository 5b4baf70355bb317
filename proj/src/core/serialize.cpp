#include "serialize.hpp"

namespace manin {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

int root_index(const json& v, int rank, const std::string& where) {
  if (!v.is_number_integer()) parse_error(where + ": expected an integer root index");
  const int i = v.get<int>();
  if (i < 1 || i > rank) parse_error(where + ": root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  return i - 1;
}

std::vector<int> index_list(const json& j, const char* key, int rank) {
  if (!j.contains(key)) parse_error(std::string("triple: missing \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array()) parse_error(std::string("triple: \"") + key + "\" must be an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(root_index(a[k], rank, std::string(key) + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

json triple_to_json(const BDTriple& t) {
  json j;
  j["pi1"] = json::array();
  j["pi2"] = json::array();
  for (int a : t.pi1) j["pi1"].push_back(a + 1);
  for (int b : t.pi2) j["pi2"].push_back(b + 1);
  j["phi"] = json::object();
  for (const auto& [a, b] : t.phi) j["phi"][std::to_string(a + 1)] = b + 1;
  return j;
}

BDTriple triple_from_json(const json& j, int rank) {
  if (!j.is_object()) parse_error("triple: expected an object");
  BDTriple t;
  t.pi1 = index_list(j, "pi1", rank);
  t.pi2 = index_list(j, "pi2", rank);
  std::sort(t.pi1.begin(), t.pi1.end());
  std::sort(t.pi2.begin(), t.pi2.end());
  if (!j.contains("phi") || !j.at("phi").is_object()) parse_error("triple: \"phi\" must be an object");
  for (const auto& [key, val] : j.at("phi").items()) {
    int a = 0;
    try {
      std::size_t used = 0;
      a = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      parse_error("triple: phi key '" + key + "' is not an integer");
    }
    if (a < 1 || a > rank) parse_error("triple: phi key " + key + " outside 1.." + std::to_string(rank));
    if (t.phi.count(a - 1)) parse_error("triple: phi key " + key + " repeated");
    t.phi[a - 1] = root_index(val, rank, "phi[" + key + "]");
  }
  return t;
}

json chains_to_json(const std::vector<Chain>& chains) {
  json a = json::array();
  for (const auto& c : chains) {
    json e = json::array();
    for (int x : c.elements) e.push_back(x + 1);
    a.push_back(e);
  }
  return a;
}

namespace {

template <class F> json subspace_h_json(const LieAlgebra& L, const Subspace<F>& V) {
  json a = json::array();
  for (const auto& b : V.basis()) a.push_back(vector_to_json(cartan_coords(L, b)));
  return a;
}

template <class F> Subspace<F> subspace_h_from(const LieAlgebra& L, const json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("extension: missing \"") + key + "\"");
  const json& a = j.at(key);
  if (!a.is_array()) parse_error(std::string("extension: \"") + key + "\" must be an array of vectors");
  std::vector<Vec<F>> rows;
  for (std::size_t r = 0; r < a.size(); ++r) {
    const json& row = a[r];
    const std::string where = std::string(key) + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(L.rank()))
      parse_error("extension: " + where + " must have " + std::to_string(L.rank()) + " entries");
    Vec<F> h;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_string() && !row[c].is_number_integer()) parse_error("extension: " + where + " entries must be strings");
      h.push_back(parse_scalar<F>(row[c].is_string() ? row[c].get<std::string>() : std::to_string(row[c].get<long>())));
    }
    rows.push_back(embed_cartan(L, h));
  }
  return Subspace<F>::span(L.dim(), L.id(), std::move(rows));
}

template <class F> CartanExtension<F> extension_from(const LieAlgebra& L, const json& j) {
  CartanExtension<F> ext;
  ext.hbar1 = subspace_h_from<F>(L, j, "hbar1");
  ext.hbar2 = subspace_h_from<F>(L, j, "hbar2");
  ext.l1 = subspace_h_from<F>(L, j, "l1");
  ext.l2 = subspace_h_from<F>(L, j, "l2");
  if (!j.contains("phi_h") || !j.at("phi_h").is_array()) parse_error("extension: \"phi_h\" must be a matrix");
  const json& m = j.at("phi_h");
  const auto n = static_cast<std::size_t>(L.rank());
  if (m.size() != n) parse_error("extension: phi_h must have " + std::to_string(n) + " rows");
  ext.phi_h = Matrix<F>(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!m[r].is_array() || m[r].size() != n) parse_error("extension: phi_h row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const json& x = m[r][c];
      if (!x.is_string() && !x.is_number_integer()) parse_error("extension: phi_h entries must be strings");
      ext.phi_h(r, c) = parse_scalar<F>(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
    }
  }
  return ext;
}

}  // namespace

template <class F> json extension_to_json(const LieAlgebra& L, const CartanExtension<F>& ext) {
  json j;
  j["field"] = FieldOf<F>::tag == FieldTag::Rational ? "rational" : "gaussian";
  j["hbar1"] = subspace_h_json(L, ext.hbar1);
  j["hbar2"] = subspace_h_json(L, ext.hbar2);
  j["l1"] = subspace_h_json(L, ext.l1);
  j["l2"] = subspace_h_json(L, ext.l2);
  j["phi_h"] = json::array();
  for (std::size_t r = 0; r < ext.phi_h.rows(); ++r) j["phi_h"].push_back(vector_to_json(ext.phi_h.row(r)));
  return j;
}

template json extension_to_json(const LieAlgebra&, const CartanExtension<Rational>&);
template json extension_to_json(const LieAlgebra&, const CartanExtension<Gaussian>&);

AnyExtension extension_from_json(const LieAlgebra& L, const json& j) {
  if (!j.is_object()) parse_error("extension: expected an object");
  const std::string field = j.value("field", "rational");
  if (field == "rational") return extension_from<Rational>(L, j);
  if (field == "gaussian") return extension_from<Gaussian>(L, j);
  parse_error("extension: unknown field '" + field + "'");
}

json report_to_json(const ManinReport& r) {
  json j;
  j["checks"] = json::object();
  for (const auto& name : manin_check_names()) {
    auto it = r.checks.find(name);
    if (it == r.checks.end()) continue;
    json c;
    c["pass"] = it->second.pass;
    if (!it->second.detail.empty()) c["detail"] = it->second.detail;
    c["witness"] = it->second.witness.empty() ? json(nullptr) : json(it->second.witness);
    j["checks"][name] = c;
  }
  j["dims"] = {{"dim_g", r.dims.dim_g},
               {"dim_w", r.dims.dim_w},
               {"dim_w_cap_diag", r.dims.dim_w_cap_diag},
               {"dim_w_plus_diag", r.dims.dim_w_plus_diag}};
  j["verdict"] = r.verdict;
  return j;
}

json bd_verdict_to_json(const BDVerdict& v) {
  static const char* names[] = {"ok", "not_bijective", "not_isometric", "no_exit"};
  json j;
  j["pass"] = v.ok;
  if (!v.ok) {
    j["condition"] = v.condition;
    j["violation"] = names[v.condition];
    json w = json::array();
    for (int a : v.witness) w.push_back(a + 1);
    j["witness"] = w;
    j["detail"] = v.message;
  }
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace manin
