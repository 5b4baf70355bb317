#include "driver.hpp"

#include <atomic>
#include <exception>
#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace manin {

std::shared_ptr<const Context> Context::for_type(std::string_view type) {
  std::shared_ptr<Context> c(new Context());
  const auto t = parse_type(type);
  c->target_ = to_string(t);
  c->L_ = LieAlgebra::build(RootSystem::build(t));
  c->finish();
  return c;
}

std::shared_ptr<const Context> Context::for_real_form(std::string_view form) {
  std::shared_ptr<Context> c(new Context());
  c->spec_ = parse_real_form(form);
  c->target_ = c->spec_->name;
  c->L_ = LieAlgebra::build(c->spec_->complex_root_system());
  c->sigma_ = std::make_unique<SemilinearInvolution>(c->L_, *c->spec_);
  c->RD_ = std::make_unique<DoubleAlgebra>(c->sigma_->real_model());
  c->finish();
  return c;
}

void Context::finish() {
  D_ = std::make_unique<DoubleAlgebra>(L_);
  // warm the per-double caches before any worker threads start
  (void)D_->q_nondegenerate();
  (void)D_->q_invariance_failure();
  if (RD_) {
    (void)RD_->q_nondegenerate();
    (void)RD_->q_invariance_failure();
  }
}

namespace {

template <class F> json iv_to_json(const IVVerdict<F>& v) {
  static const char* kinds[] = {"ok", "not_isometric", "fixed_point"};
  json j;
  j["pass"] = v.ok();
  j["kind"] = kinds[static_cast<int>(v.kind)];
  if (!v.ok()) {
    j["detail"] = v.message;
    json w = json::array();
    for (const auto& x : v.witness) w.push_back(vector_to_json(x));
    j["witness"] = w;
  }
  return j;
}

template <class F> json subspace_json(const Subspace<F>& V) {
  json a = json::array();
  for (const auto& b : V.basis()) a.push_back(vector_to_json(b));
  return a;
}

// Steps after the extension is fixed, over its field.
template <class F>
void finish_evaluation(const Context& ctx, const BDTriple& t, const CartanExtension<F>& ext, Evaluation& ev,
                       bool include_w) {
  const LieAlgebra& L = ctx.algebra();
  json& j = ev.body;
  IVVerdict<F> iv;
  try {
    iv = verify_condition_iv(L, t, ext);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentExtension) throw;
    j["condition_iv"] = {{"pass", false}, {"kind", "inconsistent"}, {"detail", e.what()}};
    j["report"] = nullptr;
    ev.input_valid = false;
    ev.verdict = false;
    j["verdict"] = false;
    return;
  }
  j["condition_iv"] = iv_to_json(iv);
  ev.input_valid = iv.ok();

  const auto W = build_W_phi(ctx.double_algebra(), t, ext);
  const auto rep = verify_manin_triple(ctx.double_algebra(), W);
  if (include_w) j["w_basis"] = subspace_json(W);
  j["report"] = report_to_json(rep);
  ev.verdict = ev.input_valid && rep.verdict;

  if (const auto* s = ctx.sigma()) {
    const CartanExtension<Gaussian> g = [&] {
      if constexpr (std::is_same_v<F, Gaussian>) return ext;
      else return to_gaussian(ext);
    }();
    const auto cor = check_invariance_criterion(ctx.double_algebra(), *s, t, g);
    j["invariance"] = {{"sigma_invariant", cor.sigma_invariant}, {"v_star", cor.v_star}, {"equivalent", cor.equivalent}};
    ev.verdict = ev.verdict && cor.equivalent;
    if (cor.v_star && check_sigma_equivariance(ctx.root_system(), t, s->sigma_pi())) {
      const DoubleAlgebra& RD = *ctx.real_double();
      const auto WR = build_W_phi_real(RD, *s, t, g);
      const auto real_rep = verify_manin_triple(RD, WR);
      const bool match = real_points(*s, to_gaussian(W), RD.id()) == WR;
      j["real_points_match"] = match;
      if (include_w) j["w_real_basis"] = subspace_json(WR);
      j["real_report"] = report_to_json(real_rep);
      ev.verdict = ev.verdict && match && real_rep.verdict;
    } else {
      j["real_points_match"] = nullptr;
      j["real_report"] = nullptr;
    }
  }
  j["verdict"] = ev.verdict;
}

Evaluation evaluate_impl(const Context& ctx, const BDTriple& t, const json* ext_json, bool include_w) {
  Evaluation ev;
  json& j = ev.body;
  const RootSystem& rs = ctx.root_system();
  j["triple"] = triple_to_json(t);
  const BDVerdict bd = check_bd_conditions(rs, t);
  j["bd_conditions"] = bd_verdict_to_json(bd);
  if (!bd.ok) {
    j["verdict"] = false;
    return ev;
  }
  j["chains"] = chains_to_json(maximal_chains(t));
  bool equivariant = true;
  if (const auto* s = ctx.sigma()) {
    equivariant = check_sigma_equivariance(rs, t, s->sigma_pi());
    j["sigma_equivariant"] = equivariant;
  }
  const LieAlgebra& L = ctx.algebra();
  if (ext_json) {
    AnyExtension ext = extension_from_json(L, *ext_json);
    ev.extension_found = true;
    std::visit(
        [&](const auto& e) {
          j["extension"] = {{"status", "supplied"}, {"ext", extension_to_json(L, e)}};
          finish_evaluation(ctx, t, e, ev, include_w);
        },
        ext);
    return ev;
  }
  const Permutation* sigma = ctx.sigma() && equivariant ? &ctx.sigma()->sigma_pi() : nullptr;
  auto ext = construct_default_extension(L, t, sigma);
  if (!ext) {
    j["extension"] = {{"status", "none_found"}};
    j["report"] = nullptr;
    j["verdict"] = nullptr;
    ev.input_valid = false;
    return ev;
  }
  ev.extension_found = true;
  j["extension"] = {{"status", "found"}, {"ext", extension_to_json(L, *ext)}};
  finish_evaluation(ctx, t, *ext, ev, include_w);
  return ev;
}

json header(const Context& ctx, const char* kind) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  j["target"] = ctx.target();
  j["type"] = to_string(ctx.spec() ? ctx.spec()->base_type : ctx.root_system().type());
  if (ctx.spec()) j["real_form"] = ctx.spec()->name;
  return j;
}

json merged(json head, const json& body) {
  for (const auto& [k, v] : body.items()) head[k] = v;
  return head;
}

}  // namespace

Evaluation evaluate_triple(const Context& ctx, const BDTriple& t, const json* ext) {
  return evaluate_impl(ctx, t, ext, false);
}

EnumerateResult enumerate(const Context& ctx, int max_rank, int jobs) {
  const auto all = enumerate_bd_triples(ctx.root_system(), max_rank);
  std::vector<BDTriple> triples;
  for (const auto& t : all)
    if (!ctx.sigma() || check_sigma_equivariance(ctx.root_system(), t, ctx.sigma()->sigma_pi())) triples.push_back(t);

  std::vector<Evaluation> results(triples.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < triples.size();) {
      try {
        results[k] = evaluate_impl(ctx, triples[k], nullptr, false);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(triples.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  EnumerateResult out;
  std::ostringstream os;
  std::size_t found = 0, verified = 0;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    json line = header(ctx, "triple");
    line["index"] = k + 1;
    os << merged(std::move(line), results[k].body).dump() << '\n';
    found += results[k].extension_found;
    verified += results[k].verdict;
    out.consistent = out.consistent && results[k].consistent();
  }
  json footer = header(ctx, "summary");
  footer["triples"] = all.size();
  footer["count"] = triples.size();
  footer["extension_found"] = found;
  footer["verified"] = verified;
  footer["consistent"] = out.consistent;
  os << footer.dump() << '\n';
  out.jsonl = os.str();
  return out;
}

Evaluation construct(const Context& ctx, const json& triple, const json* ext) {
  const BDTriple t = triple_from_json(triple, ctx.root_system().rank());
  Evaluation ev = evaluate_impl(ctx, t, ext, true);
  ev.body = merged(header(ctx, "construction"), ev.body);
  return ev;
}

namespace {

std::vector<std::pair<std::size_t, json>> split_documents(std::string_view text) {
  std::vector<std::pair<std::size_t, json>> docs;
  json whole = json::parse(text, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (std::size_t k = 0; k < whole.size(); ++k) docs.emplace_back(k + 1, whole[k]);
    } else {
      docs.emplace_back(1, whole);
    }
    return docs;
  }
  std::istringstream is{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(is, line); ++no) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      docs.emplace_back(no, json::parse(line));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(no) + ": malformed JSON: " + e.what());
    }
  }
  return docs;
}

}  // namespace

EnumerateResult verify_document(std::string_view text) {
  EnumerateResult out;
  std::ostringstream os;
  std::map<std::string, std::shared_ptr<const Context>> contexts;
  for (const auto& [no, doc] : split_documents(text)) {
    const std::string where = "line " + std::to_string(no) + ": ";
    try {
      if (!doc.is_object()) throw Error(ErrorCode::Parse, "expected a JSON object");
      if (doc.contains("kind") && doc["kind"] == "summary") continue;
      std::string key;
      std::shared_ptr<const Context> ctx;
      if (doc.contains("real_form")) {
        if (!doc["real_form"].is_string()) throw Error(ErrorCode::Parse, "\"real_form\" must be a string");
        key = "R:" + doc["real_form"].get<std::string>();
        if (!contexts.count(key)) contexts[key] = Context::for_real_form(doc["real_form"].get<std::string>());
      } else if (doc.contains("type")) {
        if (!doc["type"].is_string()) throw Error(ErrorCode::Parse, "\"type\" must be a string");
        key = "C:" + doc["type"].get<std::string>();
        if (!contexts.count(key)) contexts[key] = Context::for_type(doc["type"].get<std::string>());
      } else {
        throw Error(ErrorCode::Parse, "missing \"type\" or \"real_form\"");
      }
      ctx = contexts[key];
      if (!doc.contains("triple")) throw Error(ErrorCode::Parse, "missing \"triple\"");
      const json* ext = nullptr;
      if (doc.contains("extension") && doc["extension"].is_object() && doc["extension"].contains("ext"))
        ext = &doc["extension"]["ext"];
      else if (doc.contains("ext") && !doc["ext"].is_null())
        ext = &doc["ext"];
      const BDTriple t = triple_from_json(doc["triple"], ctx->root_system().rank());
      Evaluation ev = evaluate_impl(*ctx, t, ext, false);
      json line = header(*ctx, "verification");
      line["source_line"] = no;
      os << merged(std::move(line), ev.body).dump() << '\n';
      out.consistent = out.consistent && ev.consistent();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::InadmissibleType || e.code() == ErrorCode::InconsistentSpec)
        throw Error(ErrorCode::Parse, where + e.what());
      throw;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, where + e.what());
    }
  }
  out.jsonl = os.str();
  return out;
}

std::string report_table(std::string_view jsonl) {
  struct Row {
    std::size_t triples = 0, lines = 0, found = 0, verified = 0;
    bool real = false, has_footer = false;
    std::map<std::size_t, std::size_t> chain_lengths;
  };
  std::vector<std::string> order;
  std::map<std::string, Row> rows;
  auto row = [&](const std::string& target) -> Row& {
    if (!rows.count(target)) order.push_back(target);
    return rows[target];
  };
  for (const auto& [no, doc] : split_documents(jsonl)) {
    const std::string where = "line " + std::to_string(no) + ": ";
    if (!doc.is_object() || !doc.contains("target") || !doc["target"].is_string())
      throw Error(ErrorCode::Parse, where + "expected an enumerate record with \"target\"");
    Row& r = row(doc["target"].get<std::string>());
    r.real = r.real || doc.contains("real_form");
    const std::string kind = doc.value("kind", "");
    try {
      if (kind == "summary") {
        r.has_footer = true;
        r.triples = doc.at("triples").get<std::size_t>();
        continue;
      }
      ++r.lines;
      const auto& ext = doc.value("extension", json::object());
      if (ext.is_object() && ext.value("status", "") != "none_found" && !ext.empty()) ++r.found;
      if (doc.value("verdict", json(nullptr)) == true) ++r.verified;
      if (doc.contains("chains"))
        for (const auto& c : doc["chains"]) ++r.chain_lengths[c.size()];
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse, where + e.what());
    }
  }
  std::ostringstream os;
  os << "target: triples | sigma-equivariant | default extension | verified | chain lengths\n";
  for (const auto& name : order) {
    const Row& r = rows.at(name);
    const std::size_t total = r.has_footer ? r.triples : r.lines;
    os << name << ": " << total << " triples | " << (r.real ? std::to_string(r.lines) : std::string("-")) << " | "
       << r.found << " | " << r.verified << " |";
    if (r.chain_lengths.empty()) os << " none";
    for (const auto& [len, count] : r.chain_lengths) os << ' ' << len << ':' << count;
    os << '\n';
  }
  return os.str();
}

}  // namespace manin
