#ifndef MANIN_SERIALIZE_HPP
#define MANIN_SERIALIZE_HPP

// JSON forms (schema "manin/1").  Simple-root indices are 1-based, scalars are
// strings "p/q" or "a+b i", Cartan subspaces are bases in H-coordinates.

#include "bdtriple.hpp"
#include "cartan.hpp"
#include "verifier.hpp"

#include <json.hpp>

#include <variant>

namespace manin {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "manin/1";

json triple_to_json(const BDTriple& t);
// Structural parse only (indices within rank); conditions i)-iii) are checked separately.
BDTriple triple_from_json(const json& j, int rank);

json chains_to_json(const std::vector<Chain>& chains);

template <class F> json vector_to_json(const Vec<F>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

using AnyExtension = std::variant<CartanExtension<Rational>, CartanExtension<Gaussian>>;

template <class F> json extension_to_json(const LieAlgebra& L, const CartanExtension<F>& ext);
AnyExtension extension_from_json(const LieAlgebra& L, const json& j);

json report_to_json(const ManinReport& r);
json bd_verdict_to_json(const BDVerdict& v);

// Parses text as JSON, turning library errors into Error(Parse).
json parse_json(std::string_view text);

}  // namespace manin

#endif
