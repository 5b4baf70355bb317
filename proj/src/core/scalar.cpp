#include "scalar.hpp"

#include "error.hpp"

#include <cctype>

namespace manin {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InadmissibleType: return "InadmissibleType";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::RankLimitExceeded: return "RankLimitExceeded";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::NotInPi0: return "NotInPi0";
    case ErrorCode::NotDiagramAutomorphism: return "NotDiagramAutomorphism";
    case ErrorCode::NotInCartan: return "NotInCartan";
    case ErrorCode::InconsistentExtension: return "InconsistentExtension";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::NotSigmaEquivariant: return "NotSigmaEquivariant";
    case ErrorCode::InconsistentSpec: return "InconsistentSpec";
    case ErrorCode::ExtensionSignConflict: return "ExtensionSignConflict";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::InvalidFlags: return "InvalidFlags";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const Gaussian& x) {
  if (sgn(x.im()) == 0) return x.re().get_str();
  std::string s = x.re().get_str();
  if (sgn(x.im()) > 0) {
    s += "+" + x.im().get_str();
  } else {
    s += x.im().get_str();
  }
  return s + " i";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_rational_text(std::string_view s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  std::size_t digits = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k, ++digits;
  if (digits == 0) return false;
  if (k == s.size()) return true;
  if (s[k] != '/') return false;
  ++k;
  digits = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k, ++digits;
  return digits > 0 && k == s.size();
}

}  // namespace

Rational parse_rational(std::string_view s) {
  s = trim(s);
  if (!valid_rational_text(s)) throw Error(ErrorCode::Parse, "bad rational '" + std::string(s) + "'");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorCode::Parse, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

// Accepts "a", "b i", "a+b i", "a-b i", "i", "-i", "a+i".
Gaussian parse_gaussian(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty scalar");
  if (s.back() != 'i') return Gaussian(parse_rational(s));
  std::string_view body = trim(s.substr(0, s.size() - 1));
  // split at the last sign that is not the leading character
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  im_part = trim(im_part);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
  return Gaussian(re, im);
}

}  // namespace manin
