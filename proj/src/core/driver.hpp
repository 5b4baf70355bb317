#ifndef MANIN_DRIVER_HPP
#define MANIN_DRIVER_HPP

// Enumerate / construct / verify / report over one algebra setting (a
// complex type or a real form).  Output is JSON lines, deterministic for
// fixed input whatever the number of worker threads.
//
// A result is "consistent" unless a valid input (i)-iv) hold) fails the
// Manin verifier; invalid inputs are reported with verdict false.

#include "double.hpp"
#include "realform.hpp"
#include "serialize.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace manin {

class Context {
public:
  static std::shared_ptr<const Context> for_type(std::string_view type);
  static std::shared_ptr<const Context> for_real_form(std::string_view form);

  const std::string& target() const { return target_; }
  bool is_real_form() const { return spec_.has_value(); }
  const RealFormSpec* spec() const { return spec_ ? &*spec_ : nullptr; }
  const RootSystem& root_system() const { return L_->root_system(); }
  const LieAlgebra& algebra() const { return *L_; }
  const DoubleAlgebra& double_algebra() const { return *D_; }
  const SemilinearInvolution* sigma() const { return sigma_.get(); }
  const DoubleAlgebra* real_double() const { return RD_.get(); }

private:
  Context() = default;
  void finish();

  std::string target_;
  std::optional<RealFormSpec> spec_;
  AlgebraPtr L_;
  std::unique_ptr<DoubleAlgebra> D_;
  std::unique_ptr<SemilinearInvolution> sigma_;
  std::unique_ptr<DoubleAlgebra> RD_;
};

struct Evaluation {
  json body;
  bool input_valid = false;
  bool extension_found = false;
  bool verdict = false;
  bool consistent() const { return !input_valid || verdict; }
};

// Full evaluation of one triple; `ext` null means the default extension.
Evaluation evaluate_triple(const Context& ctx, const BDTriple& t, const json* ext);

struct EnumerateResult {
  std::string jsonl;
  bool consistent = true;
};
EnumerateResult enumerate(const Context& ctx, int max_rank, int jobs);

// One construction record (pretty JSON not applied; caller formats).
Evaluation construct(const Context& ctx, const json& triple, const json* ext);

// Accepts a single JSON object, an array of objects, or JSON lines (summary
// footers skipped).  Throws Error(Parse) with a line diagnostic.
EnumerateResult verify_document(std::string_view text);

// Human-readable per-target table of an enumerate output.
std::string report_table(std::string_view jsonl);

}  // namespace manin

#endif
