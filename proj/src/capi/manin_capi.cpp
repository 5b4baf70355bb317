#include "manin/manin.h"

#include "driver.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct manin_context {
  std::shared_ptr<const manin::Context> ctx;
};

namespace {

thread_local std::string last_error;

static_assert(MANIN_E_INTERNAL == static_cast<int>(manin::ErrorCode::Internal) + 1);
static_assert(MANIN_E_PARSE == static_cast<int>(manin::ErrorCode::Parse) + 1);

manin_status from_code(manin::ErrorCode c) {
  // enum orders match; MANIN_OK shifts by one
  return static_cast<manin_status>(static_cast<int>(c) + 1);
}

template <class Fn> manin_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return MANIN_OK;
  } catch (const manin::Error& e) {
    last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MANIN_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MANIN_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

manin_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return MANIN_E_NULL_ARGUMENT;
}

}  // namespace

extern "C" {

int manin_abi_version(void) { return MANIN_ABI_VERSION; }

const char* manin_status_string(manin_status s) {
  if (s == MANIN_OK) return "Ok";
  if (s == MANIN_E_NULL_ARGUMENT) return "NullArgument";
  if (s > MANIN_OK && s < MANIN_E_NULL_ARGUMENT) return manin::error_code_name(static_cast<manin::ErrorCode>(s - 1));
  return "Unknown";
}

const char* manin_last_error(void) { return last_error.c_str(); }

void manin_string_free(char* s) { std::free(s); }

manin_status manin_context_create_type(const char* type, manin_context** out) {
  if (!type) return null_arg("type");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new manin_context{manin::Context::for_type(type)}; });
}

manin_status manin_context_create_real_form(const char* form, manin_context** out) {
  if (!form) return null_arg("form");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new manin_context{manin::Context::for_real_form(form)}; });
}

void manin_context_destroy(manin_context* ctx) { delete ctx; }

manin_status manin_context_enumerate(const manin_context* ctx, int max_rank, int jobs, char** out, int* consistent) {
  if (!ctx) return null_arg("ctx");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto r = manin::enumerate(*ctx->ctx, max_rank, jobs);
    *out = dup(r.jsonl);
    if (consistent) *consistent = r.consistent;
  });
}

manin_status manin_context_construct(const manin_context* ctx, const char* triple_json, const char* ext_json,
                                     char** out, int* consistent) {
  if (!ctx) return null_arg("ctx");
  if (!triple_json) return null_arg("triple_json");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    const auto triple = manin::parse_json(triple_json);
    manin::json ext;
    if (ext_json) ext = manin::parse_json(ext_json);
    auto ev = manin::construct(*ctx->ctx, triple, ext_json ? &ext : nullptr);
    *out = dup(ev.body.dump(2) + "\n");
    if (consistent) *consistent = ev.consistent();
  });
}

manin_status manin_verify_document(const char* text, char** out, int* consistent) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto r = manin::verify_document(text);
    *out = dup(r.jsonl);
    if (consistent) *consistent = r.consistent;
  });
}

manin_status manin_report(const char* jsonl, char** out) {
  if (!jsonl) return null_arg("jsonl");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = dup(manin::report_table(jsonl)); });
}

}  // extern "C"
