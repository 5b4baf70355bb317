#ifndef MANIN_MANIN_H
#define MANIN_MANIN_H

/* C interface to the Manin-triple engine.  All strings are UTF-8 JSON or
 * JSON lines; returned strings belong to the caller (manin_string_free).
 * Functions return MANIN_OK or an error status; manin_last_error() holds the
 * message for the calling thread. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MANIN_API __declspec(dllexport)
#else
#define MANIN_API __attribute__((visibility("default")))
#endif

#define MANIN_ABI_VERSION 1

typedef enum manin_status {
  MANIN_OK = 0,
  MANIN_E_INADMISSIBLE_TYPE,
  MANIN_E_DIMENSION_MISMATCH,
  MANIN_E_INDEX_OUT_OF_RANGE,
  MANIN_E_PARENT_MISMATCH,
  MANIN_E_RANK_LIMIT_EXCEEDED,
  MANIN_E_INVALID_TRIPLE,
  MANIN_E_NOT_IN_PI0,
  MANIN_E_NOT_DIAGRAM_AUTOMORPHISM,
  MANIN_E_NOT_IN_CARTAN,
  MANIN_E_INCONSISTENT_EXTENSION,
  MANIN_E_INVALID_EXTENSION,
  MANIN_E_NOT_SIGMA_EQUIVARIANT,
  MANIN_E_INCONSISTENT_SPEC,
  MANIN_E_EXTENSION_SIGN_CONFLICT,
  MANIN_E_NOT_INVARIANT,
  MANIN_E_INVALID_FLAGS,
  MANIN_E_PARSE,
  MANIN_E_INTERNAL,
  MANIN_E_NULL_ARGUMENT
} manin_status;

/* Opaque: one complex type ("B3") or one real form ("su(2,2)"). */
typedef struct manin_context manin_context;

MANIN_API int manin_abi_version(void);
MANIN_API const char* manin_status_string(manin_status s);
MANIN_API const char* manin_last_error(void);
MANIN_API void manin_string_free(char* s);

MANIN_API manin_status manin_context_create_type(const char* type, manin_context** out);
MANIN_API manin_status manin_context_create_real_form(const char* form, manin_context** out);
MANIN_API void manin_context_destroy(manin_context* ctx);

/* *consistent is 0 when some valid triple failed the Manin verifier. */
MANIN_API manin_status manin_context_enumerate(const manin_context* ctx, int max_rank, int jobs, char** out,
                                               int* consistent);

/* ext_json may be NULL (default extension). */
MANIN_API manin_status manin_context_construct(const manin_context* ctx, const char* triple_json, const char* ext_json,
                                               char** out, int* consistent);

MANIN_API manin_status manin_verify_document(const char* text, char** out, int* consistent);
MANIN_API manin_status manin_report(const char* jsonl, char** out);

#ifdef __cplusplus
}
#endif

#endif
