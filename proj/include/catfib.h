/* C interface to the finite-category kernel.
 *
 * All functions return a cf_status; results are returned through opaque
 * handles that must be released with the matching *_free function. Strings
 * returned through char** must be released with cf_string_free. Handles are
 * not thread-safe individually, but independent handles may be used from
 * different threads.
 */
#ifndef CATFIB_H
#define CATFIB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
  CF_OK = 0,              /* success / property holds */
  CF_PROPERTY_FAILED = 1, /* well-formed input, property fails; see report */
  CF_INVALID_INPUT = 2,   /* malformed or ill-typed input */
  CF_INTERNAL_ERROR = 3
} cf_status;

const char* cf_version(void);
void cf_string_free(char* s);

/* ---- command dispatch ---------------------------------------------------
 * Runs one CLI command (argv without the program name). The report handle
 * is always produced, also on failure. */
typedef struct cf_report cf_report;

cf_status cf_run(int argc, const char* const* argv, cf_report** out);
int cf_report_exit_code(const cf_report* r);
/* Rendering selected by --report (text by default). */
const char* cf_report_output(const cf_report* r);
/* The structured JSON report {command, inputs, verdict, witnesses, timings}. */
const char* cf_report_json(const cf_report* r);
void cf_report_free(cf_report* r);

/* ---- direct category access --------------------------------------------- */
typedef struct cf_category cf_category;

/* Parses and validates a category document given as JSON text. On failure
 * *out is NULL and, when err is non-NULL, *err carries the diagnostics. */
cf_status cf_category_load(const char* json_text, cf_category** out, cf_report** err);
cf_status cf_category_canonical(const cf_category* c, char** out_text);
size_t cf_category_num_objects(const cf_category* c);
size_t cf_category_num_morphisms(const cf_category* c);
/* g∘f; CF_INVALID_INPUT when the names are unknown or not composable. */
cf_status cf_category_compose(const cf_category* c, const char* f, const char* g,
                              char** result);
void cf_category_free(cf_category* c);

#ifdef __cplusplus
}
#endif

#endif /* CATFIB_H */
