/* C interface to the ehalg library. All handles are opaque; every function
 * returning ehalg_status leaves a message in ehalg_last_error() on failure. */
#ifndef EHALG_EHALG_H
#define EHALG_EHALG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EHALG_API __declspec(dllexport)
#else
#define EHALG_API __attribute__((visibility("default")))
#endif

typedef enum {
  EHALG_OK = 0,
  EHALG_ERR_INVALID_ARGUMENT = 1,
  EHALG_ERR_PARSE = 2,
  EHALG_ERR_VALIDATION = 3,
  EHALG_ERR_GUARD = 4,
  EHALG_ERR_VERIFICATION = 5,
  EHALG_ERR_IO = 6,
  EHALG_ERR_INTERNAL = 7
} ehalg_status;

typedef struct ehalg_system ehalg_system;
typedef struct ehalg_groupoid ehalg_groupoid;
typedef struct ehalg_report ehalg_report;

typedef struct {
  size_t guard_dim;
  size_t bisect_guard;
  size_t oracle_guard;
} ehalg_limits;

EHALG_API const char* ehalg_version(void);
/* Message of the last failure on this thread; empty after success. */
EHALG_API const char* ehalg_last_error(void);
EHALG_API ehalg_limits ehalg_default_limits(void);

EHALG_API ehalg_status ehalg_system_load(const char* path, ehalg_system** out);
EHALG_API ehalg_status ehalg_system_parse(const char* text, ehalg_system** out);
/* Fixtures by name: FIX-TRIV, FIX-FLIP, FIX-Z2FIX, FIX-BRANDT, FIX-SEMILAT, FIX-SWAPFIX. */
EHALG_API ehalg_status ehalg_system_fixture(const char* name, ehalg_system** out);
/* Overrides the field line, e.g. "F 3" or "Q". */
EHALG_API ehalg_status ehalg_system_set_field(ehalg_system* sys, const char* field);
/* Caller frees *out with ehalg_string_free. */
EHALG_API ehalg_status ehalg_system_serialize(const ehalg_system* sys, char** out);
EHALG_API void ehalg_system_free(ehalg_system* sys);

EHALG_API ehalg_status ehalg_groupoid_load(const char* path, ehalg_groupoid** out);
EHALG_API ehalg_status ehalg_groupoid_parse(const char* text, ehalg_groupoid** out);
EHALG_API ehalg_status ehalg_groupoid_set_field(ehalg_groupoid* g, const char* field);
EHALG_API ehalg_status ehalg_groupoid_serialize(const ehalg_groupoid* g, char** out);
EHALG_API void ehalg_groupoid_free(ehalg_groupoid* g);

EHALG_API void ehalg_string_free(char* s);

/* Sets *is_groupoid to 1 when the file at path is a groupoid file. */
EHALG_API ehalg_status ehalg_path_is_groupoid(const char* path, int* is_groupoid);

/* Commands. On EHALG_OK, *out holds a report whose ok flag tells whether the
 * input passed; limits may be NULL for the defaults. */
EHALG_API ehalg_status ehalg_cmd_validate(const ehalg_system* sys, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_validate_groupoid(const ehalg_groupoid* g, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_build(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_germs(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_decompose(const ehalg_system* sys, const char* const* generators, size_t count,
                                           const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_isocheck(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_bisect(const ehalg_groupoid* g, const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_oracle(const ehalg_system* sys, const ehalg_limits* limits, ehalg_report** out);
EHALG_API ehalg_status ehalg_cmd_fixtures(const ehalg_limits* limits, ehalg_report** out);

EHALG_API int ehalg_report_ok(const ehalg_report* r);
EHALG_API const char* ehalg_report_json(const ehalg_report* r);
EHALG_API const char* ehalg_report_text(const ehalg_report* r);
EHALG_API void ehalg_report_free(ehalg_report* r);

#ifdef __cplusplus
}
#endif

#endif
