#ifndef KHECKE_H
#define KHECKE_H

#include <stddef.h>

#if defined(KHECKE_BUILDING) && defined(__GNUC__)
#define KHECKE_API __attribute__((visibility("default")))
#else
#define KHECKE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct khecke_session khecke_session;

typedef enum {
  KHECKE_OK = 0,
  KHECKE_DOMAIN_ERROR = 1,
  KHECKE_VERIFICATION_FAILED = 2,
  KHECKE_IO_ERROR = 3,
  KHECKE_INTERNAL_ERROR = 4
} khecke_status;

typedef enum { KHECKE_OPT_TEXT = 0, KHECKE_OPT_INT = 1, KHECKE_OPT_FLAG = 2 } khecke_option_kind;

KHECKE_API const char* khecke_version(void);

/* Sessions keep engines and the expansion cache alive between runs. */
KHECKE_API khecke_session* khecke_session_create(void);
KHECKE_API void khecke_session_destroy(khecke_session* s);
/* Empty string disables the cache; KHECKE_CACHE in the environment wins. */
KHECKE_API khecke_status khecke_session_set_cache_dir(khecke_session* s, const char* dir);

/* Runs one subcommand. keys are option names without dashes ("n",
   "partition", "format", ...); for flags any value works. Output, error text
   and warnings stay valid until the next call on the session. */
KHECKE_API khecke_status khecke_run(khecke_session* s, const char* command, size_t count, const char* const* keys,
                         const char* const* values);
KHECKE_API const char* khecke_output(const khecke_session* s);
KHECKE_API const char* khecke_error_message(const khecke_session* s);
KHECKE_API size_t khecke_warning_count(const khecke_session* s);
KHECKE_API const char* khecke_warning(const khecke_session* s, size_t i);

/* Introspection of subcommands and their options, for front ends. */
KHECKE_API size_t khecke_command_count(void);
KHECKE_API const char* khecke_command_name(size_t cmd);
KHECKE_API const char* khecke_command_help(size_t cmd);
KHECKE_API size_t khecke_option_count(size_t cmd);
KHECKE_API const char* khecke_option_name(size_t cmd, size_t opt);
KHECKE_API const char* khecke_option_help(size_t cmd, size_t opt);
KHECKE_API khecke_option_kind khecke_option_kind_of(size_t cmd, size_t opt);

#ifdef __cplusplus
}
#endif

#endif
