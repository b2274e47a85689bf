#ifndef EQSPLIT_EQSPLIT_H
#define EQSPLIT_EQSPLIT_H

/* Stable wedge decompositions of CP(V) and Gr_n(V) for finite groups, with
 * fixed-point verification. All strings are UTF-8; every char* returned
 * through an out parameter is owned by the caller and released with
 * eqsplit_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(EQSPLIT_BUILDING_LIB)
#define EQSPLIT_API __attribute__((visibility("default")))
#else
#define EQSPLIT_API
#endif

typedef enum eqsplit_status {
  EQSPLIT_OK = 0,
  EQSPLIT_INPUT_ERROR = 1,    /* malformed spec, unknown label, bad flag */
  EQSPLIT_NOT_GENUINE = 2,    /* class function is not a character */
  EQSPLIT_DOMAIN_ERROR = 3,   /* e.g. n larger than dim V */
  EQSPLIT_INTERNAL_ERROR = 4, /* consistency check failed; a bug */
  EQSPLIT_INVALID_ARGUMENT = 5
} eqsplit_status;

typedef enum eqsplit_format {
  EQSPLIT_FORMAT_JSON = 0,
  EQSPLIT_FORMAT_TEXT = 1,
  EQSPLIT_FORMAT_LATEX = 2,
  EQSPLIT_FORMAT_JUNIT = 3 /* sweep only */
} eqsplit_format;

typedef enum eqsplit_target { EQSPLIT_TARGET_CP = 0, EQSPLIT_TARGET_GR = 1 } eqsplit_target;

typedef enum eqsplit_mode {
  EQSPLIT_MODE_AUTO = 0, /* abelian when every block is one-dimensional */
  EQSPLIT_MODE_ABELIAN = 1,
  EQSPLIT_MODE_GENERAL = 2,
  EQSPLIT_MODE_STEP = 3 /* Gr only: a single filtration step at step_at */
} eqsplit_mode;

typedef struct eqsplit_request {
  eqsplit_target target;
  int n;                /* plane dimension for EQSPLIT_TARGET_GR */
  eqsplit_mode mode;
  int wrong_twist;      /* diagnostic: read Hom(xi, U) as xi (x) U */
  const char* subgroup; /* NULL or "" for all subgroup classes */
  int sort_canonical;   /* reorder blocks by table order before splitting */
  int step_at;          /* EQSPLIT_MODE_STEP: V0 is the first step_at blocks */
  int details;          /* text reports: list components and summand terms */
} eqsplit_request;

typedef struct eqsplit_context eqsplit_context;

EQSPLIT_API const char* eqsplit_version(void);

/* Message for the last failing call on this thread; never NULL. */
EQSPLIT_API const char* eqsplit_last_error(void);

EQSPLIT_API void eqsplit_string_free(char* s);

/* Request with target CP, n = 1, automatic mode and everything else off. */
EQSPLIT_API eqsplit_request eqsplit_default_request(void);

/* group_ref: "builtin:S3", a bare builtin name, a JSON file path, or "-" for
 * a JSON spec on stdin. table_json may be NULL to compute the table. */
EQSPLIT_API eqsplit_status eqsplit_context_create(const char* group_ref, const char* table_json,
                                                  eqsplit_context** out);
/* Same with the group spec given as a JSON document. */
EQSPLIT_API eqsplit_status eqsplit_context_create_from_json(const char* group_json,
                                                            const char* table_json,
                                                            eqsplit_context** out);
EQSPLIT_API void eqsplit_context_free(eqsplit_context* ctx);

EQSPLIT_API eqsplit_status eqsplit_group_order(const eqsplit_context* ctx, int* out);

/* Character table as JSON (text format: aligned table). */
EQSPLIT_API eqsplit_status eqsplit_table(const eqsplit_context* ctx, eqsplit_format format,
                                         char** out);

/* Subgroup classes with orders and structure names, as JSON. */
EQSPLIT_API eqsplit_status eqsplit_subgroups(const eqsplit_context* ctx, char** out);

/* rep: ordered list "triv,std" or "2*triv,sign". */
EQSPLIT_API eqsplit_status eqsplit_split(const eqsplit_context* ctx, const char* rep,
                                         const eqsplit_request* req, eqsplit_format format,
                                         char** out);

/* Per-subgroup fixed-point report. *pass is set to 1 when both sides agree for
 * every subgroup class, 0 otherwise; a mismatch is not an error status. */
EQSPLIT_API eqsplit_status eqsplit_verify(const eqsplit_context* ctx, const char* rep,
                                          const eqsplit_request* req, eqsplit_format format,
                                          char** out, int* pass);

/* Parses a decomposition JSON document against ctx and re-emits it in the
 * requested format. */
EQSPLIT_API eqsplit_status eqsplit_render(const eqsplit_context* ctx, const char* decomposition,
                                          eqsplit_format format, char** out);

/* config JSON keys: groups, target, min_dim, max_dim, max_blocks, min_n,
 * max_n, mode, wrong_twist, sample, seed, time_budget_seconds, threads,
 * keep_all, timing. *pass is 1 when no report failed and the sweep is
 * complete. */
EQSPLIT_API eqsplit_status eqsplit_sweep(const char* config_json, eqsplit_format format,
                                         char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif
