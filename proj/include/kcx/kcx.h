#ifndef KCX_H
#define KCX_H

/* C interface to the kcx library. Models and reports are opaque handles owned
 * by the caller and released with the matching _free function. Every call
 * returns a kcx_status; details of the last error on the calling thread are
 * available through kcx_last_error(). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KCX_API __declspec(dllexport)
#else
#define KCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kcx_status {
  KCX_OK = 0,
  KCX_PROPERTY_FAILED = 1, /* report produced; it carries a witness */
  KCX_ERR_PARSE = 2,       /* model text or argument did not parse */
  KCX_BUDGET_EXHAUSTED = 3,/* report produced; a bounded search ran out */
  KCX_ERR_ARGUMENT = 4,    /* null handle, bad value or violated precondition */
  KCX_ERR_WRONG_KIND = 5,  /* the model kind does not fit the command */
  KCX_ERR_UNSUPPORTED = 6, /* outside what the structural algorithms handle */
  KCX_ERR_IO = 7,
  KCX_ERR_INTERNAL = 8
} kcx_status;

typedef enum kcx_model_kind {
  KCX_MODEL_COMPLEX = 0,
  KCX_MODEL_SYSTEM = 1,
  KCX_MODEL_QZ = 2,
  KCX_MODEL_EPSILON = 3
} kcx_model_kind;

typedef struct kcx_model kcx_model;
typedef struct kcx_report kcx_report;

typedef struct kcx_options {
  uint64_t budget;  /* elementary search steps per bounded check */
  unsigned threads; /* accepted for reproducibility; work is single-threaded */
} kcx_options;

KCX_API const char *kcx_version(void);
KCX_API const char *kcx_status_name(int status);
KCX_API void kcx_options_init(kcx_options *opts);

/* Message, line and column of the last failing call on this thread. Line and
 * column are 0 unless the failure was a parse error. */
KCX_API const char *kcx_last_error(void);
KCX_API size_t kcx_last_error_line(void);
KCX_API size_t kcx_last_error_column(void);

KCX_API int kcx_model_parse(const char *text, kcx_model **out);
KCX_API int kcx_model_load(const char *path, kcx_model **out);
KCX_API int kcx_model_get_kind(const kcx_model *model);
/* Canonical text; release with kcx_string_free. */
KCX_API int kcx_model_print(const kcx_model *model, char **out);
KCX_API void kcx_model_free(kcx_model *model);
KCX_API void kcx_string_free(char *s);

/* Commands. On KCX_OK, KCX_PROPERTY_FAILED and KCX_BUDGET_EXHAUSTED a report
 * is stored in *out; on any other status *out is NULL. opts may be NULL. */
KCX_API int kcx_check(const kcx_model *model, const kcx_options *opts, kcx_report **out);
KCX_API int kcx_split(const kcx_model *model, const kcx_options *opts, kcx_report **out);
/* triple: "(x);(y);(z)"; parts: "(e1),(e2),..." summing to x. */
KCX_API int kcx_decompose(const kcx_model *model, const char *triple, const char *parts, const kcx_options *opts,
                          kcx_report **out);
KCX_API int kcx_realize(const kcx_model *model, size_t steps, const kcx_options *opts, kcx_report **out);
KCX_API int kcx_large_denominators(const kcx_model *model, const kcx_options *opts, kcx_report **out);
/* chain: "2,6,24" or NULL for the chain in the model file. */
KCX_API int kcx_qz_stage(const kcx_model *model, const char *chain, const kcx_options *opts, kcx_report **out);
/* chain NULL and none in the file: 2!, 3!, 4!. */
KCX_API int kcx_qz_realize(const kcx_model *model, const char *chain, size_t steps, const kcx_options *opts,
                           kcx_report **out);
/* epsilon: "left=0;mid=1@1;right=1"; element: "x=1;y={0:0} | a=0;b={};c=1 | z=0". */
KCX_API int kcx_dl_positive(const char *epsilon, const char *element, const kcx_options *opts, kcx_report **out);
KCX_API int kcx_dl_equiv(const char *a, const char *b, size_t depth, const kcx_options *opts, kcx_report **out);

KCX_API int kcx_report_status(const kcx_report *report);
KCX_API const char *kcx_report_text(const kcx_report *report);
/* Machine-readable form with stable field names. */
KCX_API const char *kcx_report_json(const kcx_report *report);
KCX_API void kcx_report_free(kcx_report *report);

#ifdef __cplusplus
}
#endif

#endif
