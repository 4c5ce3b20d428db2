/* C interface to the score-sequence counting library.
 *
 * All functions besides the constructors report through scoreseq_status;
 * a human-readable message for the most recent failure on a context is
 * available via scoreseq_ctx_last_error. Strings returned through char**
 * are malloc'd and must be released with scoreseq_string_free.
 */
#ifndef SCORESEQ_H
#define SCORESEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SCORESEQ_BUILD_SHARED)
#define SCORESEQ_API __declspec(dllexport)
#else
#define SCORESEQ_API __declspec(dllimport)
#endif
#else
#define SCORESEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scoreseq_status {
    SCORESEQ_OK = 0,
    SCORESEQ_ERR_INVALID = 1,   /* bad argument or malformed input */
    SCORESEQ_ERR_MISMATCH = 2,  /* independent counting methods disagree */
    SCORESEQ_ERR_BUDGET = 3,    /* table would exceed the cell budget */
    SCORESEQ_ERR_LIMIT = 4,     /* enumeration length above the limit */
    SCORESEQ_ERR_NOMEM = 5,
    SCORESEQ_ERR_INTERNAL = 6
} scoreseq_status;

typedef enum scoreseq_kind {
    SCORESEQ_KIND_ALL = 0,
    SCORESEQ_KIND_SELF_COMPLEMENTARY = 1,
    SCORESEQ_KIND_STRONG = 2,
    SCORESEQ_KIND_STRONG_SELF_COMPLEMENTARY = 3
} scoreseq_kind;

typedef enum scoreseq_method {
    SCORESEQ_METHOD_DEFAULT = 0, /* both where two methods exist, else direct */
    SCORESEQ_METHOD_DP = 1,
    SCORESEQ_METHOD_RECURRENCE = 2,
    SCORESEQ_METHOD_BOTH = 3
} scoreseq_method;

/* Classification flags returned by scoreseq_classify. */
#define SCORESEQ_CLASS_VALID 0x1u
#define SCORESEQ_CLASS_SELF_COMPLEMENTARY 0x2u
#define SCORESEQ_CLASS_STRONG 0x4u
#define SCORESEQ_CLASS_STRONG_SELF_COMPLEMENTARY 0x8u

typedef struct scoreseq_ctx scoreseq_ctx;
typedef struct scoreseq_report scoreseq_report;

SCORESEQ_API const char* scoreseq_version(void);

/* Context: owns configuration, cached series tables, and the last error
 * message. Not safe for concurrent use from multiple threads. */
SCORESEQ_API scoreseq_ctx* scoreseq_ctx_new(void);
SCORESEQ_API void scoreseq_ctx_free(scoreseq_ctx* ctx);

/* Message for the most recent failing call on this context; empty string
 * if none. Owned by the context, valid until the next call on it. */
SCORESEQ_API const char* scoreseq_ctx_last_error(const scoreseq_ctx* ctx);

/* Largest number of cells a single table layer may occupy. Resetting the
 * budget discards cached tables. */
SCORESEQ_API scoreseq_status scoreseq_ctx_set_cell_budget(scoreseq_ctx* ctx,
                                                          uint64_t cells);

/* Largest n scoreseq_enumerate accepts (default 14). */
SCORESEQ_API scoreseq_status scoreseq_ctx_set_enumeration_limit(scoreseq_ctx* ctx,
                                                                int limit);

/* Number of score sequences of length n in the class, as a malloc'd
 * decimal string. With SCORESEQ_METHOD_BOTH (or the default for the strong
 * kinds) the value is cross-checked between the direct tables and the
 * bootstrap recurrences; disagreement yields SCORESEQ_ERR_MISMATCH. */
SCORESEQ_API scoreseq_status scoreseq_count(scoreseq_ctx* ctx, scoreseq_kind kind,
                                            int n, scoreseq_method method,
                                            char** out_decimal);

SCORESEQ_API void scoreseq_string_free(char* s);

/* Classification of one sequence; scores must be nondecreasing and
 * nonnegative, otherwise SCORESEQ_ERR_INVALID. */
SCORESEQ_API scoreseq_status scoreseq_classify(scoreseq_ctx* ctx,
                                               const long long* scores,
                                               size_t count, unsigned* out_flags);

/* Visitor for scoreseq_enumerate; return nonzero to continue, zero to stop
 * early (the enumeration still reports SCORESEQ_OK). */
typedef int (*scoreseq_sequence_cb)(const long long* scores, size_t count,
                                    void* user_data);

/* All score sequences of length n in the class, lexicographically. */
SCORESEQ_API scoreseq_status scoreseq_enumerate(scoreseq_ctx* ctx, int n,
                                                scoreseq_kind kind,
                                                scoreseq_sequence_cb callback,
                                                void* user_data);

/* Ratio reports. Growth reports hold value(n)/value(n - stride); fraction
 * reports hold all(n)/strong(n). Rows with zero denominators are omitted. */
SCORESEQ_API scoreseq_status scoreseq_growth_report_new(scoreseq_ctx* ctx,
                                                        scoreseq_kind kind,
                                                        int n_max, int stride,
                                                        scoreseq_report** out_report);
SCORESEQ_API scoreseq_status scoreseq_fraction_report_new(scoreseq_ctx* ctx,
                                                          int n_max,
                                                          scoreseq_report** out_report);
SCORESEQ_API void scoreseq_report_free(scoreseq_report* report);

SCORESEQ_API int scoreseq_report_row_count(const scoreseq_report* report);

/* CSV rendering: header n,numerator,denominator,ratio; the ratio column is
 * correctly rounded to `digits` significant digits. */
SCORESEQ_API scoreseq_status scoreseq_report_csv(scoreseq_ctx* ctx,
                                                 const scoreseq_report* report,
                                                 int digits, char** out_csv);

/* Smallest row from which the report is strictly monotone in its expected
 * direction (increasing for growth ratios, decreasing for the fraction)
 * through the last row; -1 when the trend has not settled. */
SCORESEQ_API scoreseq_status scoreseq_report_settling_index(scoreseq_ctx* ctx,
                                                            const scoreseq_report* report,
                                                            int* out_index);

/* Number of adjacent-pair violations of the expected direction whose
 * earlier row is at least from_n. */
SCORESEQ_API scoreseq_status scoreseq_report_violations_after(scoreseq_ctx* ctx,
                                                              const scoreseq_report* report,
                                                              int from_n,
                                                              int* out_count);

#ifdef __cplusplus
}
#endif

#endif /* SCORESEQ_H */
