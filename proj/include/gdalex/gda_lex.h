/* C interface to the global defensive alliance solver for products
 * G1 o G2 with G1, G2 paths or cycles. All handles are opaque; every call
 * returns a status code and, on failure, leaves a message retrievable with
 * gdalex_last_error() on the calling thread. */
#ifndef GDALEX_GDA_LEX_H
#define GDALEX_GDA_LEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GDALEX_API __declspec(dllexport)
#else
#define GDALEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdalex_status {
  GDALEX_OK = 0,
  GDALEX_ERR_INPUT = 1,        /* malformed argument */
  GDALEX_ERR_UNSUPPORTED = 2,  /* outside a method's size range */
  GDALEX_ERR_PRECONDITION = 3,
  GDALEX_ERR_INFEASIBLE = 4,
  GDALEX_ERR_IO = 5,
  GDALEX_ERR_INTERNAL = 6
} gdalex_status;

typedef enum gdalex_kind { GDALEX_PATH = 0, GDALEX_CYCLE = 1 } gdalex_kind;

typedef enum gdalex_method {
  GDALEX_METHOD_SUBSETS = 0,
  GDALEX_METHOD_COLUMN_DP = 1,
  GDALEX_METHOD_SEQUENCE_DP = 2,
  GDALEX_METHOD_CLOSED_FORM = 3
} gdalex_method;

/* gdalex_compute flags */
#define GDALEX_FLAG_THRESHOLDS 0x1u /* closed form via threshold dispatch */

typedef struct gdalex_result gdalex_result;
typedef struct gdalex_value_table gdalex_value_table;

/* `table` may be NULL; closed-form and sequence-dp then build one on demand. */
GDALEX_API gdalex_status gdalex_compute(gdalex_kind g1, int n, gdalex_kind g2, int m,
                                        gdalex_method method, unsigned flags,
                                        const gdalex_value_table* table,
                                        gdalex_result** out);

GDALEX_API long gdalex_result_value(const gdalex_result* r);
GDALEX_API gdalex_method gdalex_result_method(const gdalex_result* r);
/* Winning candidate family 1..4, or 0. */
GDALEX_API int gdalex_result_family(const gdalex_result* r);
GDALEX_API int gdalex_result_threshold_fallback(const gdalex_result* r);

/* Array getters copy up to `cap` entries into `buf` and return the full
 * length, or -1 when the result carries no such data. */
GDALEX_API int gdalex_result_sequence(const gdalex_result* r, int* buf, size_t cap);
GDALEX_API int gdalex_result_witness_profile(const gdalex_result* r, int* buf, size_t cap);
GDALEX_API int gdalex_result_witness_masks(const gdalex_result* r, uint64_t* buf, size_t cap);

GDALEX_API void gdalex_result_free(gdalex_result* r);

GDALEX_API gdalex_status gdalex_value_table_compute(gdalex_kind g2, int m, int k_max,
                                                    gdalex_value_table** out);
GDALEX_API gdalex_status gdalex_value_table_load(const char* path, gdalex_value_table** out);
GDALEX_API gdalex_status gdalex_value_table_save(const gdalex_value_table* t, const char* path);
/* internal != 0 selects the internal-section cost, otherwise external. */
GDALEX_API gdalex_status gdalex_value_table_get(const gdalex_value_table* t, int k, int internal,
                                                long* value);
GDALEX_API int gdalex_value_table_k_max(const gdalex_value_table* t);
GDALEX_API void gdalex_value_table_free(gdalex_value_table* t);

GDALEX_API const char* gdalex_last_error(void);
GDALEX_API const char* gdalex_version(void);
GDALEX_API const char* gdalex_method_name(gdalex_method method);

#ifdef __cplusplus
}
#endif

#endif
