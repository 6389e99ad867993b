#ifndef LVB_H
#define LVB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LVB_BUILDING)
#    define LVB_API __declspec(dllexport)
#  else
#    define LVB_API __declspec(dllimport)
#  endif
#else
#  define LVB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lvb_status {
    LVB_OK = 0,
    LVB_ERR_INVALID_ARGUMENT = 1,
    LVB_ERR_OVERFLOW = 2,
    LVB_ERR_INTERNAL = 3,
    LVB_ERR_LIMIT = 4,
    LVB_ERR_NULL_POINTER = 5,
    LVB_ERR_OUT_OF_MEMORY = 6
} lvb_status;

typedef enum lvb_parity {
    LVB_PARITY_ODD = 0,
    LVB_PARITY_EVEN = 1
} lvb_parity;

/* Opaque handles. Every handle returned through an out parameter is
 * owned by the caller and released with the matching *_free function.
 * Pointers obtained from a handle stay valid until that handle is freed.
 */
typedef struct lvb_seq lvb_seq;
typedef struct lvb_diagram lvb_diagram;
typedef struct lvb_diagram_list lvb_diagram_list;
typedef struct lvb_stages lvb_stages;
typedef struct lvb_report lvb_report;

/* Message for the last failing call on the current thread. */
LVB_API const char * lvb_last_error(void);
LVB_API const char * lvb_status_name(lvb_status status);

LVB_API size_t lvb_seq_size(const lvb_seq * s);
LVB_API const int64_t * lvb_seq_data(const lvb_seq * s);
LVB_API void lvb_seq_free(lvb_seq * s);

/* A diagram is a list of rows. The same handle type carries plain lists
 * of sequences (clumps, enumerated partitions).
 */
LVB_API lvb_status lvb_diagram_from_rows(const int64_t * data, const size_t * row_lengths,
                                         size_t rows, lvb_diagram ** out);
LVB_API lvb_status lvb_diagram_parse(const char * text, lvb_diagram ** out);
LVB_API size_t lvb_diagram_rows(const lvb_diagram * d);
LVB_API size_t lvb_diagram_row_length(const lvb_diagram * d, size_t row);
LVB_API const int64_t * lvb_diagram_row(const lvb_diagram * d, size_t row);
/* One row per line, entries separated by single spaces. */
LVB_API const char * lvb_diagram_text(const lvb_diagram * d);
LVB_API void lvb_diagram_free(lvb_diagram * d);

LVB_API size_t lvb_diagram_list_size(const lvb_diagram_list * l);
LVB_API const lvb_diagram * lvb_diagram_list_get(const lvb_diagram_list * l, size_t k);
LVB_API void lvb_diagram_list_free(lvb_diagram_list * l);

/* Stage k of the iterative form. sigma is in one-line notation with
 * one-based values.
 */
LVB_API size_t lvb_stages_count(const lvb_stages * st);
LVB_API lvb_status lvb_stages_get(const lvb_stages * st, size_t k, const lvb_seq ** alpha,
                                  const lvb_seq ** nu, const lvb_seq ** sigma,
                                  const lvb_seq ** mu);
LVB_API void lvb_stages_free(lvb_stages * st);

LVB_API int lvb_report_ok(const lvb_report * r);
LVB_API const char * lvb_report_text(const lvb_report * r);
LVB_API const char * lvb_report_json(const lvb_report * r);
LVB_API void lvb_report_free(lvb_report * r);

/* Sequence arithmetic. */
LVB_API lvb_status lvb_conjugate(const int64_t * alpha, size_t len, lvb_seq ** out);
LVB_API lvb_status lvb_two_rho(const int64_t * alpha, size_t len, lvb_seq ** out);
LVB_API lvb_status lvb_is_dominant_wrt(const int64_t * nu, const int64_t * alpha, size_t len,
                                       int * out);

/* Forward maps. alpha must be a partition and nu dominant for it. */
LVB_API lvb_status lvb_alg_A(const int64_t * alpha, const int64_t * nu, size_t len, lvb_seq ** out);
LVB_API lvb_status lvb_alg_A_stages(const int64_t * alpha, const int64_t * nu, size_t len,
                                    lvb_stages ** out);
LVB_API lvb_status lvb_gamma_forward(const int64_t * alpha, const int64_t * nu, size_t len,
                                     lvb_seq ** out);
LVB_API lvb_status lvb_gamma_via_diagrams(const int64_t * alpha, const int64_t * nu, size_t len,
                                          lvb_seq ** out);
/* alpha may be in any order here; eps is -1 or +1. */
LVB_API lvb_status lvb_alg_W(const int64_t * alpha, const int64_t * nu, size_t len, int eps,
                             lvb_diagram ** x, lvb_diagram ** y);

/* Inverse map. lambda must be weakly decreasing and non-empty. */
LVB_API lvb_status lvb_clumps(const int64_t * lambda, size_t len, lvb_diagram ** out);
LVB_API lvb_status lvb_majuscule_extract(const int64_t * clump, size_t len, int eps,
                                         lvb_seq ** majuscule, lvb_seq ** remainder);
LVB_API lvb_status lvb_alg_B(const int64_t * lambda, size_t len, int eps, lvb_diagram ** out);
LVB_API lvb_status lvb_gamma_inverse(const int64_t * lambda, size_t len, lvb_seq ** alpha,
                                     lvb_seq ** nu);

/* Diagram maps. */
LVB_API lvb_status lvb_e_map(const lvb_diagram * x, lvb_diagram ** out);
LVB_API lvb_status lvb_e_inverse(const lvb_diagram * y, lvb_diagram ** out);
LVB_API lvb_status lvb_kappa(const lvb_diagram * x, lvb_seq ** out);
LVB_API lvb_status lvb_h_weight(const lvb_diagram * x, lvb_seq ** out);
LVB_API lvb_status lvb_eta(const lvb_diagram * y, lvb_seq ** out);
LVB_API lvb_status lvb_shape_class(const lvb_diagram * x, lvb_seq ** out);
LVB_API lvb_status lvb_is_distinguished(const lvb_diagram * x, lvb_parity parity, int * out);

/* Brute-force oracles. A negative window selects len(alpha) + alpha_1. */
LVB_API lvb_status lvb_min_norm_over_fillings(const int64_t * alpha, const int64_t * nu, size_t len,
                                              int64_t window, int64_t * out);
LVB_API lvb_status lvb_enumerate_fillings(const int64_t * alpha, const int64_t * nu, size_t len,
                                          int64_t window, lvb_diagram_list ** out);
LVB_API lvb_status lvb_distinguished_fillings(const int64_t * alpha, const int64_t * nu,
                                              size_t len, int64_t window,
                                              lvb_diagram_list ** out);
/* Row k of alphas and nus together form the k-th pair. */
LVB_API lvb_status lvb_enumerate_omega(int64_t n_max, int64_t entry_bound, lvb_diagram ** alphas,
                                       lvb_diagram ** nus);
LVB_API lvb_status lvb_roundtrip_sweep(int64_t n_max, int64_t entry_bound, lvb_report ** out);
LVB_API lvb_status lvb_oracle_sweep(int64_t n_max, int64_t entry_bound, int64_t window,
                                    lvb_report ** out);

#ifdef __cplusplus
}
#endif

#endif
