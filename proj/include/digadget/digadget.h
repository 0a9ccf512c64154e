/*
 * digadget C API.
 *
 * Opaque handles are created by dg_*_create / dg_*_build / dg_*_parse and
 * released with the matching dg_*_free. Every fallible call returns a
 * dg_status; on failure dg_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with dg_string_free.
 */
#ifndef DIGADGET_H
#define DIGADGET_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIGADGET_BUILDING_LIBRARY)
#define DG_API __attribute__((visibility("default")))
#else
#define DG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dg_status {
    DG_OK = 0,
    DG_ERR_INVALID_ARGUMENT = 1,
    DG_ERR_PARSE = 2,
    DG_ERR_MALFORMED_MESSAGE = 3,
    DG_ERR_CONTRACT = 4,
    DG_ERR_INTERNAL = 5
} dg_status;

typedef enum dg_property {
    DG_ACYCLICITY = 0,
    DG_STRONG_CONNECTIVITY = 1,
    DG_REACHABILITY_FROM_S = 2
} dg_property;

typedef enum dg_order { DG_ORDER_CANONICAL = 0, DG_ORDER_SHUFFLED = 1 } dg_order;

typedef enum dg_coins { DG_COINS_SHARED = 0, DG_COINS_PRIVATE = 1 } dg_coins;

typedef enum dg_algorithm_kind {
    DG_ALG_FULL_STORE = 0,
    DG_ALG_SAMPLED_INDEX = 1,
    DG_ALG_CONSTANT_TRUE = 2,
    DG_ALG_CONSTANT_FALSE = 3
} dg_algorithm_kind;

typedef struct dg_instance dg_instance;
typedef struct dg_algorithm dg_algorithm;
typedef struct dg_message dg_message;

typedef struct dg_instance_info {
    dg_property property;
    size_t m;
    size_t n;
    size_t i;
    size_t j;
    size_t k;
    size_t vertex_count;
    int has_s;
    uint32_t s;
    size_t e1_count;
    size_t e2_count;
} dg_instance_info;

typedef struct dg_verify_result {
    size_t cases;
    size_t oracle_mismatches;
    size_t protocol_mismatches;
} dg_verify_result;

typedef struct dg_success_estimate {
    size_t trials;
    size_t successes;
    double rate;
    double ci95_halfwidth;
    size_t memory_budget_bits;
    double epsilon_hat;
    size_t max_message_bits;
    size_t budget_violations;
} dg_success_estimate;

/* Errors and strings */
DG_API const char* dg_last_error(void);
DG_API const char* dg_status_string(dg_status status);
DG_API void dg_string_free(char* s);

/* "acyc", "sc", "reach" */
DG_API dg_status dg_property_parse(const char* name, dg_property* out);
DG_API const char* dg_property_name(dg_property property);

/* Instances */
DG_API dg_status dg_instance_build(dg_property property, const char* bits, size_t i, dg_instance** out);
DG_API dg_status dg_instance_build_random(dg_property property, size_t m, size_t i, uint64_t seed,
                                          dg_instance** out);
DG_API dg_status dg_instance_parse(const char* text, dg_instance** out);
DG_API dg_status dg_instance_render(const dg_instance* inst, dg_order order, uint64_t seed, char** out_text);
DG_API dg_status dg_instance_info_get(const dg_instance* inst, dg_instance_info* out);
/* Exact oracle on E1 u E2: acyclic / strongly connected / s reaches all. */
DG_API dg_status dg_instance_check(const dg_instance* inst, int* out_value);
/* Property value implied by the encoded bit x_i. */
DG_API dg_status dg_instance_ground_truth(const dg_instance* inst, int* out_value);
DG_API dg_status dg_instance_equal(const dg_instance* a, const dg_instance* b, int* out_equal);
DG_API void dg_instance_free(dg_instance* inst);

/* Exhaustive check of every (x, i) for 1 <= m <= 14. report_text may be NULL. */
DG_API dg_status dg_verify(dg_property property, size_t m, dg_order order, uint64_t order_seed,
                           dg_verify_result* out, char** report_text);

/* Streaming algorithms and the Alice -> Bob protocol */
DG_API dg_status dg_algorithm_create(dg_algorithm_kind kind, size_t budget_bits, dg_algorithm** out);
DG_API void dg_algorithm_free(dg_algorithm* alg);

DG_API dg_status dg_alice_message(dg_algorithm* alg, dg_property property, const char* bits,
                                  dg_order order, uint64_t order_seed, uint64_t coin_seed,
                                  dg_message** out);
DG_API dg_status dg_bob_decide(dg_algorithm* alg, dg_property property, const dg_message* message,
                               size_t m, size_t i, dg_order order, uint64_t order_seed,
                               uint64_t coin_seed, int* out_bit);

DG_API dg_status dg_message_from_bits(const char* bits, dg_message** out);
DG_API size_t dg_message_bits(const dg_message* message);
DG_API dg_status dg_message_to_string(const dg_message* message, char** out_text);
DG_API void dg_message_free(dg_message* message);

/* Monte Carlo estimate over uniform (x, i). */
DG_API dg_status dg_estimate_success(dg_algorithm_kind kind, dg_property property, size_t m,
                                     size_t budget_bits, size_t trials, uint64_t seed,
                                     dg_coins coins, dg_order order, dg_success_estimate* out);

/* Sampled-index sweep over budgets, rendered as CSV. count may be 0. */
DG_API dg_status dg_sweep_csv(dg_property property, size_t m, const size_t* budgets, size_t count,
                              size_t trials, uint64_t seed, dg_coins coins, dg_order order,
                              char** out_csv);

/* Undirected component count; pairs holds edge_count (u, v) pairs. */
DG_API dg_status dg_union_find_components(size_t n, const uint32_t* pairs, size_t edge_count,
                                          size_t* out);

#ifdef __cplusplus
}
#endif

#endif /* DIGADGET_H */
