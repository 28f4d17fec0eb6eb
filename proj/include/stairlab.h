/*
 * stairlab C API: exact staircase/blocking computations for Hirzebruch
 * surfaces behind an opaque-handle, error-code interface.
 *
 * Conventions:
 *  - every function returns a stairlab_rc; 0 is success;
 *  - output strings are heap-allocated UTF-8, released with
 *    stairlab_string_free;
 *  - rationals are passed as "p/q" strings, class tuples as
 *    "(d,m,p,q,t,+1)", labels as "[SYM:]N:ADDR" (e.g. "0:.021", "0:L"),
 *    symmetry words as "id", "S", "S^2R", ...
 */

#ifndef STAIRLAB_H
#define STAIRLAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    STAIRLAB_OK = 0,
    STAIRLAB_ERR_INVALID_ARGUMENT = 1,
    STAIRLAB_ERR_PARSE = 2,
    STAIRLAB_ERR_OUT_OF_DOMAIN = 3,
    STAIRLAB_ERR_DIVISION_BY_ZERO = 4,
    STAIRLAB_ERR_NEGATIVE_RADICAND = 5,
    STAIRLAB_ERR_MIXED_RADICANDS = 6,
    STAIRLAB_ERR_NOT_QUASI_PERFECT = 7,
    STAIRLAB_ERR_FORMAL_CLASS = 8,
    STAIRLAB_ERR_NONPOSITIVE_DENOMINATOR = 9,
    STAIRLAB_ERR_DEGENERATE = 10,
    STAIRLAB_ERR_MIXED_EPS = 11,
    STAIRLAB_ERR_UNORDERED_CENTERS = 12,
    STAIRLAB_ERR_INVALID_TRIPLE = 13,
    STAIRLAB_ERR_INVALID_LABEL = 14,
    STAIRLAB_ERR_NO_PREDECESSOR = 15,
    STAIRLAB_ERR_PARITY = 16,
    STAIRLAB_ERR_INVARIANT = 17,
    STAIRLAB_ERR_EMPTY_SELECTION = 18,
    STAIRLAB_ERR_NO_BLOCKED_POINT = 19,
    STAIRLAB_ERR_NOT_IN_TREE = 20,
    STAIRLAB_ERR_NOT_REPRESENTABLE = 21,
    STAIRLAB_ERR_VERIFY_FAILED = 22,
    STAIRLAB_ERR_NULL_POINTER = 23,
    STAIRLAB_ERR_INTERNAL = 24
} stairlab_rc;

const char* stairlab_version(void);
const char* stairlab_rc_name(int rc);
/* Message of the most recent error on this thread ("" when none). */
const char* stairlab_last_error(void);
void stairlab_string_free(char* s);

/* ---- exact quadratic surds -------------------------------------------- */

typedef struct stairlab_surd stairlab_surd;

int stairlab_surd_create(const char* a, const char* b, const char* c, const char* D,
                         stairlab_surd** out);
int stairlab_surd_from_rational(const char* pq, stairlab_surd** out);
int stairlab_surd_sqrt_rational(const char* pq, stairlab_surd** out);
/* op is one of '+', '-', '*', '/'. */
int stairlab_surd_arith(char op, const stairlab_surd* x, const stairlab_surd* y,
                        stairlab_surd** out);
/* *cmp_out is -1, 0 or 1. */
int stairlab_surd_cmp(const stairlab_surd* x, const stairlab_surd* y, int* cmp_out);
/* JSON {"a":...,"b":...,"c":...,"D":...,"approx":...}. */
int stairlab_surd_to_json(const stairlab_surd* s, int digits, char** json_out);
void stairlab_surd_free(stairlab_surd* s);

/* ---- class tuples ------------------------------------------------------ */

typedef struct stairlab_class stairlab_class;

int stairlab_class_from_center(const char* pq, stairlab_class** out);
int stairlab_class_parse(const char* tuple_text, stairlab_class** out);
int stairlab_class_apply_sym(const char* sym, const stairlab_class* c, stairlab_class** out);
int stairlab_class_to_text(const stairlab_class* c, char** out);
int stairlab_class_to_json(const stairlab_class* c, char** json_out);
void stairlab_class_free(stairlab_class* c);

/* acc(b) / acc_inv(z,eps) as surd JSON. */
int stairlab_acc(const char* b, int digits, char** json_out);
int stairlab_acc_inv(const char* z, int eps, int digits, char** json_out);

/* ---- mutation trees ---------------------------------------------------- */

typedef struct stairlab_tree stairlab_tree;

int stairlab_tree_build(long n, int level, const char* sym, stairlab_tree** out);
int stairlab_tree_node_count(const stairlab_tree* t, size_t* out);
int stairlab_tree_to_json(const stairlab_tree* t, int digits, char** json_out);
void stairlab_tree_free(stairlab_tree* t);

/* ---- command-level surface (used by the CLI) --------------------------- */

int stairlab_cmd_class_from_center(const char* pq, char** json_out);
int stairlab_cmd_apply_sym(const char* sym, const char* pq, char** json_out);
int stairlab_cmd_triple_at(const char* label, char** json_out);
int stairlab_cmd_triple_mutate(const char* side, const char* label, char** json_out);
int stairlab_cmd_staircase(const char* label, const char* side, int count, char** json_out);
int stairlab_cmd_blocked_z(const char* z, int eps, int level, char** json_out);
int stairlab_cmd_blocked_b(const char* b, int level, char** json_out);
/* bisect_tol NULL requests exact endpoints. */
int stairlab_cmd_interval(const char* label, const char* bisect_tol, char** json_out);
int stairlab_cmd_capacity(const char* b, const char* z_from, const char* z_to, int samples,
                          int pool_level, int include_special, const char* format, char** out);
int stairlab_cmd_tree(long n, int level, const char* sym, const char* format, char** out);
/* Returns STAIRLAB_ERR_VERIFY_FAILED when the suite fails; the JSON report
 * is produced either way. */
int stairlab_cmd_verify(const char* suite, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* STAIRLAB_H */
