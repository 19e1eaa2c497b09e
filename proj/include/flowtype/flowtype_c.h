/* C interface to the flowtype core: opaque handles, status codes, JSON text
 * in and out. Every returned string is heap-allocated and must be released
 * with ft_string_free; every handle with the matching _free function. On any
 * status other than FT_OK, ft_last_error() describes the failure (the message
 * is thread-local and valid until the next failing call on that thread). */

#ifndef FLOWTYPE_C_H
#define FLOWTYPE_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ft_status {
  FT_OK = 0,
  FT_ERROR_PARSE = 2,        /* malformed input or schema violation */
  FT_ERROR_PRECONDITION = 3, /* violated precondition or search guard */
  FT_ERROR_INTERNAL = 4
} ft_status;

const char* ft_last_error(void);
void ft_string_free(char* s);

typedef struct ft_group ft_group;
typedef struct ft_seminorm ft_seminorm;
typedef struct ft_flow ft_flow;
typedef struct ft_clopen ft_clopen;
typedef struct ft_structure ft_structure;

/* --- groups ------------------------------------------------------------- */
ft_status ft_group_parse(const char* json, ft_group** out);
void ft_group_free(ft_group* g);
ft_status ft_group_to_json(const ft_group* g, char** out);
/* Elements cross as JSON values or compact strings ("3", "abA", "-1", "1,-2"). */
ft_status ft_group_mul(const ft_group* g, const char* a, const char* b, char** out);
ft_status ft_group_inv(const ft_group* g, const char* a, char** out);
/* gens: JSON array or comma-separated element list. */
ft_status ft_group_ball(const ft_group* g, const char* gens, int radius, char** out);

/* --- seminorms ----------------------------------------------------------- */
ft_status ft_seminorm_parse(const ft_group* g, const char* json, ft_seminorm** out);
void ft_seminorm_free(ft_seminorm* s);
ft_status ft_seminorm_to_json(const ft_seminorm* s, char** out);
ft_status ft_seminorm_eval(const ft_seminorm* s, const char* elem, char** out_value);
/* domain: JSON array of elements. */
ft_status ft_seminorm_ball(const ft_seminorm* s, const char* c, const char* domain, char** out);
/* support: JSON array of elements; empty array means the whole finite group. */
ft_status ft_phi_eval(const ft_seminorm* sigma, const ft_seminorm* sigma_prime, const char* f_set,
                      const char* eps, const char* elem, const char* support, char** out_value);
ft_status ft_bk_check(const ft_seminorm* chain, char** out_report);
ft_status ft_fubini_witness(const ft_seminorm* sigma0, const ft_seminorm* sigma2,
                            const char* delta, char** out);
/* space: {"rho": [[...]]}; f: JSON array of rationals. */
ft_status ft_lipschitz_correct(const char* space, const char* f, const char* delta, char** out);

/* --- flows and clopen sets ----------------------------------------------- */
ft_status ft_flow_parse(const char* json, ft_flow** out);
void ft_flow_free(ft_flow* x);
ft_status ft_flow_to_json(const ft_flow* x, char** out);
/* The acting group (Z for subshifts), as a fresh handle owned by the caller. */
ft_status ft_flow_group(const ft_flow* x, ft_group** out);

ft_status ft_clopen_parse(const char* json, ft_clopen** out);
void ft_clopen_free(ft_clopen* c);
ft_status ft_clopen_to_json(const ft_clopen* c, char** out);
ft_status ft_clopen_translate(const ft_clopen* c, long long n, ft_clopen** out);
/* op: "union" | "intersect" | "minus" | "complement" (b ignored). */
ft_status ft_clopen_boolean(const char* op, int alphabet, const ft_clopen* a, const ft_clopen* b,
                            ft_clopen** out);

/* set/family arguments: clopen JSON objects for subshifts, point-index arrays
 * for finite flows; families are JSON arrays of those. */
ft_status ft_flow_is_empty(const ft_flow* x, const char* set_json, char** out);
ft_status ft_flow_is_cover(const ft_flow* x, const char* family_json, char** out);
ft_status ft_flow_r_u_disjoint(const ft_flow* x, const char* a, const char* b, const char* u_set,
                               char** out);
ft_status ft_flow_transitive(const ft_flow* x, char** out);
ft_status ft_flow_partial_sigma(const ft_flow* x, const ft_seminorm* s, int px, int py,
                                char** out_value);

/* --- weak types ----------------------------------------------------------- */
ft_status ft_structure_parse(const ft_group* g, const char* json, ft_structure** out);
void ft_structure_free(ft_structure* m);
ft_status ft_structure_to_json(const ft_structure* m, char** out);
ft_status ft_structure_canonicalize(const ft_structure* m, int force, ft_structure** out);

ft_status ft_full_structure(const ft_flow* x, const char* family_json, const char* f_set,
                            char** out);
ft_status ft_realizes(const ft_flow* x, const ft_structure* m, int w, char** out);
ft_status ft_enumerate_type(const ft_flow* x, const char* f_set, int n, int w,
                            const char* flow_id, int force, char** out);
ft_status ft_check_containment(const ft_flow* x, const ft_flow* y, const char* f_set, int n,
                               int wx, int wy, int force, char** out);
/* types: JSON array of weak-type documents. */
ft_status ft_type_meet(const ft_group* g, const char* types, char** out);

/* --- exact finite oracle --------------------------------------------------- */
ft_status ft_brute_type(const ft_flow* x, const char* f_set, int nmax, const char* flow_id,
                        int force, char** out);
ft_status ft_factor_exists(const ft_flow* source, const ft_flow* target, char** out);
/* pairs: JSON array of [flowX, flowY] documents. */
ft_status ft_verify_containment_theorem(const char* pairs, const char* f_set, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FLOWTYPE_C_H */
