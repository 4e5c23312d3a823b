/*
 * h1min - mod-2 first homology of weighted 2-complexes, minimal-length
 * representative cycles, nerve transfer, covering towers.
 *
 * All functions return an h1m_status; pointer results come back through out
 * parameters and must be released with the matching *_free. Handles are
 * opaque. A failing call leaves a human-readable message in h1m_last_error()
 * (thread local).
 */
#ifndef H1MIN_H
#define H1MIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum h1m_status {
  H1M_OK = 0,
  H1M_ERR_ARGUMENT = 1,
  H1M_ERR_PARSE = 2,
  H1M_ERR_NOT_A_CYCLE = 3,
  H1M_ERR_CAP_EXCEEDED = 4,
  H1M_ERR_IO = 5,
  H1M_ERR_UNCOVERED = 6,
  H1M_ERR_FACE_LIFT = 7,
  H1M_ERR_INTERNAL = 8
} h1m_status;

typedef struct h1m_complex h1m_complex;
typedef struct h1m_chain h1m_chain;
typedef struct h1m_basis h1m_basis;
typedef struct h1m_profile h1m_profile;
typedef struct h1m_rep h1m_rep;
typedef struct h1m_nerve h1m_nerve;
typedef struct h1m_tower h1m_tower;
typedef struct h1m_records h1m_records;

const char* h1m_version(void);
const char* h1m_status_name(h1m_status s);
const char* h1m_last_error(void);

void h1m_string_free(char* s);

/* ---- complexes ------------------------------------------------------- */

h1m_status h1m_complex_read(const char* path, h1m_complex** out);
h1m_status h1m_complex_parse(const char* text, h1m_complex** out);
/* edges: 2*edge_count endpoint indices; faces: concatenated edge lists with
 * face_offsets of size face_count+1. */
h1m_status h1m_complex_build(uint32_t vertex_count, const uint32_t* edge_endpoints,
                             const double* edge_lengths, uint32_t edge_count,
                             const uint32_t* face_edges, const uint32_t* face_offsets,
                             uint32_t face_count, h1m_complex** out);
h1m_status h1m_complex_write(const h1m_complex* k, const char* path);
h1m_status h1m_complex_to_text(const h1m_complex* k, char** out);
void h1m_complex_free(h1m_complex* k);

uint32_t h1m_complex_vertex_count(const h1m_complex* k);
uint32_t h1m_complex_edge_count(const h1m_complex* k);
uint32_t h1m_complex_face_count(const h1m_complex* k);
double h1m_complex_volume(const h1m_complex* k);
int64_t h1m_complex_euler(const h1m_complex* k);

/* ---- generators ------------------------------------------------------ */

h1m_status h1m_gen_cycle(uint32_t n, double edge_length, h1m_complex** out);
h1m_status h1m_gen_wedge(uint32_t k, h1m_complex** out);
h1m_status h1m_gen_surface(uint32_t genus, h1m_complex** out);
h1m_status h1m_gen_product(const h1m_complex* g1, const h1m_complex* g2, h1m_complex** out);

/* ---- chains and homology --------------------------------------------- */

h1m_status h1m_chain_from_edges(const h1m_complex* k, const uint32_t* edges, uint32_t count,
                                h1m_chain** out);
void h1m_chain_free(h1m_chain* c);
uint32_t h1m_chain_support_size(const h1m_chain* c);
/* Fills up to cap sorted edge indices; returns the support size. */
uint32_t h1m_chain_support(const h1m_chain* c, uint32_t* out, uint32_t cap);
double h1m_chain_length(const h1m_chain* c);
h1m_status h1m_chain_is_cycle(const h1m_chain* c, int* out);

h1m_status h1m_betti(const h1m_complex* k, uint32_t out_betti[3]);

h1m_status h1m_basis_compute(const h1m_complex* k, h1m_basis** out);
void h1m_basis_free(h1m_basis* b);
uint32_t h1m_basis_b1(const h1m_basis* b);
uint32_t h1m_basis_boundary_rank(const h1m_basis* b);
h1m_status h1m_basis_class_rep(const h1m_basis* b, uint32_t i, h1m_chain** out);
/* coords: one 0/1 byte per basis class. */
h1m_status h1m_chain_from_class(const h1m_basis* b, const uint8_t* coords, uint32_t count,
                                h1m_chain** out);
h1m_status h1m_class_coordinates(const h1m_basis* b, const h1m_chain* c, uint8_t* coords_out,
                                 uint32_t cap);
h1m_status h1m_same_class(const h1m_complex* k, const h1m_chain* c1, const h1m_chain* c2,
                          int* out);

/* ---- metric profiles -------------------------------------------------- */

h1m_status h1m_profile_compute(const h1m_complex* k, double horizon, double R, h1m_profile** out);
h1m_status h1m_profile_with_threshold(const h1m_profile* p, double R, h1m_profile** out);
void h1m_profile_free(h1m_profile* p);
double h1m_profile_injrad(const h1m_profile* p, uint32_t v);
double h1m_profile_thin_fraction(const h1m_profile* p);
h1m_status h1m_r_length(const h1m_chain* c, const h1m_profile* p, double* out);

/* ---- reduced representatives ------------------------------------------ */

typedef enum h1m_method { H1M_METHOD_EXACT = 0, H1M_METHOD_DESCENT = 1, H1M_METHOD_ANNEAL = 2 } h1m_method;

typedef struct h1m_minimize_opts {
  uint32_t exact_cap;      /* 0 keeps the default (22) */
  uint64_t max_iters;      /* descent; 0 keeps the default */
  uint64_t seed;           /* anneal */
  double t0;               /* anneal start temperature; < 0 keeps the default */
  double cooling;          /* anneal; 0 keeps the default */
  uint32_t stages;         /* anneal; 0 keeps the default */
  uint32_t moves_per_temp; /* anneal; 0 keeps the default */
} h1m_minimize_opts;

void h1m_minimize_opts_init(h1m_minimize_opts* opts);

/* profile may be NULL; it only affects the reported r_length. */
h1m_status h1m_minimize(const h1m_complex* k, const h1m_chain* c, h1m_method method,
                        const h1m_minimize_opts* opts, const h1m_profile* profile, h1m_rep** out);
void h1m_rep_free(h1m_rep* r);
h1m_status h1m_rep_cycle(const h1m_rep* r, h1m_chain** out);
double h1m_rep_length(const h1m_rep* r);
double h1m_rep_r_length(const h1m_rep* r);
int h1m_rep_certificate(const h1m_rep* r);
h1m_method h1m_rep_method(const h1m_rep* r);
uint64_t h1m_rep_accepted_moves(const h1m_rep* r);
uint32_t h1m_rep_circuit_count(const h1m_rep* r);
/* Fills up to cap edge indices of circuit i in traversal order; returns its length. */
uint32_t h1m_rep_circuit(const h1m_rep* r, uint32_t i, uint32_t* out, uint32_t cap);
/* "rep <method> <length> <r_length> : chain <e...>" */
h1m_status h1m_rep_format(const h1m_rep* r, char** out);

h1m_status h1m_local_minimality_check(const h1m_complex* k, const h1m_chain* c, int* out);

typedef struct h1m_rlength_opts {
  uint64_t budget; /* 0 keeps the default (4096) */
  uint64_t seed;
  uint32_t exact_cap; /* 0 keeps the default */
} h1m_rlength_opts;

void h1m_rlength_opts_init(h1m_rlength_opts* opts);
h1m_status h1m_normalized_r_length(const h1m_complex* k, const h1m_basis* b,
                                   const h1m_profile* p, const h1m_rlength_opts* opts,
                                   double* value_out, int* exact_out);

/* ---- nerve ------------------------------------------------------------ */

h1m_status h1m_nerve_build(const h1m_complex* k, double kappa, h1m_nerve** out);
void h1m_nerve_free(h1m_nerve* n);
uint32_t h1m_nerve_net_size(const h1m_nerve* n);
int h1m_nerve_kappa_warning(const h1m_nerve* n);
uint32_t h1m_nerve_max_degree(const h1m_nerve* n);
h1m_status h1m_nerve_complex(const h1m_nerve* n, h1m_complex** out);
h1m_status h1m_nerve_push_cycle(const h1m_nerve* n, const h1m_chain* nerve_cycle,
                                h1m_chain** out);
h1m_status h1m_nerve_approximate(const h1m_nerve* n, const h1m_chain* source_cycle,
                                 h1m_chain** out);
h1m_status h1m_nerve_induced_map(const h1m_nerve* n, uint32_t* rank_out, int* surjective_out);
h1m_status h1m_nerve_write(const h1m_nerve* n, const char* dir);

/* ---- counting and dimension bounds ------------------------------------ */

h1m_status h1m_counting_check(uint32_t p, uint32_t n, double delta, double* ratio_out,
                              int* holds_out, char** sum_decimal_out);
h1m_status h1m_dimension_bound(uint64_t n_edges, uint64_t m_max, double* out);
/* holds_out: 1/0; margin_out: bound - b1; skipped runs report holds = -1 and
 * the reason in h1m_last_error(). */
h1m_status h1m_verify_dimension_bound(const h1m_complex* k, const h1m_basis* b,
                                      uint32_t b1_cap, uint32_t exact_cap, int* holds_out,
                                      double* margin_out, uint32_t* m_max_out);

/* ---- towers ------------------------------------------------------------ */

h1m_status h1m_tower_read(const char* path, h1m_tower** out);
/* Writes the tower file and its base complex next to it. */
h1m_status h1m_tower_write(const h1m_tower* t, const char* tower_path, const char* base_path);
h1m_status h1m_tower_product_spec(uint32_t a, uint32_t b, uint32_t kmax, h1m_tower** out);
h1m_status h1m_tower_wedge_spec(uint32_t loops, uint32_t levels, h1m_tower** out);
void h1m_tower_free(h1m_tower* t);
uint32_t h1m_tower_level_count(const h1m_tower* t);
/* Builds every level; reports the first face-lift or argument error. */
h1m_status h1m_tower_validate(const h1m_tower* t);

typedef struct h1m_tower_opts {
  uint64_t seed;
  uint64_t budget;    /* 0 keeps the default */
  uint32_t exact_cap; /* 0 keeps the default */
  double horizon;     /* <= 0 picks 2*max(R)+1 */
} h1m_tower_opts;

void h1m_tower_opts_init(h1m_tower_opts* opts);
h1m_status h1m_tower_run(const h1m_tower* t, const double* r_list, uint32_t r_count,
                         const h1m_tower_opts* opts, h1m_records** out);
void h1m_records_free(h1m_records* r);
uint32_t h1m_records_count(const h1m_records* r);
h1m_status h1m_records_field(const h1m_records* r, uint32_t i, const char* field, double* out);
h1m_status h1m_records_level(const h1m_records* r, uint32_t i, char** out);
h1m_status h1m_records_error(const h1m_records* r, uint32_t i, char** out);
h1m_status h1m_records_csv(const h1m_records* r, int include_timings, char** out);
h1m_status h1m_records_json(const h1m_records* r, int include_timings, char** out);
/* tower.csv, tower.json, tower.svg under dir. */
h1m_status h1m_records_emit(const h1m_records* r, const char* dir, int include_timings);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* H1MIN_H */
