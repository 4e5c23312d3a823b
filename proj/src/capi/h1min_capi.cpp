#include "h1min/h1min.h"

#include <cstring>
#include <filesystem>
#include <limits>
#include <memory>
#include <string>

#include "bounds.hpp"
#include "complex2.hpp"
#include "experiment.hpp"
#include "homology.hpp"
#include "minrep.hpp"
#include "nerve.hpp"
#include "spaces.hpp"
#include "unfold.hpp"

using namespace h1min;

namespace {

thread_local std::string g_last_error;

h1m_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::argument: return H1M_ERR_ARGUMENT;
    case ErrorCode::parse: return H1M_ERR_PARSE;
    case ErrorCode::not_a_cycle: return H1M_ERR_NOT_A_CYCLE;
    case ErrorCode::cap_exceeded: return H1M_ERR_CAP_EXCEEDED;
    case ErrorCode::io: return H1M_ERR_IO;
    case ErrorCode::uncovered: return H1M_ERR_UNCOVERED;
    case ErrorCode::face_lift: return H1M_ERR_FACE_LIFT;
    case ErrorCode::internal: return H1M_ERR_INTERNAL;
  }
  return H1M_ERR_INTERNAL;
}

template <typename Fn>
h1m_status guarded(Fn&& fn) {
  try {
    fn();
    return H1M_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return H1M_ERR_INTERNAL;
  }
}

h1m_status arg_error(const char* msg) {
  g_last_error = msg;
  return H1M_ERR_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

using ComplexPtr = std::shared_ptr<const Complex2>;

}  // namespace

struct h1m_complex {
  ComplexPtr k;
};
struct h1m_chain {
  ComplexPtr k;
  Chain1 c;
};
struct h1m_basis {
  ComplexPtr k;
  std::unique_ptr<HomologyBasis> basis;
};
struct h1m_profile {
  ComplexPtr k;
  MetricProfile p;
};
struct h1m_rep {
  ComplexPtr k;
  ReducedRep rep;
};
struct h1m_nerve {
  ComplexPtr k;
  std::unique_ptr<NerveData> nd;
};
struct h1m_tower {
  TowerSpec spec;
};
struct h1m_records {
  std::vector<ExperimentRecord> records;
};

extern "C" {

const char* h1m_version(void) { return "h1min 1.0.0"; }

const char* h1m_status_name(h1m_status s) {
  switch (s) {
    case H1M_OK: return "ok";
    case H1M_ERR_ARGUMENT: return "argument";
    case H1M_ERR_PARSE: return "parse";
    case H1M_ERR_NOT_A_CYCLE: return "not-a-cycle";
    case H1M_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case H1M_ERR_IO: return "io";
    case H1M_ERR_UNCOVERED: return "uncovered";
    case H1M_ERR_FACE_LIFT: return "face-lift";
    case H1M_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* h1m_last_error(void) { return g_last_error.c_str(); }

void h1m_string_free(char* s) { std::free(s); }

/* ---- complexes ------------------------------------------------------- */

h1m_status h1m_complex_read(const char* path, h1m_complex** out) {
  if (!path || !out) return arg_error("null argument");
  return guarded([&] {
    *out = new h1m_complex{std::make_shared<Complex2>(Complex2::read_file(path))};
  });
}

h1m_status h1m_complex_parse(const char* text, h1m_complex** out) {
  if (!text || !out) return arg_error("null argument");
  return guarded([&] {
    *out = new h1m_complex{std::make_shared<Complex2>(Complex2::parse(text))};
  });
}

h1m_status h1m_complex_build(uint32_t vertex_count, const uint32_t* edge_endpoints,
                             const double* edge_lengths, uint32_t edge_count,
                             const uint32_t* face_edges, const uint32_t* face_offsets,
                             uint32_t face_count, h1m_complex** out) {
  if (!out || (edge_count && (!edge_endpoints || !edge_lengths)) ||
      (face_count && (!face_edges || !face_offsets)))
    return arg_error("null argument");
  return guarded([&] {
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (uint32_t e = 0; e < edge_count; ++e)
      edges.push_back({edge_endpoints[2 * e], edge_endpoints[2 * e + 1], edge_lengths[e]});
    std::vector<std::vector<uint32_t>> faces;
    faces.reserve(face_count);
    for (uint32_t f = 0; f < face_count; ++f)
      faces.emplace_back(face_edges + face_offsets[f], face_edges + face_offsets[f + 1]);
    *out = new h1m_complex{
        std::make_shared<Complex2>(Complex2::build(vertex_count, std::move(edges), faces))};
  });
}

h1m_status h1m_complex_write(const h1m_complex* k, const char* path) {
  if (!k || !path) return arg_error("null argument");
  return guarded([&] { k->k->write_file(path); });
}

h1m_status h1m_complex_to_text(const h1m_complex* k, char** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(k->k->to_text()); });
}

void h1m_complex_free(h1m_complex* k) { delete k; }

uint32_t h1m_complex_vertex_count(const h1m_complex* k) { return k->k->vertex_count(); }
uint32_t h1m_complex_edge_count(const h1m_complex* k) { return k->k->edge_count(); }
uint32_t h1m_complex_face_count(const h1m_complex* k) { return k->k->face_count(); }
double h1m_complex_volume(const h1m_complex* k) { return k->k->volume(); }
int64_t h1m_complex_euler(const h1m_complex* k) { return k->k->euler_characteristic(); }

/* ---- generators ------------------------------------------------------ */

h1m_status h1m_gen_cycle(uint32_t n, double edge_length, h1m_complex** out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_complex{std::make_shared<Complex2>(gen_cycle(n, edge_length))}; });
}

h1m_status h1m_gen_wedge(uint32_t k, h1m_complex** out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_complex{std::make_shared<Complex2>(gen_wedge(k))}; });
}

h1m_status h1m_gen_surface(uint32_t genus, h1m_complex** out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_complex{std::make_shared<Complex2>(gen_surface(genus))}; });
}

h1m_status h1m_gen_product(const h1m_complex* g1, const h1m_complex* g2, h1m_complex** out) {
  if (!g1 || !g2 || !out) return arg_error("null argument");
  return guarded([&] {
    *out = new h1m_complex{std::make_shared<Complex2>(gen_product_complex(*g1->k, *g2->k))};
  });
}

/* ---- chains and homology --------------------------------------------- */

h1m_status h1m_chain_from_edges(const h1m_complex* k, const uint32_t* edges, uint32_t count,
                                h1m_chain** out) {
  if (!k || !out || (count && !edges)) return arg_error("null argument");
  return guarded([&] {
    std::vector<uint32_t> idx(edges, edges + count);
    *out = new h1m_chain{k->k, k->k->chain_from_edges(idx)};
  });
}

void h1m_chain_free(h1m_chain* c) { delete c; }

uint32_t h1m_chain_support_size(const h1m_chain* c) {
  return static_cast<uint32_t>(c->c.support_size());
}

uint32_t h1m_chain_support(const h1m_chain* c, uint32_t* out, uint32_t cap) {
  auto idx = c->c.edges();
  for (uint32_t i = 0; i < cap && i < idx.size(); ++i) out[i] = idx[i];
  return static_cast<uint32_t>(idx.size());
}

double h1m_chain_length(const h1m_chain* c) { return c->k->chain_length(c->c); }

h1m_status h1m_chain_is_cycle(const h1m_chain* c, int* out) {
  if (!c || !out) return arg_error("null argument");
  return guarded([&] { *out = c->k->is_cycle(c->c) ? 1 : 0; });
}

h1m_status h1m_betti(const h1m_complex* k, uint32_t out_betti[3]) {
  if (!k || !out_betti) return arg_error("null argument");
  return guarded([&] {
    Betti b = betti(*k->k);
    out_betti[0] = b.b0;
    out_betti[1] = b.b1;
    out_betti[2] = b.b2;
  });
}

h1m_status h1m_basis_compute(const h1m_complex* k, h1m_basis** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    *out = new h1m_basis{k->k, std::make_unique<HomologyBasis>(*k->k)};
  });
}

void h1m_basis_free(h1m_basis* b) { delete b; }

uint32_t h1m_basis_b1(const h1m_basis* b) { return b->basis->b1(); }
uint32_t h1m_basis_boundary_rank(const h1m_basis* b) { return b->basis->boundary_rank(); }

h1m_status h1m_basis_class_rep(const h1m_basis* b, uint32_t i, h1m_chain** out) {
  if (!b || !out) return arg_error("null argument");
  return guarded([&] {
    if (i >= b->basis->b1()) fail(ErrorCode::argument, "class index out of range");
    *out = new h1m_chain{b->k, b->basis->class_reps()[i]};
  });
}

h1m_status h1m_chain_from_class(const h1m_basis* b, const uint8_t* coords, uint32_t count,
                                h1m_chain** out) {
  if (!b || !out || (count && !coords)) return arg_error("null argument");
  return guarded([&] {
    if (count != b->basis->b1()) fail(ErrorCode::argument, "coordinate count does not match b1");
    BitVec v(count);
    for (uint32_t i = 0; i < count; ++i)
      if (coords[i]) v.set(i, true);
    *out = new h1m_chain{b->k, b->basis->chain_from_coordinates(v)};
  });
}

h1m_status h1m_class_coordinates(const h1m_basis* b, const h1m_chain* c, uint8_t* coords_out,
                                 uint32_t cap) {
  if (!b || !c || (cap && !coords_out)) return arg_error("null argument");
  return guarded([&] {
    if (cap < b->basis->b1()) fail(ErrorCode::argument, "coordinate buffer too small");
    BitVec v = b->basis->class_coordinates(c->c);
    for (uint32_t i = 0; i < b->basis->b1(); ++i) coords_out[i] = v.get(i) ? 1 : 0;
  });
}

h1m_status h1m_same_class(const h1m_complex* k, const h1m_chain* c1, const h1m_chain* c2,
                          int* out) {
  if (!k || !c1 || !c2 || !out) return arg_error("null argument");
  return guarded([&] { *out = same_class(*k->k, c1->c, c2->c) ? 1 : 0; });
}

/* ---- metric profiles -------------------------------------------------- */

h1m_status h1m_profile_compute(const h1m_complex* k, double horizon, double R, h1m_profile** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    auto p = new h1m_profile{k->k, injectivity_profile(*k->k, horizon, R)};
    p->p.complex = p->k.get();
    *out = p;
  });
}

h1m_status h1m_profile_with_threshold(const h1m_profile* p, double R, h1m_profile** out) {
  if (!p || !out) return arg_error("null argument");
  return guarded([&] {
    auto q = new h1m_profile{p->k, reprofile(p->p, R)};
    q->p.complex = q->k.get();
    *out = q;
  });
}

void h1m_profile_free(h1m_profile* p) { delete p; }

double h1m_profile_injrad(const h1m_profile* p, uint32_t v) {
  if (!p || v >= p->p.injrad.size()) return std::numeric_limits<double>::quiet_NaN();
  return p->p.injrad[v];
}

double h1m_profile_thin_fraction(const h1m_profile* p) {
  return bs_statistics(p->p).thin_fraction;
}

h1m_status h1m_r_length(const h1m_chain* c, const h1m_profile* p, double* out) {
  if (!c || !p || !out) return arg_error("null argument");
  return guarded([&] {
    if (c->k.get() != p->k.get()) fail(ErrorCode::argument, "chain/profile complex mismatch");
    *out = r_length(*c->k, c->c, p->p);
  });
}

/* ---- reduced representatives ------------------------------------------ */

void h1m_minimize_opts_init(h1m_minimize_opts* opts) {
  if (!opts) return;
  opts->exact_cap = 0;
  opts->max_iters = 0;
  opts->seed = 0;
  opts->t0 = -1.0;
  opts->cooling = 0.0;
  opts->stages = 0;
  opts->moves_per_temp = 0;
}

h1m_status h1m_minimize(const h1m_complex* k, const h1m_chain* c, h1m_method method,
                        const h1m_minimize_opts* opts, const h1m_profile* profile, h1m_rep** out) {
  if (!k || !c || !out) return arg_error("null argument");
  return guarded([&] {
    if (c->k.get() != k->k.get()) fail(ErrorCode::argument, "chain belongs to another complex");
    const MetricProfile* prof = nullptr;
    MetricProfile local;
    if (profile) {
      if (profile->k.get() != k->k.get())
        fail(ErrorCode::argument, "profile belongs to another complex");
      local = profile->p;
      local.complex = k->k.get();
      prof = &local;
    }
    h1m_minimize_opts defaults;
    h1m_minimize_opts_init(&defaults);
    if (!opts) opts = &defaults;

    ReducedRep rep;
    if (method == H1M_METHOD_EXACT) {
      uint32_t cap = opts->exact_cap ? opts->exact_cap : kDefaultExactCap;
      rep = exact_min_representative(*k->k, c->c, cap, prof);
    } else if (method == H1M_METHOD_DESCENT) {
      DescentParams dp;
      if (opts->max_iters) dp.max_iters = opts->max_iters;
      rep = local_search_reduce(*k->k, c->c, dp, prof);
    } else if (method == H1M_METHOD_ANNEAL) {
      AnnealParams ap;
      ap.seed = opts->seed;
      if (opts->t0 >= 0.0) ap.t0 = opts->t0;
      if (opts->cooling > 0.0) ap.cooling = opts->cooling;
      if (opts->stages) ap.stages = opts->stages;
      if (opts->moves_per_temp) ap.moves_per_temp = opts->moves_per_temp;
      rep = anneal_reduce(*k->k, c->c, ap, prof);
    } else {
      fail(ErrorCode::argument, "unknown minimization method");
    }
    *out = new h1m_rep{k->k, std::move(rep)};
  });
}

void h1m_rep_free(h1m_rep* r) { delete r; }

h1m_status h1m_rep_cycle(const h1m_rep* r, h1m_chain** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_chain{r->k, r->rep.cycle}; });
}

double h1m_rep_length(const h1m_rep* r) { return r->rep.length; }
double h1m_rep_r_length(const h1m_rep* r) { return r->rep.r_length; }
int h1m_rep_certificate(const h1m_rep* r) { return r->rep.certificate ? 1 : 0; }

h1m_method h1m_rep_method(const h1m_rep* r) {
  switch (r->rep.method) {
    case MinMethod::exact: return H1M_METHOD_EXACT;
    case MinMethod::descent: return H1M_METHOD_DESCENT;
    case MinMethod::anneal: return H1M_METHOD_ANNEAL;
  }
  return H1M_METHOD_EXACT;
}

uint64_t h1m_rep_accepted_moves(const h1m_rep* r) { return r->rep.accepted_moves; }

uint32_t h1m_rep_circuit_count(const h1m_rep* r) {
  return static_cast<uint32_t>(r->rep.circuits.size());
}

uint32_t h1m_rep_circuit(const h1m_rep* r, uint32_t i, uint32_t* out, uint32_t cap) {
  if (i >= r->rep.circuits.size()) return 0;
  const auto& c = r->rep.circuits[i];
  for (uint32_t j = 0; j < cap && j < c.size(); ++j) out[j] = c[j];
  return static_cast<uint32_t>(c.size());
}

h1m_status h1m_rep_format(const h1m_rep* r, char** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(r->rep.format(*r->k)); });
}

h1m_status h1m_local_minimality_check(const h1m_complex* k, const h1m_chain* c, int* out) {
  if (!k || !c || !out) return arg_error("null argument");
  return guarded([&] { *out = local_minimality_check(*k->k, c->c) ? 1 : 0; });
}

void h1m_rlength_opts_init(h1m_rlength_opts* opts) {
  if (!opts) return;
  opts->budget = 0;
  opts->seed = 0;
  opts->exact_cap = 0;
}

h1m_status h1m_normalized_r_length(const h1m_complex* k, const h1m_basis* b,
                                   const h1m_profile* p, const h1m_rlength_opts* opts,
                                   double* value_out, int* exact_out) {
  if (!k || !b || !p || !value_out || !exact_out) return arg_error("null argument");
  return guarded([&] {
    if (b->k.get() != k->k.get() || p->k.get() != k->k.get())
      fail(ErrorCode::argument, "basis/profile complex mismatch");
    RLengthParams params;
    if (opts) {
      if (opts->budget) params.budget = opts->budget;
      params.seed = opts->seed;
      if (opts->exact_cap) params.exact_cap = opts->exact_cap;
    }
    MetricProfile local = p->p;
    local.complex = k->k.get();
    auto r = normalized_r_length(*k->k, *b->basis, local, params);
    *value_out = r.value;
    *exact_out = r.exact ? 1 : 0;
  });
}

/* ---- nerve ------------------------------------------------------------ */

h1m_status h1m_nerve_build(const h1m_complex* k, double kappa, h1m_nerve** out) {
  if (!k || !out) return arg_error("null argument");
  return guarded([&] {
    auto n = new h1m_nerve{k->k, std::make_unique<NerveData>(build_nerve(*k->k, kappa))};
    n->nd->source = n->k.get();
    *out = n;
  });
}

void h1m_nerve_free(h1m_nerve* n) { delete n; }

uint32_t h1m_nerve_net_size(const h1m_nerve* n) { return static_cast<uint32_t>(n->nd->net.size()); }
int h1m_nerve_kappa_warning(const h1m_nerve* n) { return n->nd->warned_kappa ? 1 : 0; }
uint32_t h1m_nerve_max_degree(const h1m_nerve* n) { return n->nd->max_nerve_degree; }

h1m_status h1m_nerve_complex(const h1m_nerve* n, h1m_complex** out) {
  if (!n || !out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_complex{std::make_shared<Complex2>(n->nd->nerve)}; });
}

h1m_status h1m_nerve_push_cycle(const h1m_nerve* n, const h1m_chain* nerve_cycle,
                                h1m_chain** out) {
  if (!n || !nerve_cycle || !out) return arg_error("null argument");
  return guarded([&] {
    Chain1 pushed = push_cycle(*n->nd, nerve_cycle->c);
    *out = new h1m_chain{n->k, std::move(pushed)};
  });
}

h1m_status h1m_nerve_approximate(const h1m_nerve* n, const h1m_chain* source_cycle,
                                 h1m_chain** out) {
  if (!n || !source_cycle || !out) return arg_error("null argument");
  return guarded([&] {
    Chain1 approx = approximate_class(*n->nd, source_cycle->c);
    *out = new h1m_chain{std::make_shared<Complex2>(n->nd->nerve), std::move(approx)};
  });
}

h1m_status h1m_nerve_induced_map(const h1m_nerve* n, uint32_t* rank_out, int* surjective_out) {
  if (!n || !rank_out || !surjective_out) return arg_error("null argument");
  return guarded([&] {
    InducedMap m = induced_h1_map(*n->nd);
    *rank_out = m.rank;
    *surjective_out = m.surjective ? 1 : 0;
  });
}

h1m_status h1m_nerve_write(const h1m_nerve* n, const char* dir) {
  if (!n || !dir) return arg_error("null argument");
  return guarded([&] { write_nerve_files(*n->nd, dir); });
}

/* ---- counting and dimension bounds ------------------------------------ */

h1m_status h1m_counting_check(uint32_t p, uint32_t n, double delta, double* ratio_out,
                              int* holds_out, char** sum_decimal_out) {
  if (!ratio_out || !holds_out) return arg_error("null argument");
  return guarded([&] {
    CountingReport rep = counting_lemma_check(p, n, delta);
    *ratio_out = rep.ratio;
    *holds_out = rep.holds ? 1 : 0;
    if (sum_decimal_out) *sum_decimal_out = dup_string(rep.exact_sum.str());
  });
}

h1m_status h1m_dimension_bound(uint64_t n_edges, uint64_t m_max, double* out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = dimension_bound(n_edges, m_max); });
}

h1m_status h1m_verify_dimension_bound(const h1m_complex* k, const h1m_basis* b,
                                      uint32_t b1_cap, uint32_t exact_cap, int* holds_out,
                                      double* margin_out, uint32_t* m_max_out) {
  if (!k || !b || !holds_out || !margin_out) return arg_error("null argument");
  return guarded([&] {
    if (b->k.get() != k->k.get()) fail(ErrorCode::argument, "basis belongs to another complex");
    DimBoundCheck chk = verify_dimension_bound(*k->k, *b->basis,
                                               b1_cap ? b1_cap : 16,
                                               exact_cap ? exact_cap : kDefaultExactCap);
    if (!chk.ran) {
      g_last_error = chk.skip_reason;
      *holds_out = -1;
      *margin_out = 0.0;
      if (m_max_out) *m_max_out = 0;
      return;
    }
    *holds_out = chk.holds ? 1 : 0;
    *margin_out = chk.margin;
    if (m_max_out) *m_max_out = chk.m_max;
  });
}

/* ---- towers ------------------------------------------------------------ */

h1m_status h1m_tower_read(const char* path, h1m_tower** out) {
  if (!path || !out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_tower{read_tower_file(path)}; });
}

h1m_status h1m_tower_write(const h1m_tower* t, const char* tower_path, const char* base_path) {
  if (!t || !tower_path || !base_path) return arg_error("null argument");
  return guarded([&] {
    namespace fs = std::filesystem;
    t->spec.base.write_file(base_path);
    TowerSpec spec = t->spec;
    std::error_code ec;
    fs::path rel = fs::relative(base_path, fs::path(tower_path).parent_path(), ec);
    spec.base_ref = (ec || rel.empty()) ? fs::absolute(base_path).string() : rel.string();
    write_tower_file(spec, tower_path);
  });
}

h1m_status h1m_tower_product_spec(uint32_t a, uint32_t b, uint32_t kmax, h1m_tower** out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_tower{make_product_cycle_tower(a, b, kmax)}; });
}

h1m_status h1m_tower_wedge_spec(uint32_t loops, uint32_t levels, h1m_tower** out) {
  if (!out) return arg_error("null argument");
  return guarded([&] { *out = new h1m_tower{make_wedge_tower(loops, levels)}; });
}

void h1m_tower_free(h1m_tower* t) { delete t; }

uint32_t h1m_tower_level_count(const h1m_tower* t) {
  return static_cast<uint32_t>(t->spec.levels.size());
}

h1m_status h1m_tower_validate(const h1m_tower* t) {
  if (!t) return arg_error("null argument");
  return guarded([&] {
    for (const auto& level : t->spec.levels) gen_cover(t->spec.base, level.cover);
  });
}

void h1m_tower_opts_init(h1m_tower_opts* opts) {
  if (!opts) return;
  opts->seed = 0;
  opts->budget = 0;
  opts->exact_cap = 0;
  opts->horizon = 0.0;
}

h1m_status h1m_tower_run(const h1m_tower* t, const double* r_list, uint32_t r_count,
                         const h1m_tower_opts* opts, h1m_records** out) {
  if (!t || !r_list || !r_count || !out) return arg_error("null argument");
  return guarded([&] {
    TowerParams params;
    if (opts) {
      params.seed = opts->seed;
      params.rlength.seed = opts->seed;
      if (opts->budget) params.rlength.budget = opts->budget;
      if (opts->exact_cap) params.rlength.exact_cap = opts->exact_cap;
      if (opts->horizon > 0.0) params.horizon = opts->horizon;
    }
    std::vector<double> rs(r_list, r_list + r_count);
    *out = new h1m_records{run_tower_experiment(t->spec, rs, params)};
  });
}

void h1m_records_free(h1m_records* r) { delete r; }

uint32_t h1m_records_count(const h1m_records* r) {
  return static_cast<uint32_t>(r->records.size());
}

h1m_status h1m_records_field(const h1m_records* r, uint32_t i, const char* field, double* out) {
  if (!r || !field || !out) return arg_error("null argument");
  return guarded([&] {
    if (i >= r->records.size()) fail(ErrorCode::argument, "record index out of range");
    const auto& rec = r->records[i];
    std::string f(field);
    if (f == "volume") *out = rec.volume;
    else if (f == "b1") *out = rec.b1;
    else if (f == "b1_over_vol") *out = rec.b1_over_vol;
    else if (f == "rlength_norm") *out = rec.rlength_norm;
    else if (f == "rlength_exact") *out = rec.rlength_exact ? 1.0 : 0.0;
    else if (f == "thin_fraction") *out = rec.thin_fraction;
    else if (f == "R") *out = rec.R;
    else if (f == "runtime_ms") *out = static_cast<double>(rec.runtime_ms);
    else fail(ErrorCode::argument, "unknown record field '" + f + "'");
  });
}

h1m_status h1m_records_level(const h1m_records* r, uint32_t i, char** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] {
    if (i >= r->records.size()) fail(ErrorCode::argument, "record index out of range");
    *out = dup_string(r->records[i].level);
  });
}

h1m_status h1m_records_error(const h1m_records* r, uint32_t i, char** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] {
    if (i >= r->records.size()) fail(ErrorCode::argument, "record index out of range");
    *out = dup_string(r->records[i].error);
  });
}

h1m_status h1m_records_csv(const h1m_records* r, int include_timings, char** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(records_to_csv(r->records, include_timings != 0)); });
}

h1m_status h1m_records_json(const h1m_records* r, int include_timings, char** out) {
  if (!r || !out) return arg_error("null argument");
  return guarded([&] { *out = dup_string(records_to_json(r->records, include_timings != 0)); });
}

h1m_status h1m_records_emit(const h1m_records* r, const char* dir, int include_timings) {
  if (!r || !dir) return arg_error("null argument");
  return guarded([&] { emit_report(r->records, dir, include_timings != 0); });
}

} /* extern "C" */
