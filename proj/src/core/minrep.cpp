#include "minrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace h1min {

namespace {

double improve_eps(double scale) { return 1e-9 * (1.0 + std::fabs(scale)); }

void require_chain(const Complex2& k, const Chain1& c, const char* who) {
  if (c.bits.size() != k.edge_count())
    fail(ErrorCode::argument, std::string(who) + ": chain does not match the complex");
}

void require_cycle(const Complex2& k, const Chain1& c, const char* who) {
  require_chain(k, c, who);
  if (!k.is_cycle(c)) fail(ErrorCode::not_a_cycle, std::string(who) + ": chain is not a cycle");
}

double weighted_value(const Chain1& c, const std::vector<double>& w) {
  double total = 0.0;
  for (auto e : c.bits.indices()) total += w[e];
  return total;
}

std::vector<double> length_weights(const Complex2& k) {
  std::vector<double> w(k.edge_count());
  for (std::uint32_t e = 0; e < k.edge_count(); ++e) w[e] = k.edge(e).length;
  return w;
}

std::vector<double> r_length_weights(const Complex2& k, const MetricProfile& p) {
  if (p.complex != &k) fail(ErrorCode::argument, "profile belongs to a different complex");
  std::vector<double> w(k.edge_count(), 0.0);
  for (std::uint32_t e = 0; e < k.edge_count(); ++e) {
    const Edge& ed = k.edge(e);
    if (p.thick[ed.u] && p.thick[ed.v]) w[e] = ed.length;
  }
  return w;
}

struct SearchResult {
  Chain1 chain;
  double value = 0.0;
  bool certificate = false;
  std::uint64_t accepted = 0;
};

// Change of the weighted objective if the face boundary is added to c.
double move_delta(const Chain1& c, const Chain1& face_boundary, const std::vector<double>& w) {
  double delta = 0.0;
  for (std::size_t k = 0; k < face_boundary.bits.word_count(); ++k) {
    std::uint64_t word = face_boundary.bits.word(k);
    while (word) {
      std::uint32_t e = static_cast<std::uint32_t>((k << 6) + __builtin_ctzll(word));
      word &= word - 1;
      delta += c.bits.get(e) ? -w[e] : w[e];
    }
  }
  return delta;
}

SearchResult exact_impl(const Complex2& k, const Chain1& c, const std::vector<double>& w,
                        std::uint32_t cap) {
  const auto& bform = k.boundary_form();
  const std::uint32_t r = static_cast<std::uint32_t>(bform.rank());
  if (r > cap)
    fail(ErrorCode::cap_exceeded, "rank d2 = " + std::to_string(r) + " exceeds exact cap " +
                                      std::to_string(cap));

  std::vector<std::vector<std::uint32_t>> moves;
  moves.reserve(r);
  for (auto f : bform.pivot_faces) moves.push_back(k.face_boundary(f).bits.indices());

  Chain1 cur = c;
  double cur_val = weighted_value(cur, w);
  Chain1 best = cur;
  double best_val = cur_val;

  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    std::uint32_t bit = static_cast<std::uint32_t>(__builtin_ctzll(i));
    for (auto e : moves[bit]) {
      cur.bits.flip(e);
      cur_val += cur.bits.get(e) ? w[e] : -w[e];
    }
    double eps = improve_eps(best_val);
    if (cur_val < best_val + eps) {
      // Near-best: settle with a fresh sum, then break ties lexicographically.
      double exact_val = weighted_value(cur, w);
      if (exact_val < best_val - eps ||
          (std::fabs(exact_val - best_val) <= eps && cur.bits.lex_less(best.bits))) {
        best = cur;
        best_val = exact_val;
      }
      cur_val = exact_val;
    }
  }
  return SearchResult{std::move(best), best_val, true, 0};
}

SearchResult descent_impl(const Complex2& k, const Chain1& c, const std::vector<double>& w,
                          const DescentParams& params) {
  const std::uint32_t F = k.face_count();
  Chain1 cur = c;
  double cur_val = weighted_value(cur, w);
  std::uint64_t accepted = 0;
  bool fixpoint = false;

  for (std::uint64_t iter = 0; iter < params.max_iters; ++iter) {
    double eps = improve_eps(cur_val);
    double best_delta = 0.0;
    std::uint32_t best_face = UINT32_MAX;
    for (std::uint32_t f = 0; f < F; ++f) {
      double delta = move_delta(cur, k.face_boundary(f), w);
      if (!(delta < -eps)) continue;  // same improvement test as the minimality check
      if (best_face == UINT32_MAX || delta < best_delta - eps) {
        best_delta = delta;
        best_face = f;
      } else if (params.tie_rule == TieRule::lex_support && delta <= best_delta + eps) {
        Chain1 cand = cur;
        cand ^= k.face_boundary(f);
        Chain1 incum = cur;
        incum ^= k.face_boundary(best_face);
        if (cand.bits.lex_less(incum.bits)) best_face = f;
      }
    }
    if (best_face == UINT32_MAX) {
      fixpoint = true;
      break;
    }
    cur ^= k.face_boundary(best_face);
    cur_val = weighted_value(cur, w);
    ++accepted;
  }
  return SearchResult{std::move(cur), cur_val, fixpoint, accepted};
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SearchResult anneal_impl(const Complex2& k, const Chain1& c, const std::vector<double>& w,
                         const AnnealParams& params) {
  const std::uint32_t F = k.face_count();
  DescentParams polish;

  double t0 = params.t0;
  if (t0 < 0.0) {
    double total = 0.0;
    for (std::uint32_t e = 0; e < k.edge_count(); ++e) total += k.edge(e).length;
    t0 = k.edge_count() ? total / k.edge_count() : 1.0;
  }
  std::uint32_t moves = params.moves_per_temp ? params.moves_per_temp
                                              : std::max<std::uint32_t>(200, 8 * F);

  std::mt19937_64 rng(params.seed);
  Chain1 cur = c;
  double cur_val = weighted_value(cur, w);
  Chain1 best = cur;
  double best_val = cur_val;
  std::uint64_t accepted = 0;

  double T = t0;
  for (std::uint32_t stage = 0; F > 0 && stage < params.stages; ++stage, T *= params.cooling) {
    if (!(T > 0.0)) continue;
    for (std::uint32_t m = 0; m < moves; ++m) {
      std::uint32_t f = static_cast<std::uint32_t>(rng() % F);
      double delta = move_delta(cur, k.face_boundary(f), w);
      bool take = delta <= improve_eps(cur_val);
      if (!take) take = uniform01(rng) < std::exp(-delta / T);
      if (!take) continue;
      cur ^= k.face_boundary(f);
      cur_val += delta;
      ++accepted;
      double eps = improve_eps(best_val);
      if (cur_val < best_val + eps) {
        double exact_val = weighted_value(cur, w);
        cur_val = exact_val;
        if (exact_val < best_val - eps ||
            (std::fabs(exact_val - best_val) <= eps && cur.bits.lex_less(best.bits))) {
          best = cur;
          best_val = exact_val;
        }
      }
    }
  }

  SearchResult polished = descent_impl(k, best, w, polish);
  polished.accepted += accepted;
  return polished;
}

ReducedRep make_rep(const Complex2& k, SearchResult res, MinMethod method,
                    const MetricProfile* profile) {
  ReducedRep rep;
  rep.cycle = std::move(res.chain);
  rep.length = k.chain_length(rep.cycle);
  rep.r_length = profile ? r_length(k, rep.cycle, *profile) : rep.length;
  rep.circuits = circuit_decompose(k, rep.cycle);
  rep.certificate = res.certificate;
  rep.method = method;
  rep.accepted_moves = res.accepted;
  return rep;
}

}  // namespace

const char* method_name(MinMethod m) {
  switch (m) {
    case MinMethod::exact: return "exact";
    case MinMethod::descent: return "descent";
    case MinMethod::anneal: return "anneal";
  }
  return "?";
}

double r_length(const Complex2& k, const Chain1& c, const MetricProfile& profile) {
  require_chain(k, c, "r_length");
  if (profile.complex != &k) fail(ErrorCode::argument, "profile belongs to a different complex");
  double total = 0.0;
  for (auto e : c.bits.indices()) {
    const Edge& ed = k.edge(e);
    if (profile.thick[ed.u] && profile.thick[ed.v]) total += ed.length;
  }
  return total;
}

std::string ReducedRep::format(const Complex2&) const {
  std::ostringstream out;
  char buf[40];
  out << "rep " << method_name(method);
  std::snprintf(buf, sizeof(buf), " %.17g", length);
  out << buf;
  std::snprintf(buf, sizeof(buf), " %.17g", r_length);
  out << buf << " : chain";
  for (auto e : cycle.bits.indices()) out << " " << e;
  return out.str();
}

ReducedRep exact_min_representative(const Complex2& k, const Chain1& c, std::uint32_t cap,
                                    const MetricProfile* profile) {
  require_cycle(k, c, "exact_min_representative");
  SearchResult res = exact_impl(k, c, length_weights(k), cap);
  return make_rep(k, std::move(res), MinMethod::exact, profile);
}

ReducedRep local_search_reduce(const Complex2& k, const Chain1& c, const DescentParams& params,
                               const MetricProfile* profile) {
  require_cycle(k, c, "local_search_reduce");
  SearchResult res = descent_impl(k, c, length_weights(k), params);
  return make_rep(k, std::move(res), MinMethod::descent, profile);
}

ReducedRep anneal_reduce(const Complex2& k, const Chain1& c, const AnnealParams& params,
                         const MetricProfile* profile) {
  require_cycle(k, c, "anneal_reduce");
  SearchResult res = anneal_impl(k, c, length_weights(k), params);
  return make_rep(k, std::move(res), MinMethod::anneal, profile);
}

std::vector<std::vector<std::uint32_t>> circuit_decompose(const Complex2& k, const Chain1& c) {
  require_cycle(k, c, "circuit_decompose");
  auto support = c.bits.indices();
  // Ends of support edges at each vertex, edge indices ascending; loops list
  // their edge twice at the same vertex.
  std::vector<std::vector<std::uint32_t>> ends(k.vertex_count());
  for (auto e : support) {
    ends[k.edge(e).u].push_back(e);
    ends[k.edge(e).v].push_back(e);
  }
  std::vector<bool> used(k.edge_count(), false);
  std::vector<std::size_t> next_end(k.vertex_count(), 0);

  auto take_lowest_at = [&](std::uint32_t v) -> std::uint32_t {
    auto& list = ends[v];
    std::size_t& i = next_end[v];
    while (i < list.size() && used[list[i]]) ++i;
    return i < list.size() ? list[i] : UINT32_MAX;
  };

  std::vector<std::vector<std::uint32_t>> circuits;
  for (auto e0 : support) {
    if (used[e0]) continue;
    std::vector<std::uint32_t> walk{e0};
    used[e0] = true;
    const Edge& first = k.edge(e0);
    std::uint32_t start = first.u;
    std::uint32_t cur = first.is_loop() ? first.u : first.v;
    while (cur != start) {
      std::uint32_t e = take_lowest_at(cur);
      if (e == UINT32_MAX)
        fail(ErrorCode::internal, "circuit_decompose: stuck at an odd-degree vertex");
      used[e] = true;
      walk.push_back(e);
      const Edge& ed = k.edge(e);
      if (!ed.is_loop()) cur = (cur == ed.u) ? ed.v : ed.u;
    }
    circuits.push_back(std::move(walk));
  }
  return circuits;
}

bool local_minimality_check(const Complex2& k, const Chain1& c) {
  require_cycle(k, c, "local_minimality_check");
  auto w = length_weights(k);
  double len = weighted_value(c, w);
  double eps = improve_eps(len);
  for (std::uint32_t f = 0; f < k.face_count(); ++f)
    if (move_delta(c, k.face_boundary(f), w) < -eps) return false;
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::vector<BitVec> class_coordinate_set(std::uint32_t b1, const RLengthParams& params,
                                         bool* full_out) {
  std::vector<BitVec> coords;
  bool full = b1 < 63 && (std::uint64_t{1} << b1) <= params.budget;
  *full_out = full;
  if (full) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << b1); ++m) {
      BitVec v(b1);
      for (std::uint32_t i = 0; i < b1; ++i)
        if ((m >> i) & 1) v.set(i, true);
      coords.push_back(std::move(v));
    }
    return coords;
  }
  for (std::uint32_t i = 0; i < b1; ++i) {
    BitVec v(b1);
    v.set(i, true);
    coords.push_back(std::move(v));
  }
  std::mt19937_64 rng(splitmix64(params.seed ^ 0xc1a55e5ull));
  for (std::uint64_t s = 0; s < params.budget; ++s) {
    BitVec v(b1);
    bool nonzero = false;
    for (std::uint32_t i = 0; i < b1; i += 64) {
      std::uint64_t word = rng();
      for (std::uint32_t j = 0; j < 64 && i + j < b1; ++j)
        if ((word >> j) & 1) {
          v.set(i + j, true);
          nonzero = true;
        }
    }
    if (nonzero) coords.push_back(std::move(v));
  }
  return coords;
}

}  // namespace

std::vector<NormalizedRLength> normalized_r_length_sweep(const Complex2& k,
                                                         const HomologyBasis& basis,
                                                         const std::vector<MetricProfile>& profiles,
                                                         const RLengthParams& params) {
  if (profiles.empty()) return {};
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (profiles[i].complex != &k) fail(ErrorCode::argument, "profile/complex mismatch");
    if (i && !(profiles[i].R >= profiles[i - 1].R))
      fail(ErrorCode::argument, "profiles must be sorted by ascending R");
  }
  const double vol = k.volume();
  std::vector<NormalizedRLength> out(profiles.size());

  const std::uint32_t b1 = basis.b1();
  if (b1 == 0 || vol <= 0.0) {
    for (auto& r : out) r = {0.0, true};
    return out;
  }

  bool full = false;
  auto coord_set = class_coordinate_set(b1, params, &full);
  const bool use_exact = k.boundary_form().rank() <= params.exact_cap;

  std::vector<std::vector<double>> weights;
  weights.reserve(profiles.size());
  for (const auto& p : profiles) weights.push_back(r_length_weights(k, p));
  std::vector<bool> all_zero(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i)
    all_zero[i] = std::all_of(weights[i].begin(), weights[i].end(),
                              [](double x) { return x == 0.0; });

  std::vector<double> sup(profiles.size(), 0.0);
  for (std::size_t ci = 0; ci < coord_set.size(); ++ci) {
    Chain1 cur = basis.chain_from_coordinates(coord_set[ci]);
    for (std::size_t ri = 0; ri < profiles.size(); ++ri) {
      double value;
      if (all_zero[ri]) {
        value = 0.0;
      } else if (use_exact) {
        SearchResult res = exact_impl(k, cur, weights[ri], params.exact_cap);
        value = res.value;
        cur = std::move(res.chain);
      } else {
        AnnealParams ap = params.anneal;
        ap.seed = splitmix64(params.seed ^ splitmix64((ci << 20) ^ ri ^ 0xab5e11ull));
        SearchResult res = anneal_impl(k, cur, weights[ri], ap);
        value = res.value;
        cur = std::move(res.chain);
      }
      if (value > sup[ri]) sup[ri] = value;
    }
  }
  for (std::size_t ri = 0; ri < profiles.size(); ++ri)
    out[ri] = {sup[ri] / vol, full && (use_exact || all_zero[ri])};
  return out;
}

NormalizedRLength normalized_r_length(const Complex2& k, const HomologyBasis& basis,
                                      const MetricProfile& profile, const RLengthParams& params) {
  return normalized_r_length_sweep(k, basis, {profile}, params).front();
}

}  // namespace h1min
