#include "spaces.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace h1min {

Complex2 gen_cycle(std::uint32_t n, double edge_length) {
  if (n < 3) fail(ErrorCode::argument, "gen_cycle: need n >= 3");
  if (!(edge_length > 0.0)) fail(ErrorCode::argument, "gen_cycle: edge length must be positive");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, edge_length});
  return Complex2::build(n, std::move(edges), {});
}

Complex2 gen_wedge(std::uint32_t k) {
  if (k < 1) fail(ErrorCode::argument, "gen_wedge: need k >= 1");
  std::vector<Edge> edges(k, Edge{0, 0, 1.0});
  return Complex2::build(1, std::move(edges), {});
}

Complex2 subdivide(const Complex2& k) {
  const std::uint32_t V = k.vertex_count(), E = k.edge_count(), F = k.face_count();
  // New vertex ids: originals, then edge midpoints, then face centers.
  auto mid = [&](std::uint32_t e) { return V + e; };
  auto center = [&](std::uint32_t f) { return V + E + f; };

  std::vector<Edge> edges;
  // Halves of original edges: ids 2e (u side) and 2e+1 (v side).
  for (std::uint32_t e = 0; e < E; ++e) {
    edges.push_back({k.edge(e).u, mid(e), 1.0});
    edges.push_back({mid(e), k.edge(e).v, 1.0});
  }

  std::vector<std::vector<WalkStep>> walks;
  for (std::uint32_t f = 0; f < F; ++f) {
    const auto& walk = k.face_walk(f);
    const std::size_t n = walk.size();
    // Spokes for this face: one per walk position to the corner at that
    // position, one per position to the midpoint of the traversed edge.
    std::uint32_t corner_spoke0 = static_cast<std::uint32_t>(edges.size());
    std::uint32_t cur = k.face_walk_start(f);
    for (std::size_t j = 0; j < n; ++j) {
      edges.push_back({center(f), cur, 1.0});
      const Edge& ed = k.edge(walk[j].edge);
      cur = walk[j].reversed ? ed.u : ed.v;
    }
    std::uint32_t mid_spoke0 = static_cast<std::uint32_t>(edges.size());
    for (std::size_t j = 0; j < n; ++j) edges.push_back({center(f), mid(walk[j].edge), 1.0});

    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t e = walk[j].edge;
      // Half-edge from the corner entered at position j to mid(e), and from
      // mid(e) onward to the next corner, respecting the walk direction.
      std::uint32_t first_half = walk[j].reversed ? 2 * e + 1 : 2 * e;
      std::uint32_t second_half = walk[j].reversed ? 2 * e : 2 * e + 1;
      std::uint32_t cs_j = corner_spoke0 + static_cast<std::uint32_t>(j);
      std::uint32_t cs_next = corner_spoke0 + static_cast<std::uint32_t>((j + 1) % n);
      std::uint32_t ms_j = mid_spoke0 + static_cast<std::uint32_t>(j);
      // Triangle A: center -> corner_j -> mid -> center.
      walks.push_back({{cs_j, false},
                       {first_half, walk[j].reversed},
                       {ms_j, true}});
      // Triangle B: center -> mid -> corner_{j+1} -> center.
      walks.push_back({{ms_j, false},
                       {second_half, walk[j].reversed},
                       {cs_next, true}});
    }
  }
  return Complex2::build_with_walks(V + E + F, std::move(edges), std::move(walks));
}

Complex2 gen_surface(std::uint32_t genus) {
  if (genus == 0) {
    std::vector<Edge> edges = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0},
                               {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}};
    std::vector<std::vector<std::uint32_t>> faces = {
        {0, 3, 1}, {0, 4, 2}, {1, 5, 2}, {3, 5, 4}};
    return Complex2::build(4, std::move(edges), faces);
  }
  // One vertex, 2g loops, a single 4g-gon attached along a1 b1 a1' b1' ...
  std::vector<Edge> edges(2 * genus, Edge{0, 0, 1.0});
  std::vector<WalkStep> word;
  for (std::uint32_t i = 0; i < genus; ++i) {
    std::uint32_t a = 2 * i, b = 2 * i + 1;
    word.push_back({a, false});
    word.push_back({b, false});
    word.push_back({a, true});
    word.push_back({b, true});
  }
  Complex2 polygon = Complex2::build_with_walks(1, std::move(edges), {word});
  return subdivide(subdivide(subdivide(polygon)));
}

Complex2 gen_product_complex(const Complex2& g1, const Complex2& g2) {
  if (g1.face_count() || g2.face_count())
    fail(ErrorCode::argument, "gen_product_complex: factors must be graphs");
  const std::uint32_t V1 = g1.vertex_count(), E1 = g1.edge_count();
  const std::uint32_t V2 = g2.vertex_count(), E2 = g2.edge_count();
  auto vid = [&](std::uint32_t i1, std::uint32_t i2) { return i1 * V2 + i2; };
  auto a_edge = [&](std::uint32_t e1, std::uint32_t w2) { return e1 * V2 + w2; };
  auto b_edge = [&](std::uint32_t w1, std::uint32_t e2) { return E1 * V2 + w1 * E2 + e2; };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(E1) * V2 + static_cast<std::size_t>(V1) * E2);
  for (std::uint32_t e1 = 0; e1 < E1; ++e1)
    for (std::uint32_t w2 = 0; w2 < V2; ++w2)
      edges.push_back({vid(g1.edge(e1).u, w2), vid(g1.edge(e1).v, w2), g1.edge(e1).length});
  for (std::uint32_t w1 = 0; w1 < V1; ++w1)
    for (std::uint32_t e2 = 0; e2 < E2; ++e2)
      edges.push_back({vid(w1, g2.edge(e2).u), vid(w1, g2.edge(e2).v), g2.edge(e2).length});

  std::vector<std::vector<WalkStep>> walks;
  walks.reserve(static_cast<std::size_t>(E1) * E2);
  for (std::uint32_t e1 = 0; e1 < E1; ++e1) {
    const Edge& d1 = g1.edge(e1);
    for (std::uint32_t e2 = 0; e2 < E2; ++e2) {
      const Edge& d2 = g2.edge(e2);
      // (u1,u2) -> (v1,u2) -> (v1,v2) -> (u1,v2) -> (u1,u2)
      walks.push_back({{a_edge(e1, d2.u), false},
                       {b_edge(d1.v, e2), false},
                       {a_edge(e1, d2.v), true},
                       {b_edge(d1.u, e2), true}});
    }
  }
  return Complex2::build_with_walks(V1 * V2, std::move(edges), std::move(walks));
}

Perm Perm::identity(std::uint32_t d) {
  Perm p;
  p.img.resize(d);
  std::iota(p.img.begin(), p.img.end(), 0u);
  return p;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < img.size(); ++i)
    if (img[i] != i) return false;
  return true;
}

std::uint32_t Perm::apply_inv(std::uint32_t x) const {
  for (std::uint32_t i = 0; i < img.size(); ++i)
    if (img[i] == x) return i;
  fail(ErrorCode::internal, "apply_inv: not a permutation");
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (std::uint32_t i = 0; i < img.size(); ++i) p.img[img[i]] = i;
  return p;
}

ForestSplit spanning_forest(const Complex2& k) {
  const std::uint32_t V = k.vertex_count();
  std::vector<bool> visited(V, false);
  std::vector<bool> in_tree(k.edge_count(), false);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t root = 0; root < V; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    queue.assign(1, root);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (const auto& inc : k.incidences(queue[h]))
        if (!visited[inc.other]) {
          visited[inc.other] = true;
          in_tree[inc.edge] = true;
          queue.push_back(inc.other);
        }
  }
  ForestSplit out;
  for (std::uint32_t e = 0; e < k.edge_count(); ++e)
    (in_tree[e] ? out.tree_edges : out.complement_edges).push_back(e);
  return out;
}

namespace {

// Edge permutations for every base edge: identity on the forest, sigma on the
// complement. Validates spec shape.
std::vector<Perm> edge_permutations(const Complex2& base, const CoverSpec& spec) {
  auto split = spanning_forest(base);
  if (spec.sigma.size() != split.complement_edges.size())
    fail(ErrorCode::argument,
         "cover spec has " + std::to_string(spec.sigma.size()) + " permutations, expected " +
             std::to_string(split.complement_edges.size()) + " (one per non-tree edge)");
  std::vector<Perm> sigma(base.edge_count(), Perm::identity(spec.degree));
  for (std::size_t i = 0; i < spec.sigma.size(); ++i) {
    if (spec.sigma[i].degree() != spec.degree)
      fail(ErrorCode::argument, "permutation " + std::to_string(i) + " has wrong degree");
    std::vector<bool> seen(spec.degree, false);
    for (auto x : spec.sigma[i].img) {
      if (x >= spec.degree || seen[x])
        fail(ErrorCode::argument, "permutation " + std::to_string(i) + " is not a bijection");
      seen[x] = true;
    }
    sigma[split.complement_edges[i]] = spec.sigma[i];
  }
  return sigma;
}

}  // namespace

Perm face_word_permutation(const Complex2& base, const CoverSpec& spec, std::uint32_t face) {
  auto sigma = edge_permutations(base, spec);
  Perm word = Perm::identity(spec.degree);
  for (const auto& s : base.face_walk(face)) {
    Perm next;
    next.img.resize(spec.degree);
    for (std::uint32_t x = 0; x < spec.degree; ++x)
      next.img[x] = s.reversed ? sigma[s.edge].apply_inv(word.img[x]) : sigma[s.edge].apply(word.img[x]);
    word = std::move(next);
  }
  return word;
}

Cover gen_cover(const Complex2& base, const CoverSpec& spec) {
  if (spec.degree < 1) fail(ErrorCode::argument, "cover degree must be >= 1");
  const std::uint32_t d = spec.degree;
  auto sigma = edge_permutations(base, spec);
  std::vector<Perm> sigma_inv;
  sigma_inv.reserve(sigma.size());
  for (const auto& p : sigma) sigma_inv.push_back(p.inverse());

  const std::uint32_t V = base.vertex_count(), E = base.edge_count(), F = base.face_count();
  auto cv = [&](std::uint32_t v, std::uint32_t s) { return v * d + s; };
  auto ce = [&](std::uint32_t e, std::uint32_t s) { return e * d + s; };

  std::vector<Edge> edges(static_cast<std::size_t>(E) * d);
  for (std::uint32_t e = 0; e < E; ++e)
    for (std::uint32_t s = 0; s < d; ++s)
      edges[ce(e, s)] = {cv(base.edge(e).u, s), cv(base.edge(e).v, sigma[e].apply(s)),
                         base.edge(e).length};

  std::vector<std::vector<WalkStep>> walks;
  walks.reserve(static_cast<std::size_t>(F) * d);
  for (std::uint32_t f = 0; f < F; ++f) {
    // The boundary word must act trivially for the 2-cell to lift.
    Perm word = face_word_permutation(base, spec, f);
    if (!word.is_identity())
      fail(ErrorCode::face_lift,
           "face " + std::to_string(f) + " boundary word is not the identity permutation");
    for (std::uint32_t s = 0; s < d; ++s) {
      std::vector<WalkStep> lifted;
      std::uint32_t sheet = s;
      for (const auto& step : base.face_walk(f)) {
        if (!step.reversed) {
          lifted.push_back({ce(step.edge, sheet), false});
          sheet = sigma[step.edge].apply(sheet);
        } else {
          sheet = sigma_inv[step.edge].apply(sheet);
          lifted.push_back({ce(step.edge, sheet), true});
        }
      }
      walks.push_back(std::move(lifted));
    }
  }

  Cover out;
  out.complex = Complex2::build_with_walks(V * d, std::move(edges), std::move(walks));
  out.degree = d;
  out.vertex_base.resize(static_cast<std::size_t>(V) * d);
  out.vertex_sheet.resize(static_cast<std::size_t>(V) * d);
  for (std::uint32_t v = 0; v < V; ++v)
    for (std::uint32_t s = 0; s < d; ++s) {
      out.vertex_base[cv(v, s)] = v;
      out.vertex_sheet[cv(v, s)] = s;
    }
  out.edge_base.resize(static_cast<std::size_t>(E) * d);
  for (std::uint32_t e = 0; e < E; ++e)
    for (std::uint32_t s = 0; s < d; ++s) out.edge_base[ce(e, s)] = e;
  out.face_base.resize(static_cast<std::size_t>(F) * d);
  for (std::uint32_t f = 0; f < F; ++f)
    for (std::uint32_t s = 0; s < d; ++s) out.face_base[f * d + s] = f;

  // Connectivity of the built complex (transitive action when the base is
  // connected).
  std::vector<std::uint32_t> comp(out.complex.vertex_count(), UINT32_MAX);
  std::uint32_t ncomp = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t v = 0; v < out.complex.vertex_count(); ++v) {
    if (comp[v] != UINT32_MAX) continue;
    comp[v] = ncomp;
    stack.assign(1, v);
    while (!stack.empty()) {
      std::uint32_t x = stack.back();
      stack.pop_back();
      for (const auto& inc : out.complex.incidences(x))
        if (comp[inc.other] == UINT32_MAX) {
          comp[inc.other] = ncomp;
          stack.push_back(inc.other);
        }
    }
    ++ncomp;
  }
  out.connected = (ncomp <= 1);
  return out;
}

namespace {

// Net winding counters of the tree path from the forest root to each vertex:
// +1 per forward type-A step for the first factor, +1 per forward type-B step
// for the second. Used to assign deck translations to complement edges of a
// product of two cycles.
struct ProductWinding {
  std::vector<std::int64_t> c1, c2;
};

ProductWinding tree_windings(const Complex2& product, std::uint32_t a_edge_count) {
  const std::uint32_t V = product.vertex_count();
  ProductWinding w{std::vector<std::int64_t>(V, 0), std::vector<std::int64_t>(V, 0)};
  auto split = spanning_forest(product);
  std::vector<bool> in_tree(product.edge_count(), false);
  for (auto e : split.tree_edges) in_tree[e] = true;
  std::vector<bool> visited(V, false);
  std::vector<std::uint32_t> queue{0};
  visited[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    std::uint32_t v = queue[h];
    for (const auto& inc : product.incidences(v)) {
      if (!in_tree[inc.edge] || visited[inc.other]) continue;
      visited[inc.other] = true;
      std::int64_t d1 = inc.edge < a_edge_count ? (inc.reversed ? -1 : 1) : 0;
      std::int64_t d2 = inc.edge < a_edge_count ? 0 : (inc.reversed ? -1 : 1);
      w.c1[inc.other] = w.c1[v] + d1;
      w.c2[inc.other] = w.c2[v] + d2;
      queue.push_back(inc.other);
    }
  }
  return w;
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

CoverSpec product_cycle_cover(const Complex2& product, std::uint32_t a, std::uint32_t b,
                              std::uint32_t k1, std::uint32_t k2) {
  if (k1 < 1 || k2 < 1) fail(ErrorCode::argument, "product_cycle_cover: bad unwrap counts");
  if (product.vertex_count() != a * b || product.edge_count() != 2 * a * b)
    fail(ErrorCode::argument, "product_cycle_cover: complex is not the expected product");
  const std::uint32_t a_edges = a * b;  // type-A edges come first
  auto windings = tree_windings(product, a_edges);
  auto split = spanning_forest(product);

  CoverSpec cover;
  cover.degree = k1 * k2;
  for (auto e : split.complement_edges) {
    const Edge& ed = product.edge(e);
    std::int64_t step1 = e < a_edges ? 1 : 0;
    std::int64_t step2 = e < a_edges ? 0 : 1;
    // Winding of the fundamental cycle tree-path(u) + e + reversed
    // tree-path(v); one full wrap of a factor contributes +-(factor size).
    std::int64_t w1 = windings.c1[ed.u] + step1 - windings.c1[ed.v];
    std::int64_t w2 = windings.c2[ed.u] + step2 - windings.c2[ed.v];
    if (w1 % static_cast<std::int64_t>(a) != 0 || w2 % static_cast<std::int64_t>(b) != 0)
      fail(ErrorCode::internal, "product cover: fractional winding");
    std::int64_t t1 = mod_floor(w1 / a, k1), t2 = mod_floor(w2 / b, k2);
    Perm p;
    p.img.resize(cover.degree);
    for (std::uint32_t x = 0; x < k1; ++x)
      for (std::uint32_t y = 0; y < k2; ++y)
        p.img[x * k2 + y] = static_cast<std::uint32_t>(mod_floor(x + t1, k1) * k2 +
                                                       mod_floor(y + t2, k2));
    cover.sigma.push_back(std::move(p));
  }
  return cover;
}

TowerSpec make_product_cycle_tower(std::uint32_t a, std::uint32_t b, std::uint32_t kmax) {
  if (a < 3 || b < 3 || kmax < 1) fail(ErrorCode::argument, "make_product_cycle_tower: bad sizes");
  TowerSpec spec;
  spec.base = gen_product_complex(gen_cycle(a), gen_cycle(b));
  for (std::uint32_t k = 1; k <= kmax; ++k)
    spec.levels.push_back({"k" + std::to_string(k), product_cycle_cover(spec.base, a, b, k, k)});
  return spec;
}

TowerSpec make_wedge_tower(std::uint32_t loops, std::uint32_t levels) {
  if (loops < 1 || levels < 1) fail(ErrorCode::argument, "make_wedge_tower: bad sizes");
  TowerSpec spec;
  spec.base = gen_wedge(loops);
  for (std::uint32_t lvl = 0; lvl < levels; ++lvl) {
    std::uint32_t d = 1u << lvl;
    CoverSpec cover;
    cover.degree = d;
    // First loop shifts the sheets cyclically (keeps the cover connected),
    // the others act trivially.
    Perm shift;
    shift.img.resize(d);
    for (std::uint32_t x = 0; x < d; ++x) shift.img[x] = (x + 1) % d;
    cover.sigma.push_back(std::move(shift));
    for (std::uint32_t j = 1; j < loops; ++j) cover.sigma.push_back(Perm::identity(d));
    spec.levels.push_back({"d" + std::to_string(d), std::move(cover)});
  }
  return spec;
}

std::string format_perm_cycles(const Perm& p) {
  const std::uint32_t d = p.degree();
  std::vector<bool> seen(d, false);
  std::ostringstream out;
  bool any = false;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (seen[i] || p.img[i] == i) continue;
    any = true;
    out << "(";
    std::uint32_t x = i;
    bool first = true;
    do {
      seen[x] = true;
      if (!first) out << " ";
      out << (x + 1);
      first = false;
      x = p.img[x];
    } while (x != i);
    out << ")";
  }
  if (!any) return "()";
  return out.str();
}

Perm parse_perm_cycles(const std::string& text, std::uint32_t degree) {
  Perm p = Perm::identity(degree);
  std::vector<bool> moved(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool saw_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::parse, "permutation: expected '('");
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::uint32_t val = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorCode::parse, "permutation: expected a point or ')'");
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        val = val * 10 + static_cast<std::uint32_t>(text[i] - '0');
        ++i;
      }
      if (val < 1 || val > degree)
        fail(ErrorCode::parse, "permutation point " + std::to_string(val) + " outside 1.." +
                                   std::to_string(degree));
      cyc.push_back(val - 1);
      skip_ws();
      if (i < text.size() && (text[i] == ',')) {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail(ErrorCode::parse, "permutation: missing ')'");
    ++i;  // ')'
    saw_cycle = true;
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      std::uint32_t from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (cyc.size() > 1) {
        if (moved[from]) fail(ErrorCode::parse, "permutation: point repeated across cycles");
        moved[from] = true;
        p.img[from] = to;
      }
    }
    skip_ws();
  }
  if (!saw_cycle) fail(ErrorCode::parse, "permutation: empty line");
  return p;
}

TowerSpec read_tower_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  TowerSpec spec;
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false, saw_base = false;
  std::size_t perms_needed = 0;

  auto die = [&](const std::string& msg) {
    fail(ErrorCode::parse, path + ": line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (!saw_header) {
      std::string ver;
      if (tok != "tower" || !(ls >> ver) || ver != "v1") die("expected header 'tower v1'");
      saw_header = true;
      continue;
    }
    if (tok == "base") {
      if (saw_base) die("duplicate base line");
      std::string rest;
      std::getline(ls, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      if (b == std::string::npos) die("expected 'base <path>'");
      std::size_t e = rest.find_last_not_of(" \t\r");
      spec.base_ref = rest.substr(b, e - b + 1);
      std::filesystem::path bp(spec.base_ref);
      if (bp.is_relative()) bp = std::filesystem::path(path).parent_path() / bp;
      spec.base = Complex2::read_file(bp.string());
      perms_needed = spanning_forest(spec.base).complement_edges.size();
      saw_base = true;
    } else if (tok == "level") {
      if (!saw_base) die("level before base");
      if (!spec.levels.empty() && spec.levels.back().cover.sigma.size() != perms_needed)
        die("previous level has " + std::to_string(spec.levels.back().cover.sigma.size()) +
            " permutations, expected " + std::to_string(perms_needed));
      long long d;
      if (!(ls >> d) || d < 1) die("expected 'level <degree> [label]'");
      if (!spec.levels.empty() &&
          static_cast<std::uint32_t>(d) <= spec.levels.back().cover.degree)
        die("cover degree must strictly increase along levels");
      TowerLevel lvl;
      lvl.cover.degree = static_cast<std::uint32_t>(d);
      if (!(ls >> lvl.label)) lvl.label = "d" + std::to_string(d);
      spec.levels.push_back(std::move(lvl));
    } else if (tok[0] == '(') {
      if (spec.levels.empty()) die("permutation before any level");
      auto& cover = spec.levels.back().cover;
      if (cover.sigma.size() >= perms_needed)
        die("too many permutations for this level (expected " + std::to_string(perms_needed) + ")");
      std::string rest = line.substr(line.find('('));
      try {
        cover.sigma.push_back(parse_perm_cycles(rest, cover.degree));
      } catch (const Error& e) {
        die(e.what());
      }
    } else {
      die("unknown directive '" + tok + "'");
    }
  }
  if (!saw_header) fail(ErrorCode::parse, path + ": missing 'tower v1' header");
  if (!saw_base) fail(ErrorCode::parse, path + ": missing 'base <path>' line");
  if (!spec.levels.empty() && spec.levels.back().cover.sigma.size() != perms_needed)
    fail(ErrorCode::parse, path + ": last level has " +
                               std::to_string(spec.levels.back().cover.sigma.size()) +
                               " permutations, expected " + std::to_string(perms_needed));
  return spec;
}

void write_tower_file(const TowerSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << "tower v1\n";
  out << "base " << spec.base_ref << "\n";
  for (const auto& lvl : spec.levels) {
    out << "level " << lvl.cover.degree << " " << lvl.label << "\n";
    for (const auto& p : lvl.cover.sigma) out << format_perm_cycles(p) << "\n";
  }
  if (!out) fail(ErrorCode::io, "write failed for '" + path + "'");
}

}  // namespace h1min
