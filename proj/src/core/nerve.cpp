#include "nerve.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <queue>

#include "minrep.hpp"
#include "unfold.hpp"

namespace h1min {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic shortest path between two vertices: Dijkstra with ties broken
// by smaller predecessor vertex, then smaller edge index.
std::vector<std::uint32_t> shortest_path_vertices(const Complex2& k, std::uint32_t from,
                                                  std::uint32_t to,
                                                  std::vector<std::uint32_t>* edges_out) {
  const std::uint32_t V = k.vertex_count();
  std::vector<double> dist(V, kInf);
  std::vector<std::uint32_t> pred_vertex(V, UINT32_MAX), pred_edge(V, UINT32_MAX);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[from] = 0.0;
  pq.push({0.0, from});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (const auto& inc : k.incidences(v)) {
      double nd = d + k.edge(inc.edge).length;
      double eps = 1e-12 * (1.0 + nd);
      if (nd < dist[inc.other] - eps) {
        dist[inc.other] = nd;
        pred_vertex[inc.other] = v;
        pred_edge[inc.other] = inc.edge;
        pq.push({nd, inc.other});
      } else if (nd <= dist[inc.other] + eps &&
                 (v < pred_vertex[inc.other] ||
                  (v == pred_vertex[inc.other] && inc.edge < pred_edge[inc.other]))) {
        pred_vertex[inc.other] = v;
        pred_edge[inc.other] = inc.edge;
      }
    }
  }
  if (dist[to] == kInf) fail(ErrorCode::argument, "vertices in different components");
  std::vector<std::uint32_t> path;
  std::vector<std::uint32_t> edges;
  for (std::uint32_t v = to; v != from; v = pred_vertex[v]) {
    path.push_back(v);
    edges.push_back(pred_edge[v]);
  }
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  std::reverse(edges.begin(), edges.end());
  if (edges_out) *edges_out = std::move(edges);
  return path;
}

}  // namespace

std::vector<std::uint32_t> build_net(const Complex2& k, double kappa) {
  if (!(kappa > 0.0)) fail(ErrorCode::argument, "kappa must be positive");
  const std::uint32_t V = k.vertex_count();
  std::vector<double> mindist(V, kInf);
  std::vector<std::uint32_t> net;
  for (std::uint32_t v = 0; v < V; ++v) {
    if (mindist[v] < kappa / 2.0) continue;
    net.push_back(v);
    auto d = k.shortest_distances(v, kappa);
    for (std::uint32_t x = 0; x < V; ++x)
      if (d[x] < mindist[x]) mindist[x] = d[x];
  }
  return net;
}

NerveData build_nerve(const Complex2& k, double kappa) {
  NerveData nd;
  nd.source = &k;
  nd.kappa = kappa;
  nd.net = build_net(k, kappa);
  const std::uint32_t V = k.vertex_count();
  const std::uint32_t N = static_cast<std::uint32_t>(nd.net.size());

  nd.nearest_center.assign(V, UINT32_MAX);
  std::vector<double> nearest_dist(V, kInf);
  std::vector<std::vector<std::uint32_t>> covered_by(V);  // center ordinals per vertex
  nd.cover.resize(N);
  for (std::uint32_t c = 0; c < N; ++c) {
    auto d = k.shortest_distances(nd.net[c], kappa);
    for (std::uint32_t x = 0; x < V; ++x) {
      if (d[x] > kappa) continue;
      nd.cover[c].push_back(x);
      covered_by[x].push_back(c);
      if (d[x] < nearest_dist[x] - 1e-12) {  // ties keep the earlier center
        nearest_dist[x] = d[x];
        nd.nearest_center[x] = c;
      }
    }
  }
  for (std::uint32_t x = 0; x < V; ++x)
    if (nd.nearest_center[x] == UINT32_MAX)
      fail(ErrorCode::internal, "net is not maximal: uncovered vertex");

  // Nerve edges and triangle faces from shared cover vertices.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_id;
  std::vector<std::vector<std::uint32_t>> triples;
  {
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> pair_seen;
    std::map<std::vector<std::uint32_t>, bool> triple_seen;
    for (std::uint32_t x = 0; x < V; ++x) {
      const auto& cs = covered_by[x];
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          pair_seen[{cs[i], cs[j]}] = true;
          for (std::size_t l = j + 1; l < cs.size(); ++l)
            triple_seen[{cs[i], cs[j], cs[l]}] = true;
        }
    }
    std::vector<Edge> nerve_edges;
    for (const auto& [pr, _] : pair_seen) {
      edge_id[pr] = static_cast<std::uint32_t>(nerve_edges.size());
      nerve_edges.push_back({pr.first, pr.second, 1.0});
      nd.nerve_edge_ends.push_back(pr);
    }
    std::vector<std::vector<WalkStep>> walks;
    for (const auto& [tr, _] : triple_seen) {
      // i -> j -> k -> i
      walks.push_back({{edge_id[{tr[0], tr[1]}], false},
                       {edge_id[{tr[1], tr[2]}], false},
                       {edge_id[{tr[0], tr[2]}], true}});
      triples.push_back(tr);
    }
    nd.nerve = Complex2::build_with_walks(N, std::move(nerve_edges), std::move(walks));
  }

  std::vector<std::uint32_t> degree(N, 0);
  for (const auto& [i, j] : nd.nerve_edge_ends) {
    ++degree[i];
    ++degree[j];
  }
  nd.max_nerve_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  // Transfer paths, one per nerve edge.
  nd.tau_vertices.resize(nd.nerve_edge_ends.size());
  nd.tau_chains.reserve(nd.nerve_edge_ends.size());
  for (std::size_t e = 0; e < nd.nerve_edge_ends.size(); ++e) {
    auto [i, j] = nd.nerve_edge_ends[e];
    std::vector<std::uint32_t> path_edges;
    nd.tau_vertices[e] = shortest_path_vertices(k, nd.net[i], nd.net[j], &path_edges);
    Chain1 chain = k.empty_chain1();
    double len = 0.0;
    for (auto pe : path_edges) {
      chain.bits.flip(pe);
      len += k.edge(pe).length;
    }
    if (len > 2.0 * kappa + 1e-9)
      fail(ErrorCode::internal, "tau path longer than 2*kappa");
    nd.tau_chains.push_back(std::move(chain));
  }

  // Witness ball per source edge: the least center covering both endpoints.
  nd.edge_witness.assign(k.edge_count(), UINT32_MAX);
  for (std::uint32_t e = 0; e < k.edge_count(); ++e) {
    const auto& cu = covered_by[k.edge(e).u];
    const auto& cv = covered_by[k.edge(e).v];
    for (auto c : cu) {  // both lists ascend, first common entry is minimal
      if (std::binary_search(cv.begin(), cv.end(), c)) {
        nd.edge_witness[e] = c;
        break;
      }
    }
  }

  // Guard: balls of radius kappa triple-wise fill loops up to length 4*kappa
  // (the circle threshold), so such classes can vanish from the nerve.
  auto guard = injectivity_profile(k, 4.0 * kappa, 2.0 * kappa);
  for (std::uint32_t v = 0; v < V; ++v)
    if (!guard.thick[v]) {
      nd.warned_kappa = true;
      break;
    }
  return nd;
}

Chain1 push_cycle(const NerveData& nd, const Chain1& nerve_cycle) {
  if (nerve_cycle.bits.size() != nd.nerve.edge_count())
    fail(ErrorCode::argument, "push_cycle: chain does not match the nerve");
  if (!nd.nerve.is_cycle(nerve_cycle)) fail(ErrorCode::not_a_cycle, "push_cycle: not a cycle");
  Chain1 out = nd.source->empty_chain1();
  for (auto e : nerve_cycle.bits.indices()) out ^= nd.tau_chains[e];
  if (!nd.source->is_cycle(out)) fail(ErrorCode::internal, "pushed chain is not a cycle");
  return out;
}

Chain1 approximate_class(const NerveData& nd, const Chain1& source_cycle) {
  const Complex2& k = *nd.source;
  if (source_cycle.bits.size() != k.edge_count())
    fail(ErrorCode::argument, "approximate_class: chain does not match the source");
  if (!k.is_cycle(source_cycle)) fail(ErrorCode::not_a_cycle, "approximate_class: not a cycle");

  for (auto e : source_cycle.bits.indices())
    if (nd.edge_witness[e] == UINT32_MAX)
      fail(ErrorCode::uncovered,
           "support edge " + std::to_string(e) + " is not contained in any ball (kappa too small)");

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_id;
  for (std::uint32_t e = 0; e < nd.nerve.edge_count(); ++e) edge_id[nd.nerve_edge_ends[e]] = e;

  Chain1 out = nd.nerve.empty_chain1();
  auto add_step = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b) return;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = edge_id.find(key);
    if (it == edge_id.end()) fail(ErrorCode::internal, "snapped centers are not nerve-adjacent");
    out.bits.flip(it->second);
  };

  for (const auto& circuit : circuit_decompose(k, source_cycle)) {
    // Vertex sequence along the circuit walk.
    const Edge& first = k.edge(circuit[0]);
    std::uint32_t cur = first.u;
    std::vector<std::uint32_t> snapped;
    for (auto e : circuit) {
      const Edge& ed = k.edge(e);
      snapped.push_back(nd.nearest_center[cur]);
      snapped.push_back(nd.edge_witness[e]);
      if (!ed.is_loop()) cur = (cur == ed.u) ? ed.v : ed.u;
    }
    snapped.push_back(snapped.front());  // close the walk
    for (std::size_t t = 0; t + 1 < snapped.size(); ++t) add_step(snapped[t], snapped[t + 1]);
  }
  if (!nd.nerve.is_cycle(out)) fail(ErrorCode::internal, "snapped chain is not a cycle");
  return out;
}

InducedMap induced_h1_map(const NerveData& nd, const HomologyBasis& source_basis,
                          const HomologyBasis& nerve_basis) {
  InducedMap m;
  std::vector<BitVec> cols;
  for (const auto& rep : nerve_basis.class_reps()) {
    Chain1 pushed = push_cycle(nd, rep);
    cols.push_back(source_basis.class_coordinates(pushed));
  }
  m.matrix = BitMatrix::from_columns(source_basis.b1(), cols);
  m.rank = static_cast<std::uint32_t>(m.matrix.rank());
  m.surjective = (m.rank == source_basis.b1());
  return m;
}

InducedMap induced_h1_map(const NerveData& nd) {
  HomologyBasis source_basis(*nd.source);
  HomologyBasis nerve_basis(nd.nerve);
  return induced_h1_map(nd, source_basis, nerve_basis);
}

void write_nerve_files(const NerveData& nd, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::io, "cannot create directory '" + dir + "'");

  nd.nerve.write_file((fs::path(dir) / "nerve_complex.cpx").string());

  std::ofstream net(fs::path(dir) / "net.txt");
  for (std::size_t c = 0; c < nd.net.size(); ++c) net << "center " << c << " " << nd.net[c] << "\n";

  std::ofstream cover(fs::path(dir) / "cover.txt");
  for (std::size_t c = 0; c < nd.cover.size(); ++c) {
    cover << "cover " << c << " :";
    for (auto v : nd.cover[c]) cover << " " << v;
    cover << "\n";
  }

  std::ofstream tau(fs::path(dir) / "tau.txt");
  for (std::size_t e = 0; e < nd.nerve_edge_ends.size(); ++e) {
    tau << "tau " << nd.nerve_edge_ends[e].first << " " << nd.nerve_edge_ends[e].second << " :";
    for (auto v : nd.tau_vertices[e]) tau << " " << v;
    tau << "\n";
  }
  if (!net || !cover || !tau) fail(ErrorCode::io, "write failed under '" + dir + "'");
}

}  // namespace h1min
