#include "homology.hpp"

#include <numeric>

namespace h1min {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::uint32_t component_count(const Complex2& k) {
  UnionFind uf(k.vertex_count());
  std::uint32_t merges = 0;
  for (std::uint32_t e = 0; e < k.edge_count(); ++e)
    if (uf.unite(k.edge(e).u, k.edge(e).v)) ++merges;
  return k.vertex_count() - merges;
}

// Fundamental cycles of the BFS forest grown in edge-index order. Loops and
// other non-tree edges each contribute one cycle, in edge-index order.
std::vector<Chain1> fundamental_cycles(const Complex2& k) {
  const std::uint32_t V = k.vertex_count(), E = k.edge_count();
  std::vector<bool> visited(V, false);
  std::vector<std::uint32_t> parent_edge(V, UINT32_MAX);
  std::vector<bool> in_tree(E, false);
  std::vector<std::uint32_t> order;
  order.reserve(V);
  for (std::uint32_t root = 0; root < V; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    order.clear();
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::uint32_t v = order[head];
      for (const auto& inc : k.incidences(v)) {
        if (!visited[inc.other]) {
          visited[inc.other] = true;
          parent_edge[inc.other] = inc.edge;
          in_tree[inc.edge] = true;
          order.push_back(inc.other);
        }
      }
    }
  }

  // Edge set of the tree path from v to its component root.
  auto path_to_root = [&](std::uint32_t v, BitVec& acc) {
    while (parent_edge[v] != UINT32_MAX) {
      std::uint32_t e = parent_edge[v];
      acc.flip(e);
      const Edge& ed = k.edge(e);
      v = (v == ed.u) ? ed.v : ed.u;
    }
  };

  std::vector<Chain1> cycles;
  for (std::uint32_t e = 0; e < E; ++e) {
    if (in_tree[e]) continue;
    BitVec c(E);
    c.flip(e);
    path_to_root(k.edge(e).u, c);
    path_to_root(k.edge(e).v, c);  // shared segment cancels mod 2
    cycles.push_back(Chain1{std::move(c)});
  }
  return cycles;
}

void require_cycle(const Complex2& k, const Chain1& c, const char* who) {
  if (c.bits.size() != k.edge_count())
    fail(ErrorCode::argument, std::string(who) + ": chain does not match the complex");
  if (!k.is_cycle(c)) fail(ErrorCode::not_a_cycle, std::string(who) + ": chain is not a cycle");
}

}  // namespace

Betti betti(const Complex2& k) {
  const std::uint32_t V = k.vertex_count(), E = k.edge_count(), F = k.face_count();
  std::uint32_t b0 = component_count(k);
  std::uint32_t rank_d1 = V - b0;
  std::uint32_t rank_d2 = static_cast<std::uint32_t>(k.boundary_form().rank());
  std::uint32_t b1 = (E - rank_d1) - rank_d2;
  std::uint32_t b2 = F - rank_d2;
  return Betti{b0, b1, b2};
}

HomologyBasis::HomologyBasis(const Complex2& k) : complex_(&k) {
  cycle_basis_ = fundamental_cycles(k);
  const auto& bform = k.boundary_form();
  boundary_rank_ = static_cast<std::uint32_t>(bform.rank());

  // Sift fundamental cycles against im d2; survivors represent a basis of H1.
  EchelonSpace sieve = bform.space;
  for (const auto& z : cycle_basis_)
    if (sieve.add(z.bits)) class_reps_.push_back(z);

  const std::size_t b1 = class_reps_.size();
  for (std::uint32_t f : bform.pivot_faces)
    coord_space_.add_tagged(k.face_boundary(f).bits, BitVec(b1));
  for (std::size_t i = 0; i < b1; ++i) {
    BitVec tag(b1);
    tag.set(i, true);
    coord_space_.add_tagged(class_reps_[i].bits, tag);
  }
}

Chain1 HomologyBasis::chain_from_coordinates(const BitVec& coords) const {
  if (coords.size() != class_reps_.size())
    fail(ErrorCode::argument, "coordinate vector size does not match b1");
  Chain1 c = complex_->empty_chain1();
  for (std::size_t i = 0; i < class_reps_.size(); ++i)
    if (coords.get(i)) c ^= class_reps_[i];
  return c;
}

BitVec HomologyBasis::class_coordinates(const Chain1& c) const {
  require_cycle(*complex_, c, "class_coordinates");
  BitVec tag(class_reps_.size());
  BitVec rem = coord_space_.reduce_tagged(c.bits, tag);
  if (rem.any())
    fail(ErrorCode::internal, "cycle not in the span of boundaries and class representatives");
  return tag;
}

bool same_class(const Complex2& k, const Chain1& c1, const Chain1& c2) {
  require_cycle(k, c1, "same_class");
  require_cycle(k, c2, "same_class");
  return k.boundary_form().space.contains(c1.bits ^ c2.bits);
}

}  // namespace h1min
