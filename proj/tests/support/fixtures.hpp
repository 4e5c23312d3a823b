#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately avoid the library's own code paths.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "complex2.hpp"

namespace h1min::testing {

// Minimal 7-vertex triangulation of the torus: complete graph K7 with faces
// {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Complex2 csaszar_torus() {
  std::vector<Edge> edges;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> id;
  for (std::uint32_t i = 0; i < 7; ++i)
    for (std::uint32_t j = i + 1; j < 7; ++j) {
      id[{i, j}] = static_cast<std::uint32_t>(edges.size());
      edges.push_back({i, j, 1.0});
    }
  auto e = [&](std::uint32_t a, std::uint32_t b) {
    return id[{std::min(a, b), std::max(a, b)}];
  };
  std::vector<std::vector<std::uint32_t>> faces;
  for (std::uint32_t i = 0; i < 7; ++i) {
    std::uint32_t a = i, b = (i + 1) % 7, c = (i + 3) % 7;
    faces.push_back({e(a, b), e(b, c), e(c, a)});
    std::uint32_t x = i, y = (i + 2) % 7, z = (i + 3) % 7;
    faces.push_back({e(x, y), e(y, z), e(z, x)});
  }
  return Complex2::build(7, std::move(edges), faces);
}

// Klein bottle as an m x n square grid, horizontal wrap plain and vertical
// wrap through the reflection i -> -i. Needs m, n >= 3.
inline Complex2 klein_grid(std::uint32_t m, std::uint32_t n) {
  auto vid = [&](std::uint32_t i, std::uint32_t j) { return j * m + i; };
  std::vector<Edge> edges;
  // Horizontal edges h(i,j) = j*m + i.
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < m; ++i) edges.push_back({vid(i, j), vid((i + 1) % m, j), 1.0});
  std::uint32_t v0 = static_cast<std::uint32_t>(edges.size());
  // Vertical edges v(i,j) for j < n-1, then the reflected wrap row.
  for (std::uint32_t j = 0; j + 1 < n; ++j)
    for (std::uint32_t i = 0; i < m; ++i) edges.push_back({vid(i, j), vid(i, j + 1), 1.0});
  std::uint32_t w0 = static_cast<std::uint32_t>(edges.size());
  for (std::uint32_t i = 0; i < m; ++i)
    edges.push_back({vid(i, n - 1), vid((m - i) % m, 0), 1.0});

  auto h = [&](std::uint32_t i, std::uint32_t j) { return j * m + i; };
  auto v = [&](std::uint32_t i, std::uint32_t j) { return v0 + j * m + i; };
  auto w = [&](std::uint32_t i) { return w0 + i; };

  std::vector<std::vector<std::uint32_t>> faces;
  for (std::uint32_t j = 0; j + 1 < n; ++j)
    for (std::uint32_t i = 0; i < m; ++i)
      faces.push_back({h(i, j), v((i + 1) % m, j), h(i, j + 1), v(i, j)});
  for (std::uint32_t i = 0; i < m; ++i)
    faces.push_back({h(i, n - 1), w((i + 1) % m), h((m - i - 1) % m, 0), w(i)});
  return Complex2::build(m * n, std::move(edges), faces);
}

struct RandomComplexOpts {
  std::uint32_t min_vertices = 4;
  std::uint32_t max_vertices = 12;
  std::uint32_t max_extra_edges = 8;
  std::uint32_t max_faces = 10;
  std::uint32_t max_walk_len = 8;
  bool unit_lengths = false;
};

// Connected random complex; faces are random closed walks, so every instance
// is valid by construction.
inline Complex2 random_complex(std::mt19937_64& rng, const RandomComplexOpts& opts = {}) {
  auto pick = [&](std::uint32_t lo, std::uint32_t hi) {  // inclusive
    return lo + static_cast<std::uint32_t>(rng() % (hi - lo + 1));
  };
  auto rand_len = [&] {
    if (opts.unit_lengths) return 1.0;
    return 0.5 + 1.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };

  std::uint32_t V = pick(opts.min_vertices, opts.max_vertices);
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i < V; ++i) edges.push_back({pick(0, i - 1), i, rand_len()});
  std::uint32_t extra = pick(0, opts.max_extra_edges);
  for (std::uint32_t x = 0; x < extra; ++x) edges.push_back({pick(0, V - 1), pick(0, V - 1), rand_len()});

  // Incidences for the walk builder.
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> inc(V);  // (edge, reversed)
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].u].push_back({e, false});
    if (edges[e].u != edges[e].v) inc[edges[e].v].push_back({e, true});
  }

  std::vector<std::vector<WalkStep>> walks;
  std::uint32_t want = pick(0, opts.max_faces);
  for (std::uint32_t f = 0; f < want; ++f) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::uint32_t start = pick(0, V - 1);
      if (inc[start].empty()) continue;
      std::uint32_t cur = start;
      std::vector<WalkStep> walk;
      bool closed = false;
      for (std::uint32_t step = 0; step < opts.max_walk_len; ++step) {
        const auto& choice = inc[cur][rng() % inc[cur].size()];
        walk.push_back({choice.first, choice.second});
        const Edge& ed = edges[choice.first];
        cur = ed.u == ed.v ? cur : (choice.second ? ed.u : ed.v);
        if (cur == start && step + 1 >= 1) {
          closed = true;
          break;
        }
      }
      if (closed) {
        walks.push_back(std::move(walk));
        break;
      }
    }
  }
  return Complex2::build_with_walks(V, std::move(edges), std::move(walks));
}

// Second elimination implementation: plain byte matrix, row echelon.
inline std::size_t naive_rank(std::vector<std::vector<std::uint8_t>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

// Brute-force coset minimum: every F2 combination of the face boundaries,
// rebuilt from scratch (no Gray code, no incremental updates).
inline double naive_coset_min_length(const Complex2& k, const Chain1& c) {
  std::vector<std::uint32_t> pivots = k.boundary_form().pivot_faces;
  std::size_t r = pivots.size();
  double best = k.chain_length(c);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    Chain1 cand = c;
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1) cand ^= k.face_boundary(pivots[i]);
    best = std::min(best, k.chain_length(cand));
  }
  return best;
}

}  // namespace h1min::testing
