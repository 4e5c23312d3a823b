#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complex2.hpp"

namespace h1min {

// Cycle graph C_n with uniform edge lengths.
Complex2 gen_cycle(std::uint32_t n, double edge_length = 1.0);

// Wedge of k unit loops at a single vertex.
Complex2 gen_wedge(std::uint32_t k);

// Closed orientable genus-g surface with unit edge lengths. Genus 0 is the
// tetrahedron boundary; genus >= 1 is the one-vertex 4g-gon scheme
// barycentrically subdivided three times, which is fine enough for
// unit-radius ball covers to see the homology.
Complex2 gen_surface(std::uint32_t genus);

// Barycentric subdivision; every subdivided edge gets unit length.
Complex2 subdivide(const Complex2& k);

// Square-complex product of two graphs (inputs must be face-free). Vertices
// are pairs, edges are edge x vertex and vertex x edge, faces edge x edge.
Complex2 gen_product_complex(const Complex2& g1, const Complex2& g2);

struct Perm {
  std::vector<std::uint32_t> img;  // 0-based images
  std::uint32_t degree() const { return static_cast<std::uint32_t>(img.size()); }
  static Perm identity(std::uint32_t d);
  bool is_identity() const;
  std::uint32_t apply(std::uint32_t x) const { return img[x]; }
  std::uint32_t apply_inv(std::uint32_t x) const;
  Perm inverse() const;
};

// Degree-d covering data: one permutation per non-tree edge of the base, in
// edge-index order (tree edges act trivially). The spanning forest is the
// BFS forest grown in edge-index order from vertex 0.
struct CoverSpec {
  std::uint32_t degree = 1;
  std::vector<Perm> sigma;
};

struct Cover {
  Complex2 complex;
  std::uint32_t degree = 1;
  bool connected = true;
  // Projections: cell index in the cover -> cell index in the base.
  std::vector<std::uint32_t> vertex_base, edge_base, face_base;
  std::vector<std::uint32_t> vertex_sheet;
};

// Edge indices of the BFS spanning forest, then the complement in index order.
struct ForestSplit {
  std::vector<std::uint32_t> tree_edges;
  std::vector<std::uint32_t> complement_edges;
};
ForestSplit spanning_forest(const Complex2& k);

// Builds the cover; throws ErrorCode::face_lift naming the first face whose
// boundary word is not the identity permutation.
Cover gen_cover(const Complex2& base, const CoverSpec& spec);

// Permutation of sheets obtained by composing the face boundary word.
Perm face_word_permutation(const Complex2& base, const CoverSpec& spec, std::uint32_t face);

struct TowerLevel {
  std::string label;
  CoverSpec cover;
};

struct TowerSpec {
  std::string base_ref;  // path the base was read from / should be written to
  Complex2 base;
  std::vector<TowerLevel> levels;
};

// Cover spec for a product of two cycles C_a x C_b (as produced by
// gen_product_complex) unwrapping the first factor k1 times and the second k2
// times; the result is C_{a*k1} x C_{b*k2} of degree k1*k2.
CoverSpec product_cycle_cover(const Complex2& product, std::uint32_t a, std::uint32_t b,
                              std::uint32_t k1, std::uint32_t k2);

// Tower of covers of C_a x C_b realizing C_{ak} x C_{bk} at level k, via the
// deck action of Z_k x Z_k. Levels k = 1..kmax.
TowerSpec make_product_cycle_tower(std::uint32_t a, std::uint32_t b, std::uint32_t kmax);

// Tower of connected cyclic covers of the wedge of `loops` circles, degrees
// 1, 2, 4, ..., 2^(levels-1).
TowerSpec make_wedge_tower(std::uint32_t loops, std::uint32_t levels);

// Text format: "tower v1", "base <path>", then per level "level <d> <label>"
// followed by one permutation line per complement edge in cycle notation
// (1-based, e.g. "(1 2 3)(4 5)", "()" for the identity).
TowerSpec read_tower_file(const std::string& path);
void write_tower_file(const TowerSpec& spec, const std::string& path);
std::string format_perm_cycles(const Perm& p);
Perm parse_perm_cycles(const std::string& text, std::uint32_t degree);

}  // namespace h1min
