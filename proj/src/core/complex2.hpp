#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace h1min {

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double length = 1.0;
  bool is_loop() const { return u == v; }
};

// One traversal step of a face boundary walk: edge index plus direction.
// Forward means u -> v as the edge is stored.
struct WalkStep {
  std::uint32_t edge = 0;
  bool reversed = false;
};

// An F2 vector over the edges of a fixed complex.
struct Chain1 {
  BitVec bits;
  std::size_t support_size() const { return bits.popcount(); }
  std::vector<std::uint32_t> edges() const { return bits.indices(); }
  Chain1& operator^=(const Chain1& o) {
    bits ^= o.bits;
    return *this;
  }
  bool operator==(const Chain1& o) const { return bits == o.bits; }
};

// An F2 vector over the vertices of a fixed complex.
struct Chain0 {
  BitVec bits;
  std::vector<std::uint32_t> vertices() const { return bits.indices(); }
};

// Directed incidence at a vertex: the step (edge, reversed) leaves the vertex.
struct Incidence {
  std::uint32_t edge;
  bool reversed;
  std::uint32_t other;  // head vertex of the step
};

// Weighted 2-dimensional cell complex: vertices, measured edges, polygon
// faces attached along closed edge walks. Immutable once built.
class Complex2 {
 public:
  Complex2() = default;  // empty complex; useful as a value placeholder

  // Faces given as bare edge-index lists; boundary walks are resolved here
  // (loops are traversed forward when the direction is ambiguous).
  static Complex2 build(std::uint32_t vertex_count, std::vector<Edge> edges,
                        const std::vector<std::vector<std::uint32_t>>& faces);

  // Faces given as explicit directed walks; used by generators that know the
  // intended attaching maps (products, covers, subdivisions).
  static Complex2 build_with_walks(std::uint32_t vertex_count, std::vector<Edge> edges,
                                   std::vector<std::vector<WalkStep>> face_walks);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges_.size()); }
  std::uint32_t face_count() const { return static_cast<std::uint32_t>(face_walks_.size()); }

  const Edge& edge(std::uint32_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<WalkStep>& face_walk(std::uint32_t f) const { return face_walks_[f]; }
  std::uint32_t face_walk_start(std::uint32_t f) const;

  // Face count for 2-complexes, total edge length for graphs.
  double volume() const { return volume_; }
  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(vertex_count_) - static_cast<std::int64_t>(edges_.size()) +
           static_cast<std::int64_t>(face_walks_.size());
  }

  // Edges appearing an odd number of times in the face's boundary walk.
  const Chain1& face_boundary(std::uint32_t f) const { return face_boundaries_[f]; }

  Chain1 empty_chain1() const { return Chain1{BitVec(edges_.size())}; }
  Chain1 chain_from_edges(const std::vector<std::uint32_t>& idx) const;
  Chain0 boundary1(const Chain1& c) const;
  Chain1 boundary2(const std::vector<std::uint32_t>& face_set) const;
  bool is_cycle(const Chain1& c) const { return boundary1(c).bits.none(); }
  double chain_length(const Chain1& c) const;

  BitMatrix boundary1_matrix() const;  // V x E
  BitMatrix boundary2_matrix() const;  // E x F

  const std::vector<Incidence>& incidences(std::uint32_t v) const { return adjacency_[v]; }

  // Single-source shortest-path distances over the weighted 1-skeleton.
  // Vertices beyond `bound` keep distance infinity.
  std::vector<double> shortest_distances(std::uint32_t source,
                                         double bound = std::numeric_limits<double>::infinity()) const;

  // Column echelon data for im d2, built once on first use.
  struct BoundaryForm {
    EchelonSpace space;                      // echelonized face boundaries
    std::vector<std::uint32_t> pivot_faces;  // faces whose boundaries form a basis
    std::size_t rank() const { return pivot_faces.size(); }
  };
  const BoundaryForm& boundary_form() const;

  // Text format, line oriented: "complex2 v1", "v <count>", "e <u> <v> <len>",
  // "f <e1> ... <ek>". Blank lines and '#' comments are skipped.
  static Complex2 parse(std::string_view text);
  static Complex2 read_file(const std::string& path);
  std::string to_text() const;
  void write_file(const std::string& path) const;

 private:
  void finalize();  // adjacency, boundaries, volume; validates invariants

  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<WalkStep>> face_walks_;
  std::vector<Chain1> face_boundaries_;
  std::vector<std::vector<Incidence>> adjacency_;
  double volume_ = 0.0;

  // Lazily built and shared between copies; guarded by its own once_flag so
  // the complex itself stays logically immutable and movable.
  struct LazyBoundaryForm {
    std::once_flag once;
    std::unique_ptr<BoundaryForm> form;
  };
  std::shared_ptr<LazyBoundaryForm> boundary_form_cache_ = std::make_shared<LazyBoundaryForm>();
};

// Resolves a face edge list into a directed closed walk, or nullopt.
std::optional<std::vector<WalkStep>> resolve_face_walk(const std::vector<Edge>& edges,
                                                       const std::vector<std::uint32_t>& face);

}  // namespace h1min
