#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bits.hpp"
#include "complex2.hpp"
#include "homology.hpp"

namespace h1min {

// Nerve of the cover of a complex by radius-kappa balls around a greedy
// maximal kappa/2-separated net, plus the transfer map tau sending nerve
// edges to shortest paths (length <= 2*kappa) between centers.
struct NerveData {
  const Complex2* source = nullptr;
  double kappa = 0.0;
  std::vector<std::uint32_t> net;                 // center source vertices, selection order
  std::vector<std::vector<std::uint32_t>> cover;  // per center: ball vertex set, sorted
  Complex2 nerve;                                 // unit edge lengths, triangle faces
  std::vector<std::pair<std::uint32_t, std::uint32_t>> nerve_edge_ends;  // center ordinals
  std::vector<std::vector<std::uint32_t>> tau_vertices;  // per nerve edge: source path
  std::vector<Chain1> tau_chains;                        // per nerve edge: path edge set
  std::vector<std::uint32_t> nearest_center;             // per source vertex: center ordinal
  std::vector<std::uint32_t> edge_witness;  // per source edge: min center covering both ends
  bool warned_kappa = false;                // some essential loop of length <= 4*kappa exists
  std::uint32_t max_nerve_degree = 0;
};

std::vector<std::uint32_t> build_net(const Complex2& k, double kappa);

NerveData build_nerve(const Complex2& k, double kappa);

// F2 sum of the tau paths of the support edges; a cycle in the source of
// length at most 2*kappa*|support|.
Chain1 push_cycle(const NerveData& nd, const Chain1& nerve_cycle);

// Snaps each circuit of a source cycle to its sequence of nearest centers and
// edge witnesses, yielding a nerve cycle whose push is homologous to the
// input. Throws ErrorCode::uncovered if a support edge fits in no ball.
Chain1 approximate_class(const NerveData& nd, const Chain1& source_cycle);

struct InducedMap {
  BitMatrix matrix;  // source class coordinates of pushed nerve basis classes
  std::uint32_t rank = 0;
  bool surjective = false;
};

InducedMap induced_h1_map(const NerveData& nd);
InducedMap induced_h1_map(const NerveData& nd, const HomologyBasis& source_basis,
                          const HomologyBasis& nerve_basis);

// net.txt, cover.txt, tau.txt and nerve_complex.cpx under dir.
void write_nerve_files(const NerveData& nd, const std::string& dir);

}  // namespace h1min
