#pragma once

#include <cstdint>
#include <vector>

#include "complex2.hpp"

namespace h1min {

struct Betti {
  std::uint32_t b0 = 0;
  std::uint32_t b1 = 0;
  std::uint32_t b2 = 0;
};

// F2 Betti numbers. b0 counts connected components, b1 = dim ker d1 - rank d2,
// b2 = dim ker d2.
Betti betti(const Complex2& k);

// Cycle space and homology class representatives, deterministic in the edge
// ordering: the cycle basis is the fundamental-cycle basis of the BFS forest
// rooted at vertex 0, class representatives are the fundamental cycles that
// stay independent modulo im d2, in order.
class HomologyBasis {
 public:
  explicit HomologyBasis(const Complex2& k);

  const Complex2& complex() const { return *complex_; }
  const std::vector<Chain1>& cycle_basis() const { return cycle_basis_; }
  std::uint32_t boundary_rank() const { return boundary_rank_; }
  const std::vector<Chain1>& class_reps() const { return class_reps_; }
  std::uint32_t b1() const { return static_cast<std::uint32_t>(class_reps_.size()); }

  // Chain with the given coordinates over class_reps (XOR of the chosen reps).
  Chain1 chain_from_coordinates(const BitVec& coords) const;

  // Unique coordinates of [c] over class_reps; requires c to be a cycle.
  BitVec class_coordinates(const Chain1& c) const;

 private:
  const Complex2* complex_;
  std::vector<Chain1> cycle_basis_;
  std::uint32_t boundary_rank_ = 0;
  std::vector<Chain1> class_reps_;
  EchelonSpace coord_space_;  // boundaries tagged 0, reps tagged e_i
};

// True iff c1 + c2 bounds, i.e. [c1] = [c2] in H1. Both inputs must be cycles.
bool same_class(const Complex2& k, const Chain1& c1, const Chain1& c2);

}  // namespace h1min
