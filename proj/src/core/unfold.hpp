#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "complex2.hpp"

namespace h1min {

// Per-vertex combinatorial injectivity radius with thick/thin labeling.
// injrad(v) is half the length of the shortest homotopically essential loop
// based at v, detected by unfolding the universal-cover ball of radius
// `horizon` around v. Vertices with no essential loop of length <= horizon
// within the explored ball report the cap value `horizon`; values below
// horizon/2 are exact (for graphs, and for the nonpositively-curved square
// complexes the generators produce).
struct MetricProfile {
  const Complex2* complex = nullptr;
  std::vector<double> injrad;
  double horizon = 0.0;
  double R = 0.0;
  std::vector<bool> thick;  // injrad(v) > R

  std::size_t thick_count() const {
    std::size_t n = 0;
    for (bool t : thick) n += t;
    return n;
  }
};

// Length of the shortest essential loop based at v, when one exists within
// distance `radius` of v in the universal cover.
std::optional<double> shortest_essential_loop(const Complex2& k, std::uint32_t v, double radius);

MetricProfile injectivity_profile(const Complex2& k, double horizon, double R);

// Same injrad data relabeled at a new threshold; requires newR < horizon.
MetricProfile reprofile(const MetricProfile& p, double newR);

struct BsStats {
  double thin_fraction = 0.0;
  // Distinct injrad values with multiplicities, ascending.
  std::vector<std::pair<double, std::uint32_t>> histogram;
};

BsStats bs_statistics(const MetricProfile& p);

}  // namespace h1min
