#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complex2.hpp"
#include "homology.hpp"
#include "unfold.hpp"

namespace h1min {

// Sum of lengths of support edges whose endpoints are both thick. Loops count
// when their vertex is thick.
double r_length(const Complex2& k, const Chain1& c, const MetricProfile& profile);

enum class MinMethod { exact, descent, anneal };
const char* method_name(MinMethod m);

struct ReducedRep {
  Chain1 cycle;
  double length = 0.0;
  double r_length = 0.0;
  std::vector<std::vector<std::uint32_t>> circuits;  // edge-disjoint closed walks
  bool certificate = false;  // no single-face move improves the cycle
  MinMethod method = MinMethod::exact;
  std::uint64_t accepted_moves = 0;  // instrumentation for surgery soundness checks

  std::string format(const Complex2& k) const;
};

inline constexpr std::uint32_t kDefaultExactCap = 22;

enum class TieRule { lowest_face, lex_support };

struct DescentParams {
  std::uint64_t max_iters = 1u << 20;
  TieRule tie_rule = TieRule::lowest_face;
};

struct AnnealParams {
  std::uint64_t seed = 0;
  double t0 = -1.0;  // < 0 picks mean edge length of the complex
  double cooling = 0.92;
  std::uint32_t stages = 60;
  std::uint32_t moves_per_temp = 0;  // 0 picks max(200, 8 * face count)
};

// Minimum of chain_length over the homology coset {c + im d2}, by Gray-code
// enumeration of the pivot-face span. Requires rank d2 <= cap; ties go to the
// lexicographically smallest support. The optional profile only fills the
// r_length field of the result.
ReducedRep exact_min_representative(const Complex2& k, const Chain1& c,
                                    std::uint32_t cap = kDefaultExactCap,
                                    const MetricProfile* profile = nullptr);

// Steepest-descent surgery: repeatedly add the single face boundary that
// shrinks the cycle most, until no face helps. certificate reports whether a
// fixpoint was reached within max_iters.
ReducedRep local_search_reduce(const Complex2& k, const Chain1& c,
                               const DescentParams& params = {},
                               const MetricProfile* profile = nullptr);

// Simulated annealing over the same single-face move set, followed by a
// deterministic descent polish from the best cycle visited. Nonpositive
// temperatures propose nothing, so a zero-temperature schedule degenerates to
// local_search_reduce exactly. Deterministic given the seed.
ReducedRep anneal_reduce(const Complex2& k, const Chain1& c, const AnnealParams& params = {},
                         const MetricProfile* profile = nullptr);

// Edge-disjoint closed walks partitioning the support of a cycle, produced by
// lowest-edge-first traversal.
std::vector<std::vector<std::uint32_t>> circuit_decompose(const Complex2& k, const Chain1& c);

// True iff no single-face move strictly shortens the cycle.
bool local_minimality_check(const Complex2& k, const Chain1& c);

struct RLengthParams {
  std::uint64_t budget = 4096;  // full class enumeration allowed while 2^b1 <= budget
  std::uint64_t seed = 0;       // sampling and annealing seed
  std::uint32_t exact_cap = kDefaultExactCap;
  AnnealParams anneal;
};

struct NormalizedRLength {
  double value = 0.0;
  bool exact = true;
};

// sup over nonzero homology classes of the minimal R-length of the class,
// divided by the volume. Classes are enumerated exhaustively while 2^b1 fits
// the budget, otherwise basis classes plus seeded random classes are sampled
// (exact = false). Per-class minimization is exact while rank d2 fits
// exact_cap, otherwise annealed.
NormalizedRLength normalized_r_length(const Complex2& k, const HomologyBasis& basis,
                                      const MetricProfile& profile, const RLengthParams& params = {});

// Evaluates several thresholds on one complex. Profiles must be sorted by
// ascending R; per class, each search is warm-started from the previous
// threshold's best cycle, which makes the reported values non-increasing in R.
std::vector<NormalizedRLength> normalized_r_length_sweep(const Complex2& k,
                                                         const HomologyBasis& basis,
                                                         const std::vector<MetricProfile>& profiles,
                                                         const RLengthParams& params = {});

}  // namespace h1min
