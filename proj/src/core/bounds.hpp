#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "complex2.hpp"
#include "homology.hpp"
#include "minrep.hpp"

namespace h1min {

using BigInt = boost::multiprecision::cpp_int;

// sum_{i=1..floor(delta*n)} C(n,i) (p-1)^i, exactly.
BigInt weighted_binomial_tail(std::uint32_t p, std::uint32_t n, double delta);

struct CountingReport {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  double delta = 0.0;
  BigInt exact_sum;
  double rhs = 0.0;    // p^(delta*(3 - ln delta)*n)
  double ratio = 0.0;  // exact_sum / rhs
  bool holds = false;  // exact_sum <= rhs, compared in exact arithmetic
};

// Exact check of the tail bound; natural logarithm in the exponent.
CountingReport counting_lemma_check(std::uint32_t p, std::uint32_t n, double delta);

struct CountingSweep {
  std::vector<CountingReport> reports;
  // Per (p, delta): least n in the sweep from which the bound holds onward;
  // UINT32_MAX when it keeps failing through the end of the range.
  struct Threshold {
    std::uint32_t p;
    double delta;
    std::uint32_t n0;
  };
  std::vector<Threshold> thresholds;
};

CountingSweep counting_sweep(const std::vector<std::uint32_t>& ps,
                             const std::vector<std::uint32_t>& ns,
                             const std::vector<double>& deltas);

// log2 of sum_{i=0..m_max} C(n_edges, i).
double dimension_bound(std::uint64_t n_edges, std::uint64_t m_max);

struct DimBoundCheck {
  bool ran = false;
  std::string skip_reason;
  bool holds = false;
  std::uint32_t m_max = 0;   // largest minimal-representative support over all classes
  double bound = 0.0;        // dimension_bound(E, m_max)
  double margin = 0.0;       // bound - b1
};

// Enumerates every nonzero class, takes the exact minimal representative and
// checks b1 <= log2 sum_{i<=m} C(E,i) where m is the max support size seen.
// Skips (ran = false) when 2^b1 or the coset search exceed the caps.
DimBoundCheck verify_dimension_bound(const Complex2& k, const HomologyBasis& basis,
                                     std::uint32_t b1_cap = 16,
                                     std::uint32_t exact_cap = kDefaultExactCap);

}  // namespace h1min
