#include "bounds.hpp"

#include <cmath>

namespace h1min {

namespace {

// Exact floor(delta * n) robust against cases like 0.15 * 20 = 2.9999...96.
std::uint32_t floor_delta_n(double delta, std::uint32_t n) {
  return static_cast<std::uint32_t>(std::floor(delta * n + 1e-9));
}

double log2_big(const BigInt& x) {
  if (x <= 0) fail(ErrorCode::argument, "log2 of a nonpositive value");
  std::size_t bits = boost::multiprecision::msb(x);  // floor(log2 x)
  if (bits <= 52) return std::log2(x.convert_to<double>());
  BigInt top = x >> (bits - 52);
  return static_cast<double>(bits - 52) + std::log2(top.convert_to<double>());
}

}  // namespace

BigInt weighted_binomial_tail(std::uint32_t p, std::uint32_t n, double delta) {
  std::uint32_t m = floor_delta_n(delta, n);
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, 0)
  BigInt power = 1;  // (p-1)^0
  for (std::uint32_t i = 1; i <= m; ++i) {
    binom = binom * (n - i + 1) / i;
    power *= (p - 1);
    sum += binom * power;
  }
  return sum;
}

CountingReport counting_lemma_check(std::uint32_t p, std::uint32_t n, double delta) {
  if (p < 2) fail(ErrorCode::argument, "p must be a prime >= 2");
  if (!(delta > 0.0 && delta < 0.5)) fail(ErrorCode::argument, "delta must lie in (0, 1/2)");
  if (n < 1) fail(ErrorCode::argument, "n must be >= 1");

  CountingReport rep;
  rep.p = p;
  rep.n = n;
  rep.delta = delta;
  rep.exact_sum = weighted_binomial_tail(p, n, delta);

  double exponent = delta * (3.0 - std::log(delta)) * n;
  rep.rhs = std::pow(static_cast<double>(p), exponent);

  if (rep.exact_sum == 0) {
    rep.ratio = 0.0;
    rep.holds = true;
    return rep;
  }
  double log_sum = log2_big(rep.exact_sum);
  double log_rhs = exponent * std::log2(static_cast<double>(p));
  rep.ratio = std::exp2(log_sum - log_rhs);
  // Exact integer comparison: sum <= rhs iff sum <= floor(rhs).
  if (std::isinf(rep.rhs)) {
    rep.holds = true;
  } else {
    rep.holds = rep.exact_sum <= BigInt(rep.rhs);
  }
  return rep;
}

CountingSweep counting_sweep(const std::vector<std::uint32_t>& ps,
                             const std::vector<std::uint32_t>& ns,
                             const std::vector<double>& deltas) {
  CountingSweep sweep;
  for (auto p : ps) {
    for (auto delta : deltas) {
      std::uint32_t n0 = UINT32_MAX;
      for (auto n : ns) {
        auto rep = counting_lemma_check(p, n, delta);
        sweep.reports.push_back(rep);
        if (rep.holds) {
          if (n0 == UINT32_MAX) n0 = n;
        } else {
          n0 = UINT32_MAX;  // must hold for every n from n0 onward
        }
      }
      sweep.thresholds.push_back({p, delta, n0});
    }
  }
  return sweep;
}

double dimension_bound(std::uint64_t n_edges, std::uint64_t m_max) {
  if (m_max > n_edges) fail(ErrorCode::argument, "m_max exceeds the number of edges");
  BigInt sum = 0;
  BigInt binom = 1;
  sum += binom;
  for (std::uint64_t i = 1; i <= m_max; ++i) {
    binom = binom * (n_edges - i + 1) / i;
    sum += binom;
  }
  return log2_big(sum);
}

DimBoundCheck verify_dimension_bound(const Complex2& k, const HomologyBasis& basis,
                                     std::uint32_t b1_cap, std::uint32_t exact_cap) {
  DimBoundCheck out;
  const std::uint32_t b1 = basis.b1();
  if (b1 == 0) {
    out.ran = true;
    out.holds = true;
    out.m_max = 0;
    out.bound = 0.0;
    out.margin = 0.0;
    return out;
  }
  if (b1 > b1_cap) {
    out.skip_reason = "2^b1 classes exceed the enumeration cap";
    return out;
  }
  if (k.boundary_form().rank() > exact_cap) {
    out.skip_reason = "rank d2 exceeds the exact minimization cap";
    return out;
  }
  std::uint32_t m = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b1); ++mask) {
    BitVec coords(b1);
    for (std::uint32_t i = 0; i < b1; ++i)
      if ((mask >> i) & 1) coords.set(i, true);
    Chain1 c = basis.chain_from_coordinates(coords);
    ReducedRep rep = exact_min_representative(k, c, exact_cap);
    m = std::max(m, static_cast<std::uint32_t>(rep.cycle.support_size()));
  }
  out.ran = true;
  out.m_max = m;
  out.bound = dimension_bound(k.edge_count(), m);
  out.margin = out.bound - static_cast<double>(b1);
  out.holds = static_cast<double>(b1) <= out.bound + 1e-9;
  return out;
}

}  // namespace h1min
