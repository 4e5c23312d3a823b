#include "bits.hpp"

#include "errors.hpp"

namespace h1min {

namespace {

// Row-reduced echelon form in place; returns (pivot row, pivot col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> rref(std::vector<BitVec>& rows, std::size_t cols,
                                                      std::vector<std::uint8_t>* aug) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
    std::size_t p = rk;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rk]);
    if (aug) std::swap((*aug)[p], (*aug)[rk]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rk && rows[r].get(c)) {
        rows[r] ^= rows[rk];
        if (aug) (*aug)[r] ^= (*aug)[rk];
      }
    }
    pivots.emplace_back(rk, c);
    ++rk;
  }
  return pivots;
}

}  // namespace

std::size_t BitMatrix::rank() const {
  std::vector<BitVec> work(rows_);
  return rref(work, cols_, nullptr).size();
}

std::optional<BitVec> BitMatrix::solve(const BitVec& b) const {
  if (b.size() != rows_.size())
    fail(ErrorCode::argument, "solve: right-hand side has " + std::to_string(b.size()) +
                                  " entries, matrix has " + std::to_string(rows_.size()) +
                                  " rows");
  std::vector<BitVec> work(rows_);
  std::vector<std::uint8_t> aug(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) aug[r] = b.get(r) ? 1 : 0;
  auto pivots = rref(work, cols_, &aug);
  for (std::size_t r = pivots.size(); r < work.size(); ++r)
    if (aug[r]) return std::nullopt;
  BitVec x(cols_);
  for (auto [r, c] : pivots)
    if (aug[r]) x.set(c, true);
  return x;
}

std::vector<BitVec> BitMatrix::kernel_basis() const {
  std::vector<BitVec> work(rows_);
  auto pivots = rref(work, cols_, nullptr);
  std::vector<bool> is_pivot(cols_, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVec x(cols_);
    x.set(f, true);
    for (auto [r, c] : pivots)
      if (work[r].get(f)) x.set(c, true);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace h1min
