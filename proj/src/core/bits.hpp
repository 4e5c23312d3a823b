#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace h1min {

// Packed vector over F2. Addition is XOR; trailing bits past size() stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_indices(std::size_t n, const std::vector<std::uint32_t>& idx) {
    BitVec v(n);
    for (auto i : idx) v.set(i, true);
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool b) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    std::size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
    for (std::size_t k = 0; k < n; ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  // Lowest set bit, or size() if empty.
  std::size_t lowest() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (k << 6) + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
    return n_;
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(popcount());
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        out.push_back(static_cast<std::uint32_t>((k << 6) + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // Order on supports viewed as sorted index sequences, so {0,2} < {1},
  // {0} < {0,2} and {0,2} < {0,3}.
  bool lex_less(const BitVec& o) const {
    std::size_t d = n_;
    std::size_t wk = 0;
    for (; wk < w_.size(); ++wk) {
      std::uint64_t diff = w_[wk] ^ o.w_[wk];
      if (diff) {
        d = (wk << 6) + static_cast<std::size_t>(__builtin_ctzll(diff));
        break;
      }
    }
    if (d >= n_) return false;
    auto any_above = [&](const BitVec& v) {
      std::uint64_t mask = (d & 63) == 63 ? 0 : (~std::uint64_t{0} << ((d & 63) + 1));
      if (v.w_[wk] & mask) return true;
      for (std::size_t j = wk + 1; j < v.w_.size(); ++j)
        if (v.w_[j]) return true;
      return false;
    };
    // The holder of the lowest differing index wins unless the other side has
    // nothing at or beyond it (proper prefix comes first).
    return get(d) ? any_above(o) : !any_above(*this);
  }

  std::uint64_t word(std::size_t k) const { return w_[k]; }
  std::size_t word_count() const { return w_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Incremental echelon basis over F2. Stored rows have pairwise distinct
// pivots (pivot = lowest set bit) and are kept sorted by pivot, so one
// ascending pass reduces any vector. Optional tags record how each stored
// row was produced in some generator space.
class EchelonSpace {
 public:
  EchelonSpace() = default;

  std::size_t rank() const { return rows_.size(); }

  BitVec reduce(BitVec v) const {
    for (const auto& r : rows_) {
      if (r.pivot >= v.size()) break;
      if (v.get(r.pivot)) v ^= r.vec;
    }
    return v;
  }

  // As reduce(), also folds the tags of every row used into tag_acc.
  BitVec reduce_tagged(BitVec v, BitVec& tag_acc) const {
    for (const auto& r : rows_) {
      if (v.get(r.pivot)) {
        v ^= r.vec;
        tag_acc ^= r.tag;
      }
    }
    return v;
  }

  bool add(const BitVec& v) { return add_tagged(v, BitVec()); }

  bool add_tagged(const BitVec& v, const BitVec& tag) {
    BitVec acc = tag;
    BitVec r = tag.size() ? reduce_tagged(v, acc) : reduce(v);
    if (r.none()) return false;
    Row row{r.lowest(), std::move(r), std::move(acc)};
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < row.pivot) ++it;
    rows_.insert(it, std::move(row));
    return true;
  }

  bool contains(const BitVec& v) const { return reduce(v).none(); }

 private:
  struct Row {
    std::size_t pivot;
    BitVec vec;
    BitVec tag;
  };
  std::vector<Row> rows_;
};

// Dense bit matrix over F2, one BitVec per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix from_columns(std::size_t nrows, const std::vector<BitVec>& cols) {
    BitMatrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i)
        if (cols[j].get(i)) m.set(i, j, true);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool b) { rows_[r].set(c, b); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  std::size_t rank() const;

  // Any solution x of Mx = b, or nullopt when inconsistent.
  std::optional<BitVec> solve(const BitVec& b) const;

  // Basis of {x : Mx = 0}, one vector per free column, in column order.
  std::vector<BitVec> kernel_basis() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

}  // namespace h1min
