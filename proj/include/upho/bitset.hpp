#pragma once
#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "upho/kernels.hpp"

namespace upho {

class Bitset {
 public:
  using word = kernels::word;
  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t words() const { return w_.size(); }
  word* data() { return w_.data(); }
  const word* data() const { return w_.data(); }

  void set(std::size_t i) { w_[i >> 6] |= word{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(word{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  void set_all() {
    std::fill(w_.begin(), w_.end(), ~word{0});
    if (nbits_ % 64) w_.back() = (word{1} << (nbits_ % 64)) - 1;
  }

  std::size_t count() const { return kernels::active().popcount(data(), words()); }
  bool any() const {
    for (word x : w_)
      if (x) return true;
    return false;
  }
  std::ptrdiff_t first() const { return next(0); }
  // lowest set index >= from, or -1
  std::ptrdiff_t next(std::size_t from) const {
    if (from >= nbits_) return -1;
    std::size_t i = from >> 6;
    word x = w_[i] & (~word{0} << (from & 63));
    while (true) {
      if (x) return static_cast<std::ptrdiff_t>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
      if (++i >= w_.size()) return -1;
      x = w_[i];
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      word x = w_[i];
      while (x) {
        f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
        x &= x - 1;
      }
    }
  }

  Bitset& operator|=(const Bitset& o) {
    kernels::active().or_into(data(), o.data(), words());
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    kernels::active().and_into(data(), o.data(), words());
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    kernels::active().andnot_into(data(), o.data(), words());
    return *this;
  }
  bool operator==(const Bitset& o) const = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<word> w_;
};

// dense rows of equal width, one allocation
class BitMatrix {
 public:
  using word = kernels::word;
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  word* row(std::size_t r) { return w_.data() + r * wpr_; }
  const word* row(std::size_t r) const { return w_.data() + r * wpr_; }
  void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= word{1} << (c & 63); }
  bool test(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<word> w_;
};

}  // namespace upho
