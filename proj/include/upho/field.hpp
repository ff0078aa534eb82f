#pragma once
#include <cstdint>
#include <vector>

namespace upho {

// GF(q) for q in {2,3,4,5}; elements are 0..q-1, log/antilog tables
class FiniteField {
 public:
  explicit FiniteField(unsigned q);
  unsigned order() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg_[b]); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  std::uint8_t inv(std::uint8_t a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }

 private:
  unsigned q_;
  std::vector<std::uint8_t> add_, neg_, log_, exp_;
};

using Vec = std::vector<std::uint8_t>;

// reduced row echelon form in place; returns the rank (zero rows dropped)
std::size_t rref(const FiniteField& F, std::vector<Vec>& rows);

}  // namespace upho
