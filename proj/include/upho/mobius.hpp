#pragma once
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "upho/polynomial.hpp"
#include "upho/poset.hpp"

namespace upho {

// Memoizes whole rows mu(x, .) on demand. The row for x is filled by
// increasing rank, so every mu(x,y) reuses the interval values below y.
class MobiusTable {
 public:
  explicit MobiusTable(const GradedPoset& P) : P_(P) {}
  std::int64_t operator()(Element x, Element y);
  // mu(x, z) for every z in element-index order (0 where x is not below z)
  const std::vector<std::int64_t>& row(Element x);

 private:
  const GradedPoset& P_;
  std::mutex mu_;
  std::unordered_map<Element, std::vector<std::int64_t>> rows_;
};

std::int64_t mobius(const GradedPoset& P, Element x, Element y);
IntPolynomial rank_gen_poly(const GradedPoset& P);
IntPolynomial reciprocal_char_poly(const GradedPoset& P);

}  // namespace upho
