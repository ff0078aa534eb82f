#include "upho/kernels.hpp"

namespace upho::kernels {
namespace {

void or_into(word* d, const word* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] |= s[i];
}
void and_into(word* d, const word* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] &= s[i];
}
void andnot_into(word* d, const word* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] &= ~s[i];
}
std::size_t popcount(const word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
  return c;
}
std::size_t and_popcount(const word* a, const word* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return c;
}
bool and_any(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}
bool and_subset(const word* a, const word* b, const word* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i] & ~c[i]) return false;
  return true;
}
std::ptrdiff_t and_first(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    word w = a[i] & b[i];
    if (w) return static_cast<std::ptrdiff_t>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
  }
  return -1;
}
std::ptrdiff_t and_last(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;) {
    word w = a[i] & b[i];
    if (w) return static_cast<std::ptrdiff_t>(i * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(w)));
  }
  return -1;
}

const Table kScalar{"scalar", or_into, and_into, andnot_into, popcount, and_popcount,
                    and_any, and_subset, and_first, and_last};

}  // namespace

const Table& scalar() { return kScalar; }

}  // namespace upho::kernels
