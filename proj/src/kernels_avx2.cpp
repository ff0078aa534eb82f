#include <immintrin.h>

#include "upho/kernels.hpp"

namespace upho::kernels {
namespace avx2_impl {

using v256 = __m256i;

inline v256 load(const word* p) { return _mm256_loadu_si256(reinterpret_cast<const v256*>(p)); }
inline void store(word* p, v256 v) { _mm256_storeu_si256(reinterpret_cast<v256*>(p), v); }

// nibble-table popcount, summed per 64-bit lane
inline v256 popcnt_lanes(v256 v) {
  const v256 lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                    0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const v256 low = _mm256_set1_epi8(0x0f);
  v256 lo = _mm256_and_si256(v, low);
  v256 hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  v256 cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t hsum(v256 acc) {
  alignas(32) word t[4];
  _mm256_store_si256(reinterpret_cast<v256*>(t), acc);
  return static_cast<std::size_t>(t[0] + t[1] + t[2] + t[3]);
}

void or_into(word* d, const word* s, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, _mm256_or_si256(load(d + i), load(s + i)));
  for (; i < n; ++i) d[i] |= s[i];
}
void and_into(word* d, const word* s, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(d + i, _mm256_and_si256(load(d + i), load(s + i)));
  for (; i < n; ++i) d[i] &= s[i];
}
void andnot_into(word* d, const word* s, std::size_t n) {
  std::size_t i = 0;
  // andnot(a,b) = ~a & b
  for (; i + 4 <= n; i += 4) store(d + i, _mm256_andnot_si256(load(s + i), load(d + i)));
  for (; i < n; ++i) d[i] &= ~s[i];
}
std::size_t popcount(const word* a, std::size_t n) {
  std::size_t i = 0;
  v256 acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcnt_lanes(load(a + i)));
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return c;
}
std::size_t and_popcount(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  v256 acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, popcnt_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return c;
}
bool and_any(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    v256 x = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}
bool and_subset(const word* a, const word* b, const word* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    v256 ab = _mm256_and_si256(load(a + i), load(b + i));
    // testc(c, ab): ab & ~c == 0
    if (!_mm256_testc_si256(load(c + i), ab)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & b[i] & ~c[i]) return false;
  return true;
}
std::ptrdiff_t and_first(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    v256 x = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) break;
  }
  for (; i < n; ++i) {
    word w = a[i] & b[i];
    if (w) return static_cast<std::ptrdiff_t>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
  }
  return -1;
}
std::ptrdiff_t and_last(const word* a, const word* b, std::size_t n) {
  std::size_t i = n;
  // tail first so that the vector loop works on aligned groups of four from 0
  std::size_t vec_end = n - n % 4;
  for (; i > vec_end;) {
    --i;
    word w = a[i] & b[i];
    if (w) return static_cast<std::ptrdiff_t>(i * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(w)));
  }
  while (i >= 4) {
    i -= 4;
    v256 x = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) {
      for (std::size_t j = i + 4; j-- > i;) {
        word w = a[j] & b[j];
        if (w) return static_cast<std::ptrdiff_t>(j * 64 + 63 - static_cast<std::size_t>(__builtin_clzll(w)));
      }
    }
  }
  return -1;
}

}  // namespace avx2_impl

extern const Table kAvx2Table;
const Table kAvx2Table{"avx2",
                       avx2_impl::or_into,
                       avx2_impl::and_into,
                       avx2_impl::andnot_into,
                       avx2_impl::popcount,
                       avx2_impl::and_popcount,
                       avx2_impl::and_any,
                       avx2_impl::and_subset,
                       avx2_impl::and_first,
                       avx2_impl::and_last};

}  // namespace upho::kernels
