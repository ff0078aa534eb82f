#pragma once
// Word-level bitset kernels. A scalar reference table is always present;
// an AVX2 table is picked at runtime when the CPU has it.
#include <cstddef>
#include <cstdint>

namespace upho::kernels {

using word = std::uint64_t;

struct Table {
  const char* name;
  void (*or_into)(word* dst, const word* src, std::size_t n);
  void (*and_into)(word* dst, const word* src, std::size_t n);
  void (*andnot_into)(word* dst, const word* src, std::size_t n);  // dst &= ~src
  std::size_t (*popcount)(const word* a, std::size_t n);
  std::size_t (*and_popcount)(const word* a, const word* b, std::size_t n);
  bool (*and_any)(const word* a, const word* b, std::size_t n);
  // (a & b) is a subset of c
  bool (*and_subset)(const word* a, const word* b, const word* c, std::size_t n);
  // lowest / highest set bit of a & b, or -1
  std::ptrdiff_t (*and_first)(const word* a, const word* b, std::size_t n);
  std::ptrdiff_t (*and_last)(const word* a, const word* b, std::size_t n);
};

const Table& scalar();
// nullptr when the running CPU lacks AVX2
const Table* avx2();
// selected once; UPHO_SIMD=scalar in the environment pins the scalar table
const Table& active();

}  // namespace upho::kernels
