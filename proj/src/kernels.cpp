#include <cstdlib>
#include <cstring>

#include "upho/kernels.hpp"

namespace upho::kernels {

extern const Table kAvx2Table;

const Table* avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return ok ? &kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table* sel = [] {
    const char* env = std::getenv("UPHO_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar();
    const Table* v = avx2();
    return v ? v : &scalar();
  }();
  return *sel;
}

}  // namespace upho::kernels
