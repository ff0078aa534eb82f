#pragma once
// Independent reference computations. Nothing here reuses the library's
// order cache, Moebius recursion or series arithmetic.
#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "upho/polynomial.hpp"
#include "upho/poset.hpp"

namespace oracle {

using upho::BigInt;
using upho::GradedPoset;
using Matrix = std::vector<std::vector<std::int64_t>>;

// reflexive-transitive closure by DFS over the cover list
inline std::vector<std::vector<char>> closure(const GradedPoset& P) {
  std::size_t n = P.size();
  std::vector<std::vector<std::size_t>> up(n);
  for (auto c : P.covers()) up[c.lower].push_back(c.upper);
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> st{x};
    le[x][x] = 1;
    while (!st.empty()) {
      auto v = st.back();
      st.pop_back();
      for (auto w : up[v])
        if (!le[x][w]) le[x][w] = 1, st.push_back(w);
    }
  }
  return le;
}

// mu = sum_k (-1)^k (Z - I)^k, i.e. Philip Hall's chain count
inline Matrix mobius_matrix(const GradedPoset& P) {
  std::size_t n = P.size();
  auto le = closure(P);
  Matrix S(n, std::vector<std::int64_t>(n, 0)), Pk(n, std::vector<std::int64_t>(n, 0)), mu(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S[i][j] = (i != j && le[i][j]) ? 1 : 0;
  for (std::size_t i = 0; i < n; ++i) Pk[i][i] = 1;
  for (int k = 0; k <= P.height() + 1; ++k) {
    std::int64_t sign = (k % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu[i][j] += sign * Pk[i][j];
    Matrix next(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t) {
        if (!Pk[i][t]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (S[t][j]) next[i][j] += Pk[i][t];
      }
    Pk = std::move(next);
  }
  return mu;
}

// isomorphism by trying every rank-preserving bijection
inline bool brute_isomorphic(const GradedPoset& P, const GradedPoset& Q) {
  if (P.size() != Q.size() || P.height() != Q.height()) return false;
  for (int r = 0; r <= P.height(); ++r)
    if (P.level_size(r) != Q.level_size(r)) return false;
  auto lp = closure(P), lq = closure(Q);
  std::size_t n = P.size();
  std::vector<std::size_t> pe, qe;
  for (int r = 0; r <= P.height(); ++r) {
    for (auto x : P.level(r)) pe.push_back(x);
    for (auto x : Q.level(r)) qe.push_back(x);
  }
  std::vector<std::size_t> img(n);
  std::function<bool(int)> level_perm = [&](int r) -> bool {
    if (r > P.height()) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (lp[a][b] != lq[img[a]][img[b]]) return false;
      return true;
    }
    std::vector<std::size_t> q(Q.level(r).begin(), Q.level(r).end());
    std::sort(q.begin(), q.end());
    auto p = P.level(r);
    do {
      for (std::size_t i = 0; i < p.size(); ++i) img[p[i]] = q[i];
      if (level_perm(r + 1)) return true;
    } while (std::next_permutation(q.begin(), q.end()));
    return false;
  };
  return level_perm(0);
}

// power series inverse by schoolbook recurrence on plain vectors
inline std::vector<BigInt> inverse(const std::vector<BigInt>& p, std::size_t N) {
  std::vector<BigInt> q(N + 1);
  BigInt c0 = p[0];
  for (std::size_t k = 0; k <= N; ++k) {
    BigInt s = k == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t j = 1; j <= k && j < p.size(); ++j) s -= p[j] * q[k - j];
    q[k] = s * c0;  // c0 = +-1 is its own inverse
  }
  return q;
}

inline std::vector<BigInt> truncated_product(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t N) {
  std::vector<BigInt> c(N + 1);
  for (std::size_t i = 0; i < a.size() && i <= N; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= N; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Stirling numbers via their recurrences
inline BigInt stirling2(int n, int k) {
  std::vector<std::vector<BigInt>> S(n + 1, std::vector<BigInt>(n + 1));
  S[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) S[i][j] = S[i - 1][j - 1] + BigInt(j) * S[i - 1][j];
  return k <= n ? S[n][k] : BigInt(0);
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// set partitions of [n] as restricted growth strings
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  std::function<void(int, int)> go = [&](int i, int mx) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      a[i] = b;
      go(i + 1, std::max(mx, b));
    }
  };
  if (n == 0) return {{}};
  a[0] = 0;
  go(1, 0);
  return out;
}

}  // namespace oracle
