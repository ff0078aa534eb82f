#include <algorithm>

#include "upho/error.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/verifier.hpp"

namespace upho {

BigMatrix multiply(const BigMatrix& A, const BigMatrix& B) {
  const std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
  BigMatrix C(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
    }
  return C;
}

bool is_identity(const BigMatrix& A) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != A.size()) return false;
    for (std::size_t j = 0; j < A.size(); ++j)
      if (A[i][j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

BigInt complete_h(int k, const std::vector<BigInt>& xs) {
  if (k < 0) return 0;
  std::vector<BigInt> h(static_cast<std::size_t>(k) + 1, 0);
  h[0] = 1;
  for (const auto& x : xs)
    for (int d = 1; d <= k; ++d) h[d] += x * h[d - 1];
  return h[k];
}

BigInt elementary_e(int k, const std::vector<BigInt>& xs) {
  if (k < 0) return 0;
  std::vector<BigInt> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (const auto& x : xs)
    for (int d = k; d >= 1; --d) e[d] += x * e[d - 1];
  return e[k];
}

namespace {

GradedPoset family_member(const std::string& family, int i, int m) {
  if (family == "boolean") return boolean_lattice(i);
  if (family == "partition") return partition_lattice(i + 1);
  if (family == "signed-partition") return signed_partition_lattice(i);
  if (family == "dowling") return dowling_lattice(i, m);
  throw Error(ErrorCode::BadInput, "whitney family must be boolean, partition, signed-partition or dowling");
}

}  // namespace

WhitneyTables whitney_tables(const std::string& family, int n, int m) {
  if (n < 0) throw Error(ErrorCode::BadInput, "n must be >= 0");
  WhitneyTables W;
  const std::size_t sz = static_cast<std::size_t>(n) + 1;
  W.V.assign(sz, std::vector<BigInt>(sz, 0));
  W.v.assign(sz, std::vector<BigInt>(sz, 0));
  std::size_t prev_atoms = 0;
  for (int i = 0; i <= n; ++i) {
    // signed partitions of [0] has no zero-size builder; it is a point
    GradedPoset L = (i == 0 && family == "signed-partition") ? GradedPoset::build(1, {}, std::vector<int>{0})
                                                              : family_member(family, i, m);
    if (L.height() != i) throw Error(ErrorCode::RankMismatch, "L_i must have rank i");
    IntPolynomial F = rank_gen_poly(L), chi = reciprocal_char_poly(L);
    for (int j = 0; j <= i; ++j) {
      W.V[i][j] = F.coeff(static_cast<std::size_t>(i - j));
      W.v[i][j] = chi.coeff(static_cast<std::size_t>(i - j));
    }
    std::size_t atoms = L.atoms().size();
    if (i > 0) W.a.push_back(BigInt(atoms) - BigInt(prev_atoms));
    prev_atoms = atoms;
  }
  return W;
}

bool whitney_inverse_check(const WhitneyTables& W) {
  return is_identity(multiply(W.V, W.v)) && is_identity(multiply(W.v, W.V));
}

SymMatrixResult sym_matrix_inverse_check(const std::vector<BigInt>& a, int size) {
  if (size < 1) throw Error(ErrorCode::BadInput, "size must be >= 1");
  // a_size only ever enters through h_0
  if (a.size() + 1 < static_cast<std::size_t>(size)) throw Error(ErrorCode::BadInput, "need at least size - 1 values");
  SymMatrixResult r;
  const std::size_t n = static_cast<std::size_t>(size);
  r.A.assign(n, std::vector<BigInt>(n, 0));
  r.B.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<BigInt> first_j1(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(j + 1, a.size())));
      std::vector<BigInt> first_i(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      const int d = static_cast<int>(i - j);
      r.A[i][j] = complete_h(d, first_j1);
      r.B[i][j] = (d % 2 ? -1 : 1) * elementary_e(d, first_i);
    }
  r.ok = is_identity(multiply(r.B, r.A)) && is_identity(multiply(r.A, r.B));
  return r;
}

SupersolvableResult supersolvable_factorization_check(const GradedPoset& L, const std::vector<Element>& chain) {
  validate_modular_chain(L, chain);
  SupersolvableResult r;
  auto atoms = L.atoms();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    long c = 0;
    for (Element s : atoms)
      if (L.leq(s, chain[i]) && !L.leq(s, chain[i - 1])) ++c;
    r.a.push_back(c);
  }
  r.product = linear_product(r.a);
  r.chi = reciprocal_char_poly(L);
  r.ok = r.product == r.chi;
  return r;
}

}  // namespace upho
