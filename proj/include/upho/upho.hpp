#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upho/monoid.hpp"
#include "upho/polynomial.hpp"
#include "upho/poset.hpp"
#include "upho/zoo.hpp"

namespace upho {

// elements of rank <= N of an infinite upho lattice, with all covers among them
struct UphoTruncation {
  GradedPoset poset;
  std::string recipe;  // "partition-infty(k=2)"
  int N = 0;
  std::optional<ZooRecipe> expected_core;
  std::optional<IntPolynomial> expected_chi;
};

UphoTruncation grid(int d, int N);
UphoTruncation boolean_infty(int k, int N);
UphoTruncation subspace_infty(int k, unsigned q, int N);
UphoTruncation partition_infty(int k, int N);
UphoTruncation signed_partition_infty(int k, int N);
UphoTruncation dowling_infty(int k, int m, int N);
UphoTruncation from_monoid(const MonoidPresentation& P, int N, std::uint64_t budget = kDefaultWordBudget);

// recipe names used by the CLI: grid, boolean-infty, subspace-infty,
// partition-infty, signed-partition-infty, dowling-infty
struct TruncationParams {
  int k = 2, q = 2, m = 2, N = 4;
};
UphoTruncation build_truncation(const std::string& name, const TruncationParams& p);
const std::vector<std::string>& truncation_names();

}  // namespace upho
