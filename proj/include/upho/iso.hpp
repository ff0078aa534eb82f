#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "upho/poset.hpp"

namespace upho {

struct PosetMap {
  std::vector<Element> image;  // image[p] in the target
  bool rank_preserving = true;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// Joint colour refinement, then rank-by-rank backtracking. Deterministic.
// Throws SearchBudgetExceeded if the node budget runs out.
std::optional<PosetMap> is_isomorphic(const GradedPoset& P, const GradedPoset& Q,
                                      std::uint64_t budget = kDefaultSearchBudget);

// stable colours of the pair (P colours first, then Q colours)
std::vector<std::uint32_t> refine_colours(const GradedPoset& P, const GradedPoset& Q);

enum class SearchStatus { Found, None, Inconclusive };

struct EmbeddingResult {
  SearchStatus status = SearchStatus::None;
  std::optional<PosetMap> map;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
};

// injective, rank preserving, order preserving and reflecting
EmbeddingResult find_rank_preserving_embedding(const GradedPoset& P, const GradedPoset& Q,
                                               std::uint64_t budget = kDefaultSearchBudget);
// nullopt on "none"; throws SearchBudgetExceeded on an exhausted budget
std::optional<PosetMap> rank_preserving_embedding(const GradedPoset& P, const GradedPoset& Q);

// checks both directions of the order and rank preservation
bool is_embedding(const GradedPoset& P, const GradedPoset& Q, const PosetMap& f);
bool is_isomorphism(const GradedPoset& P, const GradedPoset& Q, const PosetMap& f);

}  // namespace upho
