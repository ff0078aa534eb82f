#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "upho/bitset.hpp"

namespace upho {

using Element = std::uint32_t;

struct Cover {
  Element lower;
  Element upper;
  bool operator==(const Cover&) const = default;
};

// Reflexive order relation in "position" space: positions list the elements
// sorted by (rank, index), so the lowest set bit of an up-row intersection is
// a minimum-rank common upper bound.
class OrderRelation {
 public:
  using word = kernels::word;
  std::size_t size() const { return elem_.size(); }
  std::size_t words() const { return up_.words_per_row(); }
  std::size_t pos(Element x) const { return pos_[x]; }
  Element elem(std::size_t p) const { return elem_[p]; }
  const word* up_row(Element x) const { return up_.row(pos_[x]); }
  const word* down_row(Element x) const { return down_.row(pos_[x]); }
  bool leq(Element x, Element y) const { return up_.test(pos_[x], pos_[y]); }
  Bitset up_bits(Element x) const;    // position space
  Bitset down_bits(Element x) const;  // position space

 private:
  friend class GradedPoset;
  std::vector<std::uint32_t> pos_;
  std::vector<Element> elem_;
  BitMatrix up_, down_;
};

class GradedPoset {
 public:
  GradedPoset() = default;

  // Validates and builds. Ranks may be omitted and are then inferred from the
  // covers (minimal elements get rank 0).
  static GradedPoset build(std::size_t n, std::vector<Cover> covers,
                           std::optional<std::vector<int>> ranks = std::nullopt,
                           std::vector<std::string> labels = {});

  std::size_t size() const { return rank_.size(); }
  int rank(Element x) const { return rank_[x]; }
  const std::vector<int>& ranks() const { return rank_; }
  int height() const { return rank_.empty() ? -1 : static_cast<int>(level_off_.size()) - 2; }
  std::span<const Element> upper_covers(Element x) const {
    return {up_adj_.data() + up_off_[x], up_adj_.data() + up_off_[x + 1]};
  }
  std::span<const Element> lower_covers(Element x) const {
    return {dn_adj_.data() + dn_off_[x], dn_adj_.data() + dn_off_[x + 1]};
  }
  // elements of rank r in increasing index order
  std::span<const Element> level(int r) const {
    if (r < 0 || r > height()) return {};
    return {level_elems_.data() + level_off_[r], level_elems_.data() + level_off_[r + 1]};
  }
  std::size_t level_size(int r) const { return level(r).size(); }
  const std::vector<Cover>& covers() const { return covers_; }

  bool bounded_below() const { return level_size(0) == 1; }
  std::optional<Element> bottom() const;
  std::optional<Element> top() const;
  std::vector<Element> atoms() const;
  std::vector<Element> maximal_elements() const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Element x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(const std::string& s) const;

  // lazily materialized, shared between copies, thread-safe
  const OrderRelation& order() const;
  bool leq(Element x, Element y) const { return order().leq(x, y); }

 private:
  std::vector<int> rank_;
  std::vector<Cover> covers_;
  std::vector<std::uint32_t> up_off_, dn_off_;
  std::vector<Element> up_adj_, dn_adj_;
  std::vector<std::uint32_t> level_off_;
  std::vector<Element> level_elems_;
  std::vector<std::string> labels_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

inline GradedPoset build_poset(std::size_t n, std::vector<Cover> covers,
                               std::optional<std::vector<int>> ranks = std::nullopt,
                               std::vector<std::string> labels = {}) {
  return GradedPoset::build(n, std::move(covers), std::move(ranks), std::move(labels));
}

// BFS over cover edges, element-index space
Bitset upset_of(const GradedPoset& P, Element x);
Bitset downset_of(const GradedPoset& P, Element x);

// Induced poset on a subset whose restricted cover relation is its Hasse
// diagram (intervals, filters, ideals, rank truncations, trims). Ranks are
// shifted by -rank_shift. Elements are renumbered in the order given.
GradedPoset restrict_to(const GradedPoset& P, const std::vector<Element>& keep, int rank_shift,
                        std::vector<Element>* old_index = nullptr);

}  // namespace upho
