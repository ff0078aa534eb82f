#pragma once
// level-by-level construction from canonical byte-string keys
#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "upho/error.hpp"
#include "upho/poset.hpp"

namespace upho::detail {

struct Levels {
  std::vector<std::vector<std::string>> keys;
  // per rank r: (index in level r, index in level r+1)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> covers;
};

using Emit = std::function<void(std::string)>;
using Moves = std::function<void(const std::string&, const Emit&)>;

// moves(key, emit) emits the canonical keys covering key
inline Levels build_levels(std::vector<std::string> start, const Moves& moves, int max_rank,
                           std::size_t guard = kMaxElements) {
  Levels L;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  L.keys.push_back(std::move(start));
  std::size_t total = L.keys[0].size();
  for (int r = 0; max_rank < 0 || r < max_rank; ++r) {
    std::unordered_map<std::string, std::uint32_t> next;
    std::vector<std::string> order;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cv;
    const auto& cur = L.keys[r];
    for (std::uint32_t i = 0; i < cur.size(); ++i) {
      moves(cur[i], [&](std::string k) {
        auto it = next.find(k);
        std::uint32_t j;
        if (it == next.end()) {
          j = static_cast<std::uint32_t>(order.size());
          next.emplace(k, j);
          order.push_back(std::move(k));
          if (total + order.size() > guard)
            throw Error(ErrorCode::SizeGuard, "more than " + std::to_string(guard) + " elements");
        } else {
          j = it->second;
        }
        cv.emplace_back(i, j);
      });
    }
    if (order.empty()) break;
    // sort the new level by key and renumber
    std::vector<std::uint32_t> perm(order.size());
    for (std::uint32_t j = 0; j < perm.size(); ++j) perm[j] = j;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return order[a] < order[b]; });
    std::vector<std::uint32_t> where(order.size());
    std::vector<std::string> sorted(order.size());
    for (std::uint32_t j = 0; j < perm.size(); ++j) {
      where[perm[j]] = j;
      sorted[j] = std::move(order[perm[j]]);
    }
    for (auto& c : cv) c.second = where[c.second];
    std::sort(cv.begin(), cv.end());
    cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
    total += sorted.size();
    L.keys.push_back(std::move(sorted));
    L.covers.push_back(std::move(cv));
  }
  return L;
}

inline GradedPoset assemble(const Levels& L, const std::function<std::string(const std::string&)>& label) {
  std::vector<std::uint32_t> off(L.keys.size() + 1, 0);
  for (std::size_t r = 0; r < L.keys.size(); ++r) off[r + 1] = off[r] + static_cast<std::uint32_t>(L.keys[r].size());
  const std::size_t n = off.back();
  std::vector<int> rk(n);
  std::vector<std::string> lab(n);
  for (std::size_t r = 0; r < L.keys.size(); ++r)
    for (std::size_t i = 0; i < L.keys[r].size(); ++i) {
      rk[off[r] + i] = static_cast<int>(r);
      lab[off[r] + i] = label(L.keys[r][i]);
    }
  std::vector<Cover> cv;
  for (std::size_t r = 0; r < L.covers.size(); ++r)
    for (const auto& [i, j] : L.covers[r]) cv.push_back({off[r] + i, off[r + 1] + j});
  return GradedPoset::build(n, std::move(cv), std::move(rk), std::move(lab));
}

// adds a single top element above every maximal element
inline GradedPoset with_top(const GradedPoset& P, const std::string& top_label) {
  std::vector<Cover> cv = P.covers();
  std::vector<int> rk = P.ranks();
  std::vector<std::string> lab = P.labels();
  Element t = static_cast<Element>(P.size());
  int h = P.height() + 1;
  for (Element x : P.maximal_elements()) {
    if (P.rank(x) != h - 1) throw Error(ErrorCode::RankMismatch, "maximal elements at different ranks");
    cv.push_back({x, t});
  }
  rk.push_back(h);
  lab.push_back(top_label);
  return GradedPoset::build(P.size() + 1, std::move(cv), std::move(rk), std::move(lab));
}

inline std::string elems_str(const std::vector<int>& xs, int nmax) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (nmax > 9 && i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace upho::detail

#include "upho/field.hpp"

namespace upho {
std::string subspace_key(const std::vector<Vec>& rows, std::size_t dim);
std::vector<Vec> subspace_unkey(const std::string& k, std::size_t dim);
std::string subspace_label(const std::vector<Vec>& rows, std::size_t shown);
namespace detail {
// restricted growth key of a block assignment and back
std::string rgs(const std::vector<int>& b);
std::vector<int> unkey(const std::string& k);
int block_count(const std::vector<int>& b);
// signed / labelled elements: pairs (block, tag), block 0 = zero or uncovered
struct Tagged {
  std::vector<int> block;
  std::vector<int> tag;
};
std::string tagged_key(Tagged t, int m);
Tagged tagged_unkey(const std::string& k);
int tagged_blocks(const Tagged& t);
std::string tagged_label(const Tagged& t, const std::string& special_prefix,
                         const std::function<std::string(int elem, int tag)>& fmt);
Levels subspace_levels(std::size_t ambient, unsigned q, int max_dim, int k);
}
}  // namespace upho
