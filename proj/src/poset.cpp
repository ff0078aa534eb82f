#include "upho/poset.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "upho/error.hpp"

namespace upho {

struct GradedPoset::Cache {
  std::once_flag once;
  OrderRelation order;
};

Bitset OrderRelation::up_bits(Element x) const {
  Bitset b(size());
  std::copy(up_row(x), up_row(x) + words(), b.data());
  return b;
}
Bitset OrderRelation::down_bits(Element x) const {
  Bitset b(size());
  std::copy(down_row(x), down_row(x) + words(), b.data());
  return b;
}

namespace {

void csr(std::size_t n, const std::vector<Cover>& cv, bool upward, std::vector<std::uint32_t>& off,
         std::vector<Element>& adj) {
  off.assign(n + 1, 0);
  for (const auto& c : cv) ++off[(upward ? c.lower : c.upper) + 1];
  for (std::size_t i = 0; i < n; ++i) off[i + 1] += off[i];
  adj.assign(cv.size(), 0);
  std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
  for (const auto& c : cv) {
    Element from = upward ? c.lower : c.upper;
    adj[fill[from]++] = upward ? c.upper : c.lower;
  }
  for (std::size_t i = 0; i < n; ++i) std::sort(adj.begin() + off[i], adj.begin() + off[i + 1]);
}

// true when some cover (x,y) is also reachable by a path of length >= 2
bool has_redundant_cover(std::size_t n, const std::vector<Cover>& cv,
                         const std::vector<std::uint32_t>& topo) {
  std::vector<std::vector<Element>> up(n);
  for (const auto& c : cv) up[c.lower].push_back(c.upper);
  // reach[x] = elements strictly above x
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t t = n; t-- > 0;) {
    Element x = topo[t];
    for (Element y : up[x]) {
      reach[x].set(y);
      reach[x] |= reach[y];
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (Element y : up[x])
      for (Element z : up[x])
        if (z != y && reach[z].test(y)) return true;
  return false;
}

}  // namespace

GradedPoset GradedPoset::build(std::size_t n, std::vector<Cover> covers,
                               std::optional<std::vector<int>> ranks,
                               std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::BadInput, "empty poset");
  if (n > (std::size_t{1} << 31)) throw Error(ErrorCode::SizeGuard, "too many elements");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorCode::BadInput, "label count differs from n");
  if (ranks && ranks->size() != n) throw Error(ErrorCode::BadInput, "rank count differs from n");
  {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(covers.size() * 2);
    for (const auto& c : covers) {
      if (c.lower >= n || c.upper >= n) throw Error(ErrorCode::BadInput, "cover index out of range");
      if (c.lower == c.upper)
        throw Error(ErrorCode::CycleDetected, "self-loop at " + std::to_string(c.lower));
      if (!seen.insert((std::uint64_t{c.lower} << 32) | c.upper).second)
        throw Error(ErrorCode::BadInput, "duplicate cover (" + std::to_string(c.lower) + "," +
                                             std::to_string(c.upper) + ")");
    }
  }
  // Kahn order
  std::vector<std::uint32_t> indeg(n, 0);
  std::vector<std::vector<Element>> up(n);
  for (const auto& c : covers) {
    up[c.lower].push_back(c.upper);
    ++indeg[c.upper];
  }
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) topo.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t h = 0; h < topo.size(); ++h)
    for (Element y : up[topo[h]])
      if (--indeg[y] == 0) topo.push_back(y);
  if (topo.size() != n) throw Error(ErrorCode::CycleDetected, "cover digraph has a cycle");

  std::vector<int> rk;
  if (ranks) {
    rk = *ranks;
    for (int r : rk)
      if (r < 0) throw Error(ErrorCode::BadInput, "negative rank");
  } else {
    rk.assign(n, 0);
    for (std::uint32_t x : topo)
      for (Element y : up[x]) rk[y] = std::max(rk[y], rk[x] + 1);
  }
  const Cover* bad = nullptr;
  for (const auto& c : covers)
    if (rk[c.upper] != rk[c.lower] + 1) {
      bad = &c;
      break;
    }
  if (bad) {
    // a transitively implied cover always breaks rank+1, so name it NotReduced
    if (n <= 4096 && has_redundant_cover(n, covers, topo))
      throw Error(ErrorCode::NotReduced, "a cover is implied by transitivity");
    throw Error(ErrorCode::RankMismatch, "cover (" + std::to_string(bad->lower) + "," +
                                             std::to_string(bad->upper) + ") does not raise rank by 1");
  }
  {
    std::vector<char> has_lower(n, 0);
    for (const auto& c : covers) has_lower[c.upper] = 1;
    for (std::size_t x = 0; x < n; ++x)
      if (rk[x] > 0 && !has_lower[x])
        throw Error(ErrorCode::RankMismatch,
                    "minimal element " + std::to_string(x) + " has positive rank");
  }

  GradedPoset P;
  P.rank_ = std::move(rk);
  P.covers_ = std::move(covers);
  P.labels_ = std::move(labels);
  csr(n, P.covers_, true, P.up_off_, P.up_adj_);
  csr(n, P.covers_, false, P.dn_off_, P.dn_adj_);
  int h = *std::max_element(P.rank_.begin(), P.rank_.end());
  P.level_off_.assign(static_cast<std::size_t>(h) + 2, 0);
  for (int r : P.rank_) ++P.level_off_[static_cast<std::size_t>(r) + 1];
  for (int r = 0; r <= h; ++r) {
    if (P.level_off_[r + 1] == 0) throw Error(ErrorCode::RankMismatch, "empty rank level " + std::to_string(r));
    P.level_off_[r + 1] += P.level_off_[r];
  }
  P.level_elems_.resize(n);
  std::vector<std::uint32_t> fill(P.level_off_.begin(), P.level_off_.end() - 1);
  for (std::size_t x = 0; x < n; ++x) P.level_elems_[fill[P.rank_[x]]++] = static_cast<Element>(x);
  P.cache_ = std::make_shared<Cache>();
  return P;
}

std::optional<Element> GradedPoset::bottom() const {
  if (level_size(0) != 1) return std::nullopt;
  return level(0)[0];
}

std::optional<Element> GradedPoset::top() const {
  if (level_size(height()) != 1) return std::nullopt;
  Element t = level(height())[0];
  // unique maximum: every other element has an upper cover
  for (std::size_t x = 0; x < size(); ++x)
    if (x != t && upper_covers(static_cast<Element>(x)).empty()) return std::nullopt;
  return t;
}

std::vector<Element> GradedPoset::atoms() const {
  auto l = level(1);
  return {l.begin(), l.end()};
}

std::vector<Element> GradedPoset::maximal_elements() const {
  std::vector<Element> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (upper_covers(static_cast<Element>(x)).empty()) out.push_back(static_cast<Element>(x));
  return out;
}

std::string GradedPoset::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::optional<Element> GradedPoset::find_label(const std::string& s) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == s) return static_cast<Element>(i);
  return std::nullopt;
}

const OrderRelation& GradedPoset::order() const {
  std::call_once(cache_->once, [this] {
    OrderRelation& R = cache_->order;
    const std::size_t n = size();
    R.elem_.assign(level_elems_.begin(), level_elems_.end());
    R.pos_.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) R.pos_[R.elem_[p]] = static_cast<std::uint32_t>(p);
    R.up_ = BitMatrix(n, n);
    R.down_ = BitMatrix(n, n);
    const auto& K = kernels::active();
    const std::size_t w = R.up_.words_per_row();
    // ranks only grow along covers, so position order is a topological order
    for (std::size_t p = n; p-- > 0;) {
      Element x = R.elem_[p];
      R.up_.set(p, p);
      for (Element y : upper_covers(x)) K.or_into(R.up_.row(p), R.up_.row(R.pos_[y]), w);
    }
    for (std::size_t p = 0; p < n; ++p) {
      Element x = R.elem_[p];
      R.down_.set(p, p);
      for (Element y : lower_covers(x)) K.or_into(R.down_.row(p), R.down_.row(R.pos_[y]), w);
    }
  });
  return cache_->order;
}

Bitset upset_of(const GradedPoset& P, Element x) {
  Bitset b(P.size());
  std::vector<Element> st{x};
  b.set(x);
  while (!st.empty()) {
    Element v = st.back();
    st.pop_back();
    for (Element y : P.upper_covers(v))
      if (!b.test(y)) {
        b.set(y);
        st.push_back(y);
      }
  }
  return b;
}

Bitset downset_of(const GradedPoset& P, Element x) {
  Bitset b(P.size());
  std::vector<Element> st{x};
  b.set(x);
  while (!st.empty()) {
    Element v = st.back();
    st.pop_back();
    for (Element y : P.lower_covers(v))
      if (!b.test(y)) {
        b.set(y);
        st.push_back(y);
      }
  }
  return b;
}

GradedPoset restrict_to(const GradedPoset& P, const std::vector<Element>& keep, int rank_shift,
                        std::vector<Element>* old_index) {
  std::vector<std::int64_t> idx(P.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Cover> cv;
  std::vector<int> rk(keep.size());
  std::vector<std::string> lab;
  if (P.has_labels()) lab.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Element x = keep[i];
    rk[i] = P.rank(x) - rank_shift;
    if (P.has_labels()) lab.push_back(P.label(x));
    for (Element y : P.upper_covers(x))
      if (idx[y] >= 0) cv.push_back({static_cast<Element>(i), static_cast<Element>(idx[y])});
  }
  if (old_index) *old_index = keep;
  return GradedPoset::build(keep.size(), std::move(cv), std::move(rk), std::move(lab));
}

}  // namespace upho
