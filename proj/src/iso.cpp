#include "upho/iso.hpp"

#include <algorithm>
#include <map>

#include "upho/error.hpp"

namespace upho {

std::vector<std::uint32_t> refine_colours(const GradedPoset& P, const GradedPoset& Q) {
  const std::size_t nP = P.size(), n = P.size() + Q.size();
  auto G = [&](std::size_t v) -> const GradedPoset& { return v < nP ? P : Q; };
  auto loc = [&](std::size_t v) { return static_cast<Element>(v < nP ? v : v - nP); };
  auto glob = [&](std::size_t v, Element e) { return v < nP ? std::size_t{e} : nP + e; };

  std::vector<std::uint32_t> col(n);
  for (std::size_t v = 0; v < n; ++v) col[v] = static_cast<std::uint32_t>(G(v).rank(loc(v)));
  std::size_t classes = 0;
  {
    std::vector<std::uint32_t> c = col;
    std::sort(c.begin(), c.end());
    classes = static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<std::uint32_t> order(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(col[v]);
      auto up = G(v).upper_covers(loc(v));
      auto dn = G(v).lower_covers(loc(v));
      s.push_back(static_cast<std::uint32_t>(up.size()));
      std::size_t a = s.size();
      for (Element e : up) s.push_back(col[glob(v, e)]);
      std::sort(s.begin() + a, s.end());
      s.push_back(static_cast<std::uint32_t>(dn.size()));
      a = s.size();
      for (Element e : dn) s.push_back(col[glob(v, e)]);
      std::sort(s.begin() + a, s.end());
    }
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<std::uint32_t>(v);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return sig[a] < sig[b] || (sig[a] == sig[b] && a < b);
    });
    std::vector<std::uint32_t> nc(n);
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
      nc[order[i]] = id;
    }
    std::size_t nclasses = n ? id + 1 : 0;
    col.swap(nc);
    if (nclasses == classes) break;
    classes = nclasses;
  }
  return col;
}

std::optional<PosetMap> is_isomorphic(const GradedPoset& P, const GradedPoset& Q,
                                      std::uint64_t budget) {
  if (P.size() != Q.size() || P.height() != Q.height() || P.covers().size() != Q.covers().size())
    return std::nullopt;
  for (int r = 0; r <= P.height(); ++r)
    if (P.level_size(r) != Q.level_size(r)) return std::nullopt;
  const std::size_t n = P.size();
  auto col = refine_colours(P, Q);
  {
    std::vector<std::uint32_t> a(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::uint32_t> b(col.begin() + static_cast<std::ptrdiff_t>(n), col.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  auto cP = [&](Element v) { return col[v]; };
  auto cQ = [&](Element v) { return col[n + v]; };

  // P elements in (rank, index) order; every non-minimal one has a lower cover earlier
  std::vector<Element> seq;
  seq.reserve(n);
  for (int r = 0; r <= P.height(); ++r)
    for (Element v : P.level(r)) seq.push_back(v);

  std::vector<Element> f(n, 0);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;

  auto candidates = [&](Element v, std::vector<Element>& out) {
    out.clear();
    auto lc = P.lower_covers(v);
    if (lc.empty()) {
      for (Element q : Q.level(P.rank(v)))
        if (!used[q] && cQ(q) == cP(v) && Q.lower_covers(q).empty()) out.push_back(q);
      return;
    }
    ++stamp;
    for (Element l : lc) mark[f[l]] = stamp;
    for (Element q : Q.upper_covers(f[lc[0]])) {
      if (used[q] || cQ(q) != cP(v)) continue;
      auto qlc = Q.lower_covers(q);
      if (qlc.size() != lc.size()) continue;
      bool ok = true;
      for (Element l : qlc)
        if (mark[l] != stamp) {
          ok = false;
          break;
        }
      if (ok) out.push_back(q);
    }
  };

  struct Frame {
    std::vector<Element> cand;
    std::size_t next = 0;
  };
  std::vector<Frame> st(n);
  std::size_t depth = 0;
  std::uint64_t nodes = 0;
  if (n == 0) return PosetMap{};
  candidates(seq[0], st[0].cand);
  st[0].next = 0;
  while (true) {
    Frame& fr = st[depth];
    Element v = seq[depth];
    if (fr.next > 0) used[f[v]] = 0;  // undo previous choice at this depth
    if (fr.next >= fr.cand.size()) {
      if (depth == 0) return std::nullopt;
      --depth;
      continue;
    }
    if (++nodes > budget) throw Error(ErrorCode::SearchBudgetExceeded, "isomorphism search budget exhausted");
    Element q = fr.cand[fr.next++];
    f[v] = q;
    used[q] = 1;
    if (depth + 1 == n) break;
    ++depth;
    candidates(seq[depth], st[depth].cand);
    st[depth].next = 0;
  }
  PosetMap m;
  m.image = f;
  return m;
}

bool is_embedding(const GradedPoset& P, const GradedPoset& Q, const PosetMap& f) {
  if (f.image.size() != P.size()) return false;
  std::vector<Element> img = f.image;
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
  for (Element x = 0; x < P.size(); ++x) {
    if (f.image[x] >= Q.size()) return false;
    if (f.rank_preserving && P.rank(x) != Q.rank(f.image[x])) return false;
  }
  for (Element x = 0; x < P.size(); ++x)
    for (Element y = 0; y < P.size(); ++y)
      if (P.leq(x, y) != Q.leq(f.image[x], f.image[y])) return false;
  return true;
}

bool is_isomorphism(const GradedPoset& P, const GradedPoset& Q, const PosetMap& f) {
  if (P.size() != Q.size() || f.image.size() != P.size()) return false;
  std::vector<char> hit(Q.size(), 0);
  for (Element x : f.image) {
    if (x >= Q.size() || hit[x]) return false;
    hit[x] = 1;
  }
  // a bijection mapping covers onto covers is an isomorphism
  if (P.covers().size() != Q.covers().size()) return false;
  for (const auto& c : P.covers()) {
    auto uc = Q.upper_covers(f.image[c.lower]);
    if (!std::binary_search(uc.begin(), uc.end(), f.image[c.upper])) return false;
  }
  return true;
}

namespace {

// per-element counts of elements strictly below / above, split by rank
std::vector<std::vector<std::uint32_t>> rank_profile(const GradedPoset& P, bool up) {
  const auto& R = P.order();
  std::vector<std::vector<std::uint32_t>> prof(P.size(),
                                               std::vector<std::uint32_t>(P.height() + 1, 0));
  for (Element x = 0; x < P.size(); ++x) {
    const auto* row = up ? R.up_row(x) : R.down_row(x);
    for (std::size_t p = 0; p < R.size(); ++p)
      if ((row[p >> 6] >> (p & 63)) & 1u) ++prof[x][P.rank(R.elem(p))];
  }
  return prof;
}

}  // namespace

EmbeddingResult find_rank_preserving_embedding(const GradedPoset& P, const GradedPoset& Q,
                                               std::uint64_t budget) {
  EmbeddingResult res;
  res.budget = budget;
  const std::size_t nP = P.size(), nQ = Q.size();
  if (nP > nQ || P.height() > Q.height()) return res;
  for (int r = 0; r <= P.height(); ++r)
    if (P.level_size(r) > Q.level_size(r)) return res;

  const auto& RP = P.order();
  const auto& RQ = Q.order();
  const auto& K = kernels::active();
  const std::size_t W = (nQ + 63) / 64;
  // element-index bitsets over Q
  std::vector<Bitset> upQ(nQ, Bitset(nQ)), dnQ(nQ, Bitset(nQ)), incQ(nQ, Bitset(nQ));
  for (Element q = 0; q < nQ; ++q) {
    for (Element z = 0; z < nQ; ++z) {
      if (z != q && RQ.leq(q, z)) upQ[q].set(z);
      if (z != q && RQ.leq(z, q)) dnQ[q].set(z);
    }
    incQ[q].set_all();
    incQ[q].andnot(upQ[q]);
    incQ[q].andnot(dnQ[q]);
    incQ[q].reset(q);
  }
  auto upP = rank_profile(P, true), dnP = rank_profile(P, false);
  auto upQp = rank_profile(Q, true), dnQp = rank_profile(Q, false);
  auto dominates = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, int shift) {
    // a (Q side) >= b (P side) rank by rank
    for (std::size_t r = 0; r < b.size(); ++r) {
      std::size_t rq = r + static_cast<std::size_t>(shift);
      std::uint32_t av = rq < a.size() ? a[rq] : 0;
      if (av < b[r]) return false;
    }
    return true;
  };

  std::vector<Bitset> dom0(nP, Bitset(nQ));
  for (Element p = 0; p < nP; ++p) {
    for (Element q : Q.level(P.rank(p))) {
      if (Q.upper_covers(q).size() < P.upper_covers(p).size()) continue;
      if (Q.lower_covers(q).size() < P.lower_covers(p).size()) continue;
      if (!dominates(upQp[q], upP[p], 0) || !dominates(dnQp[q], dnP[p], 0)) continue;
      dom0[p].set(q);
    }
    if (!dom0[p].any()) return res;
  }

  // depth-first search, domains copied per level
  std::vector<std::vector<Bitset>> lvl(nP + 1, std::vector<Bitset>(nP));
  lvl[0] = dom0;
  std::vector<char> assigned(nP, 0);
  std::vector<Element> f(nP, 0);
  std::vector<Element> chosen(nP + 1, 0);  // element chosen at each depth
  std::vector<std::ptrdiff_t> cursor(nP + 1, -1);
  std::size_t depth = 0;

  auto pick = [&](std::size_t d) -> std::ptrdiff_t {
    std::ptrdiff_t best = -1;
    std::size_t bc = SIZE_MAX;
    for (Element p = 0; p < nP; ++p) {
      if (assigned[p]) continue;
      std::size_t c = lvl[d][p].count();
      if (c < bc) {
        bc = c;
        best = p;
      }
    }
    return best;
  };

  if (nP == 0) {
    res.status = SearchStatus::Found;
    res.map = PosetMap{};
    return res;
  }
  chosen[0] = static_cast<Element>(pick(0));
  cursor[0] = -1;
  while (true) {
    Element p = chosen[depth];
    const Bitset& D = lvl[depth][p];
    std::ptrdiff_t q = D.next(static_cast<std::size_t>(cursor[depth] + 1));
    if (q < 0) {
      if (depth == 0) {
        res.status = SearchStatus::None;
        return res;
      }
      assigned[p] = 0;
      --depth;
      assigned[chosen[depth]] = 0;
      continue;
    }
    cursor[depth] = q;
    if (++res.nodes > budget) {
      res.status = SearchStatus::Inconclusive;
      return res;
    }
    assigned[p] = 1;
    f[p] = static_cast<Element>(q);
    // filter the remaining domains
    bool dead = false;
    auto& nxt = lvl[depth + 1];
    for (Element p2 = 0; p2 < nP && !dead; ++p2) {
      if (assigned[p2]) continue;
      nxt[p2] = lvl[depth][p2];
      nxt[p2].reset(static_cast<std::size_t>(q));
      const Bitset* rel;
      if (RP.leq(p2, p)) rel = &dnQ[q];
      else if (RP.leq(p, p2)) rel = &upQ[q];
      else rel = &incQ[q];
      K.and_into(nxt[p2].data(), rel->data(), W);
      if (!nxt[p2].any()) dead = true;
    }
    if (dead) {
      assigned[p] = 0;
      continue;
    }
    if (depth + 1 == nP) {
      res.status = SearchStatus::Found;
      res.map = PosetMap{f, true};
      return res;
    }
    ++depth;
    std::ptrdiff_t np = pick(depth);
    chosen[depth] = static_cast<Element>(np);
    cursor[depth] = -1;
  }
}

std::optional<PosetMap> rank_preserving_embedding(const GradedPoset& P, const GradedPoset& Q) {
  auto r = find_rank_preserving_embedding(P, Q);
  if (r.status == SearchStatus::Inconclusive)
    throw Error(ErrorCode::SearchBudgetExceeded, "embedding search budget exhausted");
  return r.map;
}

}  // namespace upho
