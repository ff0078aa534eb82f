#include "upho/verifier.hpp"

#include <map>

#include "upho/error.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"

namespace upho {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

RankIdentityResult verify_rank_identity(const UphoTruncation& T) {
  RankIdentityResult r;
  GradedPoset C = core(T.poset);
  r.chi = reciprocal_char_poly(C);
  if (T.expected_chi) r.chi_matches_recipe = (*T.expected_chi == r.chi);
  const int N = T.poset.height();
  auto inv = series_inverse(r.chi, static_cast<std::size_t>(std::max(N, 0)));
  r.ok = r.chi_matches_recipe;
  for (int k = 0; k <= N; ++k) {
    BigInt c = T.poset.level_size(k);
    r.counts.push_back(to_string(c));
    r.expected.push_back(to_string(inv[static_cast<std::size_t>(k)]));
    if (c != inv[static_cast<std::size_t>(k)] && !r.mismatch) {
      r.mismatch = k;
      r.ok = false;
    }
  }
  if (N < T.N) {
    // a rank level went missing
    r.ok = false;
    if (!r.mismatch) r.mismatch = N + 1;
  }
  return r;
}

UphoCheckResult verify_upho(const UphoTruncation& T, int depth, std::uint64_t budget) {
  const GradedPoset& P = T.poset;
  if (depth < 0) throw Error(ErrorCode::BadInput, "depth must be >= 0");
  if (depth > T.N)
    throw Error(ErrorCode::DepthExceedsTruncation,
                "depth " + std::to_string(depth) + " exceeds truncation rank " + std::to_string(T.N));
  UphoCheckResult res;
  res.depth = depth;
  std::map<int, GradedPoset> heads;
  auto head = [&](int h) -> const GradedPoset& {
    auto it = heads.find(h);
    if (it == heads.end()) it = heads.emplace(h, truncate(P, h)).first;
    return it->second;
  };
  for (int r = 1; r <= std::min(depth, P.height()); ++r) {
    const int h = T.N - r;
    const GradedPoset& H = head(h);
    for (Element p : P.level(r)) {
      ++res.filters_checked;
      GradedPoset F = truncate(filter(P, p), h);
      bool same = F.size() == H.size() && F.height() == H.height();
      for (int k = 0; same && k <= h; ++k) same = F.level_size(k) == H.level_size(k);
      if (same) same = is_isomorphic(F, H, budget).has_value();
      if (!same) {
        res.ok = false;
        res.witness = p;
        return res;
      }
    }
  }
  return res;
}

GradedPoset delete_element(const GradedPoset& P, Element x) {
  auto b = P.bottom();
  if (!b) throw Error(ErrorCode::NoMinimum, "poset has no unique minimum");
  if (x >= P.size()) throw Error(ErrorCode::BadInput, "element out of range");
  if (x == *b) throw Error(ErrorCode::BadInput, "cannot delete the minimum");
  std::vector<char> seen(P.size(), 0);
  std::vector<Element> stack{*b};
  seen[*b] = 1;
  seen[x] = 2;
  while (!stack.empty()) {
    Element e = stack.back();
    stack.pop_back();
    for (Element u : P.upper_covers(e))
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  std::vector<Element> keep;
  for (Element e = 0; e < P.size(); ++e)
    if (seen[e] == 1) keep.push_back(e);
  return restrict_to(P, keep, 0);
}

}  // namespace upho
