#include "upho/lattice.hpp"

#include <algorithm>

#include "upho/error.hpp"

namespace upho {

namespace {

std::vector<Element> minimal_in(const GradedPoset& P, const Bitset& U_pos, bool minimal) {
  // U_pos in position space; keep elements with no other element of U below (above)
  const auto& R = P.order();
  const auto& K = kernels::active();
  std::vector<Element> out;
  U_pos.for_each([&](std::size_t p) {
    Element z = R.elem(p);
    const auto* row = minimal ? R.down_row(z) : R.up_row(z);
    // |U & down(z)| == 1 means only z itself
    if (K.and_popcount(U_pos.data(), row, R.words()) == 1) out.push_back(z);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Bitset and_rows(const OrderRelation& R, const kernels::word* a, const kernels::word* b) {
  Bitset U(R.size());
  std::copy(a, a + R.words(), U.data());
  kernels::active().and_into(U.data(), b, R.words());
  return U;
}

}  // namespace

std::optional<Element> try_join(const GradedPoset& P, Element x, Element y) {
  const auto& R = P.order();
  const auto& K = kernels::active();
  std::ptrdiff_t f = K.and_first(R.up_row(x), R.up_row(y), R.words());
  if (f < 0) return std::nullopt;
  Element z = R.elem(static_cast<std::size_t>(f));
  if (!K.and_subset(R.up_row(x), R.up_row(y), R.up_row(z), R.words())) return std::nullopt;
  return z;
}

std::optional<Element> try_meet(const GradedPoset& P, Element x, Element y) {
  const auto& R = P.order();
  const auto& K = kernels::active();
  std::ptrdiff_t f = K.and_last(R.down_row(x), R.down_row(y), R.words());
  if (f < 0) return std::nullopt;
  Element z = R.elem(static_cast<std::size_t>(f));
  if (!K.and_subset(R.down_row(x), R.down_row(y), R.down_row(z), R.words())) return std::nullopt;
  return z;
}

std::vector<Element> minimal_upper_bounds(const GradedPoset& P, Element x, Element y) {
  const auto& R = P.order();
  return minimal_in(P, and_rows(R, R.up_row(x), R.up_row(y)), true);
}

std::vector<Element> maximal_lower_bounds(const GradedPoset& P, Element x, Element y) {
  const auto& R = P.order();
  return minimal_in(P, and_rows(R, R.down_row(x), R.down_row(y)), false);
}

Element join(const GradedPoset& P, Element x, Element y) {
  if (auto z = try_join(P, x, y)) return *z;
  throw NoBoundError(ErrorCode::NoJoin, P.label(x) + " v " + P.label(y),
                     minimal_upper_bounds(P, x, y));
}

Element meet(const GradedPoset& P, Element x, Element y) {
  if (auto z = try_meet(P, x, y)) return *z;
  throw NoBoundError(ErrorCode::NoMeet, P.label(x) + " ^ " + P.label(y),
                     maximal_lower_bounds(P, x, y));
}

std::optional<Element> try_join_all(const GradedPoset& P, const std::vector<Element>& xs) {
  if (xs.empty()) return P.bottom();
  Element acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    auto z = try_join(P, acc, xs[i]);
    if (!z) return std::nullopt;
    acc = *z;
  }
  return acc;
}

LatticeVerdict lattice_check(const GradedPoset& P) {
  const std::size_t n = P.size();
  const auto& R = P.order();
  LatticeVerdict v;
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (R.leq(x, y) || R.leq(y, x)) continue;
      if (!try_join(P, x, y)) {
        v.witness = {x, y};
        v.missing = "join";
        return v;
      }
      if (!try_meet(P, x, y)) {
        v.witness = {x, y};
        v.missing = "meet";
        return v;
      }
    }
  v.is_lattice = true;
  return v;
}

GradedPoset interval(const GradedPoset& P, Element x, Element y) {
  const auto& R = P.order();
  if (!R.leq(x, y))
    throw Error(ErrorCode::NotComparable, P.label(x) + " is not below " + P.label(y));
  Bitset I = and_rows(R, R.up_row(x), R.down_row(y));
  std::vector<Element> keep;
  I.for_each([&](std::size_t p) { keep.push_back(R.elem(p)); });
  return restrict_to(P, keep, P.rank(x));
}

GradedPoset filter(const GradedPoset& P, Element x) {
  Bitset U = upset_of(P, x);
  std::vector<Element> keep;
  for (int r = P.rank(x); r <= P.height(); ++r)
    for (Element z : P.level(r))
      if (U.test(z)) keep.push_back(z);
  return restrict_to(P, keep, P.rank(x));
}

GradedPoset truncate(const GradedPoset& P, int h) {
  std::vector<Element> keep;
  for (int r = 0; r <= std::min(h, P.height()); ++r)
    for (Element z : P.level(r)) keep.push_back(z);
  std::sort(keep.begin(), keep.end());
  return restrict_to(P, keep, 0);
}

Element join_of_atoms(const GradedPoset& P) {
  auto b = P.bottom();
  if (!b) throw Error(ErrorCode::NoMinimum, "poset has no unique minimum");
  auto atoms = P.atoms();
  if (atoms.empty()) return *b;
  // upset intersection via BFS avoids the full order matrix on big truncations
  Bitset U = upset_of(P, atoms[0]);
  for (std::size_t i = 1; i < atoms.size(); ++i) U &= upset_of(P, atoms[i]);
  std::optional<Element> z;
  for (int r = 1; r <= P.height() && !z; ++r)
    for (Element e : P.level(r))
      if (U.test(e)) {
        z = e;
        break;
      }
  if (!z) throw Error(ErrorCode::JoinOfAtomsMissing, "atoms have no common upper bound in the truncation");
  Bitset Z = upset_of(P, *z);
  Bitset rest = U;
  rest.andnot(Z);
  if (rest.any())
    throw Error(ErrorCode::JoinOfAtomsMissing, "atoms have several minimal upper bounds");
  return *z;
}

GradedPoset core(const GradedPoset& P) {
  Element z = join_of_atoms(P);
  Bitset D = downset_of(P, z);
  std::vector<Element> keep;
  for (int r = 0; r <= P.rank(z); ++r)
    for (Element e : P.level(r))
      if (D.test(e)) keep.push_back(e);
  return restrict_to(P, keep, 0);
}

GradedPoset direct_product(const GradedPoset& P, const GradedPoset& Q) {
  const std::size_t m = Q.size();
  const std::size_t n = P.size() * m;
  if (n > 4 * kMaxElements) throw Error(ErrorCode::SizeGuard, "product too large");
  std::vector<Cover> cv;
  std::vector<int> rk(n);
  std::vector<std::string> lab(n);
  for (Element i = 0; i < P.size(); ++i)
    for (Element j = 0; j < m; ++j) {
      Element e = static_cast<Element>(i * m + j);
      rk[e] = P.rank(i) + Q.rank(j);
      lab[e] = "(" + P.label(i) + "," + Q.label(j) + ")";
    }
  for (Element i = 0; i < P.size(); ++i)
    for (Element j = 0; j < m; ++j) {
      Element e = static_cast<Element>(i * m + j);
      for (Element i2 : P.upper_covers(i)) cv.push_back({e, static_cast<Element>(i2 * m + j)});
      for (Element j2 : Q.upper_covers(j)) cv.push_back({e, static_cast<Element>(i * m + j2)});
    }
  return GradedPoset::build(n, std::move(cv), std::move(rk), std::move(lab));
}

std::optional<GradedPoset> dual(const GradedPoset& P) {
  auto t = P.top();
  if (!t) return std::nullopt;
  const int h = P.rank(*t);
  std::vector<Cover> cv;
  cv.reserve(P.covers().size());
  for (const auto& c : P.covers()) cv.push_back({c.upper, c.lower});
  std::vector<int> rk(P.size());
  for (Element x = 0; x < P.size(); ++x) rk[x] = h - P.rank(x);
  std::vector<std::string> lab = P.labels();
  return GradedPoset::build(P.size(), std::move(cv), std::move(rk), std::move(lab));
}

bool is_modular_element(const GradedPoset& L, Element m) {
  for (Element q = 0; q < L.size(); ++q) {
    auto j = try_join(L, m, q);
    auto w = try_meet(L, m, q);
    if (!j || !w) return false;
    if (L.rank(m) + L.rank(q) != L.rank(*j) + L.rank(*w)) return false;
  }
  return true;
}

void validate_modular_chain(const GradedPoset& L, const std::vector<Element>& chain) {
  auto b = L.bottom();
  auto t = L.top();
  if (!b || !t) throw Error(ErrorCode::ChainNotMaximal, "lattice is not bounded");
  if (chain.size() != static_cast<std::size_t>(L.height()) + 1 || chain.front() != *b ||
      chain.back() != *t)
    throw Error(ErrorCode::ChainNotMaximal, "chain does not run from 0 to 1 through every rank");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto uc = L.upper_covers(chain[i]);
    if (std::find(uc.begin(), uc.end(), chain[i + 1]) == uc.end())
      throw Error(ErrorCode::ChainNotMaximal, "consecutive chain elements are not a cover");
  }
  for (Element c : chain)
    if (!is_modular_element(L, c))
      throw Error(ErrorCode::ChainNotModular, "chain element " + L.label(c) + " is not modular");
}

GradedPoset trim(const GradedPoset& L, const std::vector<Element>& chain, int k,
                 std::vector<Element>* old_index) {
  if (k < 1) throw Error(ErrorCode::BadInput, "trim needs k >= 1");
  validate_modular_chain(L, chain);
  const auto& R = L.order();
  std::vector<Element> keep;
  for (Element x = 0; x < L.size(); ++x) {
    int nu = 0;
    while (!R.leq(x, chain[nu])) ++nu;
    if (nu - L.rank(x) < k) keep.push_back(x);
  }
  GradedPoset T = restrict_to(L, keep, 0, old_index);
  if (!lattice_check(T).is_lattice)
    throw Error(ErrorCode::ChainNotModular, "trimmed poset is not a lattice");
  return T;
}

}  // namespace upho
