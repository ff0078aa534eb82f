#include <algorithm>

#include "upho/error.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/verifier.hpp"

namespace upho {

bool ObstructionReport::any_fail() const {
  return std::any_of(entries.begin(), entries.end(), [](const ObstructionEntry& e) { return e.verdict == Verdict::fail; });
}

std::optional<std::vector<BigInt>> nonnegative_linear_split(const IntPolynomial& chi) {
  if (chi.is_zero() || chi.coeff(0) != 1) return std::nullopt;
  std::vector<BigInt> c = chi.coeffs(), roots;
  while (c.size() > 1) {
    const std::size_t d = c.size() - 1;
    BigInt lead = abs(c[d]);
    bool found = false;
    // a divides the leading coefficient, since prod(-a_i) = c_d
    for (BigInt a = 1; a <= lead && !found; ++a) {
      if (lead % a != 0) continue;
      std::vector<BigInt> q(d);
      q[0] = c[0];
      for (std::size_t k = 1; k < d; ++k) q[k] = c[k] + a * q[k - 1];
      if (c[d] + a * q[d - 1] != 0) continue;
      roots.push_back(a);
      c = std::move(q);
      found = true;
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ObstructionEntry obstruction_positivity(const IntPolynomial& chi, std::size_t order) {
  ObstructionEntry e;
  e.test = "positivity";
  e.scan_order = order;
  auto s = series_inverse(chi, order);
  if (auto k = first_negative_coefficient(s)) {
    e.verdict = Verdict::fail;
    e.index = *k;
    e.value = s[*k];
    e.certificate = "[x^" + std::to_string(*k) + "] 1/chi* = " + to_string(s[*k]);
  } else if (auto split = nonnegative_linear_split(chi)) {
    e.verdict = Verdict::pass;
    e.certificate = "chi* splits into factors (1 - a x) with a >= 0";
  } else {
    e.verdict = Verdict::inconclusive;
    e.certificate = "no negative coefficient through x^" + std::to_string(order);
  }
  return e;
}

ObstructionEntry obstruction_positivity(const GradedPoset& L, std::size_t order) {
  return obstruction_positivity(reciprocal_char_poly(L), order);
}

ObstructionEntry obstruction_positivity_m(const IntPolynomial& chi, int m, std::size_t order) {
  if (m < 1) throw Error(ErrorCode::BadInput, "m must be >= 1");
  ObstructionEntry e;
  e.test = "positivity_m";
  e.m = m;
  e.scan_order = order;
  if (m == 1) {
    e.verdict = Verdict::pass;
    e.certificate = "m = 1: the quotient is 1 (vacuous)";
    return e;
  }
  auto s = series_div(substitute_power(chi, static_cast<unsigned>(m)), chi.pow(static_cast<unsigned>(m)), order);
  if (auto k = first_negative_coefficient(s)) {
    e.verdict = Verdict::fail;
    e.index = *k;
    e.value = s[*k];
    e.certificate = "[x^" + std::to_string(*k) + "] chi*(x^" + std::to_string(m) + ")/chi*(x)^" + std::to_string(m) +
                    " = " + to_string(s[*k]);
  } else {
    e.verdict = Verdict::inconclusive;
    e.certificate = "no negative coefficient through x^" + std::to_string(order);
  }
  return e;
}

ObstructionEntry obstruction_max_join(const GradedPoset& L) {
  ObstructionEntry e;
  e.test = "max_join";
  auto top = L.top();
  if (!top) throw Error(ErrorCode::BadInput, "max-join test needs a unique maximum");
  try {
    Element j = join_of_atoms(L);
    if (j == *top) {
      e.verdict = Verdict::pass;
      return e;
    }
    e.verdict = Verdict::fail;
    e.element = j;
    e.certificate = "join of atoms is " + L.label(j) + " at rank " + std::to_string(L.rank(j)) + " < " +
                    std::to_string(L.height());
  } catch (const Error& err) {
    if (err.code() != ErrorCode::JoinOfAtomsMissing) throw;
    e.verdict = Verdict::fail;
    e.certificate = std::string("atoms have no join: ") + err.what();
  }
  return e;
}

ObstructionEntry obstruction_structural(const GradedPoset& L, std::uint64_t budget) {
  ObstructionEntry e;
  e.test = "structural";
  e.search_budget = budget;
  auto bot = L.bottom();
  auto top = L.top();
  if (!bot || !top) throw Error(ErrorCode::BadInput, "structural test needs a bounded poset");
  // max lower-cover count per rank
  std::vector<std::size_t> maxdown(static_cast<std::size_t>(L.height()) + 1, 0);
  for (Element z = 0; z < L.size(); ++z)
    maxdown[L.rank(z)] = std::max(maxdown[L.rank(z)], L.lower_covers(z).size());
  bool inconclusive = false;
  std::string inc_note;
  for (int r = 1; r < L.height(); ++r)
    for (Element x : L.level(r)) {
      std::vector<Element> ys(L.upper_covers(x).begin(), L.upper_covers(x).end());
      auto j = try_join_all(L, ys);
      if (!j) {
        if (!inconclusive) inc_note = "covers of " + L.label(x) + " have no join";
        inconclusive = true;
        continue;
      }
      GradedPoset I = interval(L, x, *j);
      const int h = I.height();
      const std::size_t k = I.lower_covers(*I.top()).size();
      if (k > maxdown[h]) {
        e.verdict = Verdict::fail;
        e.element = x;
        e.certificate = "x = " + L.label(x) + ": top of [x, join of covers] covers " + std::to_string(k) +
                        " elements; rank-" + std::to_string(h) + " elements of L cover at most " +
                        std::to_string(maxdown[h]);
        return e;
      }
      auto res = find_rank_preserving_embedding(I, L, budget);
      e.search_nodes += res.nodes;
      if (res.status == SearchStatus::None) {
        e.verdict = Verdict::fail;
        e.element = x;
        e.certificate = "x = " + L.label(x) + ": no rank-preserving embedding of [x, " + L.label(*j) +
                        "] (" + std::to_string(I.size()) + " elements) into L; exhaustive search, " +
                        std::to_string(res.nodes) + " nodes";
        return e;
      }
      if (res.status == SearchStatus::Inconclusive) {
        if (!inconclusive) inc_note = "search budget " + std::to_string(budget) + " exhausted at x = " + L.label(x);
        inconclusive = true;
      }
    }
  e.verdict = inconclusive ? Verdict::inconclusive : Verdict::pass;
  e.certificate = inc_note;
  return e;
}

ObstructionReport obstruction_report_chi(const std::string& id, const IntPolynomial& chi, const ObstructionOptions& o) {
  ObstructionReport R;
  R.lattice = id;
  const std::size_t order = o.order ? *o.order : default_scan_order(chi);
  R.entries.push_back(obstruction_positivity(chi, order));
  R.entries.push_back(obstruction_positivity_m(chi, o.m, order));
  return R;
}

ObstructionReport obstruction_report(const std::string& id, const GradedPoset& L, const ObstructionOptions& o) {
  ObstructionReport R = obstruction_report_chi(id, reciprocal_char_poly(L), o);
  R.entries.push_back(obstruction_max_join(L));
  R.entries.push_back(obstruction_structural(L, o.budget));
  return R;
}

}  // namespace upho
