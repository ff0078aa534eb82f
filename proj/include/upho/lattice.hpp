#pragma once
#include <optional>
#include <string>
#include <vector>

#include "upho/poset.hpp"

namespace upho {

// nullopt when no least upper bound exists
std::optional<Element> try_join(const GradedPoset& P, Element x, Element y);
std::optional<Element> try_meet(const GradedPoset& P, Element x, Element y);
// throw NoBoundError carrying the minimal upper / maximal lower bounds
Element join(const GradedPoset& P, Element x, Element y);
Element meet(const GradedPoset& P, Element x, Element y);
// join of a nonempty set; nullopt if some partial join fails
std::optional<Element> try_join_all(const GradedPoset& P, const std::vector<Element>& xs);

std::vector<Element> minimal_upper_bounds(const GradedPoset& P, Element x, Element y);
std::vector<Element> maximal_lower_bounds(const GradedPoset& P, Element x, Element y);

struct LatticeVerdict {
  bool is_lattice = false;
  // first offending pair and what it lacks ("join" or "meet")
  std::optional<std::pair<Element, Element>> witness;
  std::string missing;
};
LatticeVerdict lattice_check(const GradedPoset& P);

GradedPoset interval(const GradedPoset& P, Element x, Element y);
// principal filter of x, re-ranked so x has rank 0
GradedPoset filter(const GradedPoset& P, Element x);
// elements of rank <= h
GradedPoset truncate(const GradedPoset& P, int h);
// [0, join of atoms]; JoinOfAtomsMissing if the join is absent
GradedPoset core(const GradedPoset& P);
Element join_of_atoms(const GradedPoset& P);

GradedPoset direct_product(const GradedPoset& P, const GradedPoset& Q);
// nullopt (DualNotGraded) when P has no unique maximum
std::optional<GradedPoset> dual(const GradedPoset& P);

bool is_modular_element(const GradedPoset& L, Element m);

// nu(x) = min{i : x <= chain[i]}; keeps nu(x) - rank(x) < k
GradedPoset trim(const GradedPoset& L, const std::vector<Element>& chain, int k,
                 std::vector<Element>* old_index = nullptr);
// throws ChainNotMaximal / ChainNotModular
void validate_modular_chain(const GradedPoset& L, const std::vector<Element>& chain);

}  // namespace upho
