#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "upho/coxeter.hpp"
#include "upho/polynomial.hpp"
#include "upho/poset.hpp"

namespace upho {

// simple graph on vertices 1..n
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph path(int n);
  // the 16-vertex graph with chi* = (1-x)(1-2x)^2(1-3x+3x^2)^6
  static Graph sixteen_vertex_example();
  // "1-2,2-3,3-1" or "cycle:5" / "complete:4" / "path:3" / "g16"
  static Graph parse(const std::string& s);
  bool connected() const;
};

enum class ZooFamily {
  boolean,
  subspace,
  partition,
  signed_partition,
  dowling_cyclic,
  rank_two_M,
  chain_sum,
  cross_polytope_faces,
  hypercube_faces,
  bond_lattice,
  uniform_matroid_flats,
  weak_order,
  noncrossing,
  figure8_dual_example,
};

struct ZooRecipe {
  ZooFamily family = ZooFamily::boolean;
  std::vector<int> params;  // family specific, see make_* helpers
  Graph graph;              // bond_lattice only
  CoxeterType coxeter;      // weak_order / noncrossing only
  std::string describe() const;
};

const char* family_name(ZooFamily f);
std::optional<ZooFamily> parse_family(const std::string& s);

GradedPoset build_zoo(const ZooRecipe& r);
// the chain the constructions name (boolean, subspace, partition, signed
// partition, Dowling); nullopt for other families
std::optional<std::vector<Element>> standard_modular_chain(const ZooRecipe& r, const GradedPoset& L);
// closed-form chi* where one is known
std::optional<IntPolynomial> expected_chi(const ZooRecipe& r);

GradedPoset boolean_lattice(int n);
GradedPoset subspace_lattice(int n, unsigned q);
GradedPoset partition_lattice(int n);
GradedPoset signed_partition_lattice(int n);
GradedPoset dowling_lattice(int n, int m);
GradedPoset rank_two_lattice(int r);
GradedPoset chain_sum(int r, int n);
GradedPoset cross_polytope_faces(int n);
GradedPoset hypercube_faces(int n);
GradedPoset bond_lattice(const Graph& g);
GradedPoset uniform_matroid_flats(int k, int n);
GradedPoset weak_order(CoxeterType t);
GradedPoset noncrossing(CoxeterType t);
GradedPoset figure8_dual_example();

// chromatic-polynomial route: chi*(L(G);x) = x^n chi(G;1/x)
IntPolynomial chromatic_polynomial(const Graph& g);
IntPolynomial bond_char_poly(const Graph& g);

// label helpers shared with the truncation builders
std::string partition_label(const std::vector<int>& block_of);

}  // namespace upho
