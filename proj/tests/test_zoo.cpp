#include <doctest.h>

#include "oracles.hpp"
#include "upho/coxeter.hpp"
#include "upho/error.hpp"
#include "upho/iso.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/zoo.hpp"

using namespace upho;

namespace {

std::vector<long long> sizes(const GradedPoset& P) {
  std::vector<long long> s;
  for (int r = 0; r <= P.height(); ++r) s.push_back(static_cast<long long>(P.level_size(r)));
  return s;
}

GradedPoset chain(int n) {
  std::vector<Cover> c;
  for (int i = 0; i < n; ++i) c.push_back({static_cast<Element>(i), static_cast<Element>(i + 1)});
  return build_poset(n + 1, c);
}

}  // namespace

TEST_SUITE("lattice-zoo") {
  TEST_CASE("boolean") {
    CHECK(boolean_lattice(3).size() == 8);
    CHECK(reciprocal_char_poly(boolean_lattice(3)) == IntPolynomial{1, -1}.pow(3));
    CHECK(boolean_lattice(0).size() == 1);
    CHECK(rank_gen_poly(boolean_lattice(4)) == IntPolynomial{1, 1}.pow(4));
  }

  TEST_CASE("subspace") {
    auto M = subspace_lattice(2, 2);
    CHECK(sizes(M) == std::vector<long long>{1, 3, 1});
    CHECK(is_isomorphic(M, rank_two_lattice(3)).has_value());
    CHECK(reciprocal_char_poly(subspace_lattice(3, 2)) == linear_product({1, 2, 4}));
    for (unsigned q : {2u, 3u, 4u, 5u}) CHECK(is_isomorphic(subspace_lattice(1, q), chain(1)).has_value());
    // q = 4 exercises GF(4) arithmetic: [3]_4 = 21 lines in F_4^3
    CHECK(subspace_lattice(3, 4).level_size(1) == 21);
    CHECK_THROWS_AS(subspace_lattice(2, 6), Error);
  }

  TEST_CASE("partition") {
    CHECK(partition_lattice(3).size() == 5);
    CHECK(reciprocal_char_poly(partition_lattice(4)) == linear_product({1, 2, 3}));
    CHECK(rank_gen_poly(partition_lattice(4)).coeff(2) == oracle::stirling2(4, 2));
    for (int n = 1; n <= 6; ++n)
      CHECK(partition_lattice(n).size() == oracle::set_partitions(n).size());
  }

  TEST_CASE("signed partition") {
    CHECK(reciprocal_char_poly(signed_partition_lattice(2)) == linear_product({1, 3}));
    CHECK(is_isomorphic(signed_partition_lattice(1), chain(1)).has_value());
    // rank n - k with 2k nonzero blocks; the bottom has 2n singletons
    auto P = signed_partition_lattice(3);
    CHECK(P.height() == 3);
    CHECK(reciprocal_char_poly(P) == linear_product({1, 3, 5}));
  }

  TEST_CASE("dowling") {
    CHECK(is_isomorphic(dowling_lattice(3, 1), partition_lattice(4)).has_value());
    CHECK(is_isomorphic(dowling_lattice(3, 2), signed_partition_lattice(3)).has_value());
    CHECK(reciprocal_char_poly(dowling_lattice(2, 3)) == linear_product({1, 4}));
    CHECK(reciprocal_char_poly(dowling_lattice(3, 3)) == linear_product({1, 4, 7}));
  }

  TEST_CASE("rank two and chain sums") {
    CHECK(is_isomorphic(rank_two_lattice(2), boolean_lattice(2)).has_value());
    CHECK(is_isomorphic(rank_two_lattice(3), partition_lattice(3)).has_value());
    for (int r = 2; r <= 5; ++r)
      CHECK(reciprocal_char_poly(rank_two_lattice(r)) == IntPolynomial{1, -r, r - 1});
    CHECK(is_isomorphic(chain_sum(3, 2), rank_two_lattice(3)).has_value());
    CHECK(chain_sum(2, 3).size() == 6);
    for (int r = 2; r <= 4; ++r)
      for (int n = 2; n <= 5; ++n)
        CHECK(reciprocal_char_poly(chain_sum(r, n)) == IntPolynomial{1, -r} + IntPolynomial::monomial(r - 1, n));
  }

  TEST_CASE("polytope face lattices") {
    CHECK(cross_polytope_faces(2).size() == 10);
    CHECK(reciprocal_char_poly(cross_polytope_faces(3)) == IntPolynomial{1, -6, 12, -8, 1});
    CHECK(sizes(cross_polytope_faces(1)) == std::vector<long long>{1, 2, 1});
    CHECK(is_isomorphic(hypercube_faces(2), cross_polytope_faces(2)).has_value());
    CHECK(sizes(hypercube_faces(3)) == std::vector<long long>{1, 8, 12, 6, 1});
    for (int n = 1; n <= 4; ++n) CHECK(hypercube_faces(n).lower_covers(*hypercube_faces(n).top()).size() == 2u * n);
    // the two families are dual
    CHECK(is_isomorphic(*dual(hypercube_faces(3)), cross_polytope_faces(3)).has_value());
  }

  TEST_CASE("bond lattices") {
    auto L = bond_lattice(Graph::cycle(4));
    CHECK(L.size() == 12);
    CHECK(reciprocal_char_poly(L) == IntPolynomial{1, -4, 6, -3});
    for (int n = 2; n <= 5; ++n) CHECK(is_isomorphic(bond_lattice(Graph::complete(n)), partition_lattice(n)).has_value());
    auto g = Graph::sixteen_vertex_example();
    CHECK(g.n == 16);
    CHECK(bond_char_poly(g) == IntPolynomial{1, -1} * IntPolynomial{1, -2}.pow(2) * IntPolynomial{1, -3, 3}.pow(6));
    // the chromatic route agrees with Moebius on small graphs
    for (auto G : {Graph::cycle(4), Graph::cycle(5), Graph::complete(4), Graph::path(4)})
      CHECK(bond_char_poly(G) == reciprocal_char_poly(bond_lattice(G)));
    CHECK(chromatic_polynomial(Graph::complete(3)) == IntPolynomial{0, 2, -3, 1});
    CHECK_THROWS_AS(bond_lattice(g), Error);
    auto h = Graph::parse("1-2,2-3,1-3");
    CHECK(h.n == 3);
    CHECK(is_isomorphic(bond_lattice(h), partition_lattice(3)).has_value());
  }

  TEST_CASE("uniform matroids") {
    for (int n = 3; n <= 5; ++n) CHECK(is_isomorphic(uniform_matroid_flats(2, n), rank_two_lattice(n)).has_value());
    for (int n = 1; n <= 4; ++n) CHECK(is_isomorphic(uniform_matroid_flats(n, n), boolean_lattice(n)).has_value());
    CHECK(sizes(uniform_matroid_flats(3, 4)) == std::vector<long long>{1, 4, 6, 1});
  }

  TEST_CASE("weak order and noncrossing") {
    auto W = weak_order(CoxeterType::A(2));
    CHECK(W.size() == 6);
    CHECK(W.height() == 3);
    CHECK(is_isomorphic(weak_order(CoxeterType::A(1)), chain(1)).has_value());
    auto D = weak_order(CoxeterType::I2(4));
    CHECK(D.size() == 8);
    CHECK(sizes(D) == std::vector<long long>{1, 2, 2, 2, 1});
    CHECK(noncrossing(CoxeterType::A(2)).size() == 5);
    CHECK(noncrossing(CoxeterType::A(3)).size() == 14);
    CHECK(is_isomorphic(noncrossing(CoxeterType::A(1)), chain(1)).has_value());
    CHECK(lattice_check(noncrossing(CoxeterType::A(3))).is_lattice);
    CHECK(lattice_check(weak_order(CoxeterType::A(3))).is_lattice);
    CHECK(weak_order(CoxeterType::A(3)).size() == 24);
  }

  TEST_CASE("coxeter groups") {
    CoxeterGroup S3(CoxeterType::A(2));
    CHECK(S3.order() == 6);
    CHECK(S3.reflections().size() == 3);
    CHECK(S3.abs_length(S3.coxeter_element()) == 2);
    CoxeterGroup S4(CoxeterType::A(3));
    CHECK(S4.order() == 24);
    CHECK(S4.reflections().size() == 6);
    CoxeterGroup I4(CoxeterType::I2(4));
    CHECK(I4.order() == 8);
    CHECK(I4.coxeter_m(0, 1) == 4);
    CHECK(CoxeterType::parse("A3").rank() == 3);
    CHECK(CoxeterType::parse("I2(5)").param == 5);
    CHECK_THROWS_AS(CoxeterType::parse("E8x"), Error);
  }

  TEST_CASE("figure 8 example") {
    auto L = figure8_dual_example();
    CHECK(L.size() == 7);
    CHECK(join_of_atoms(L) == *L.top());
    CHECK(lattice_check(L).is_lattice);
  }

  TEST_CASE("labels") {
    auto P = partition_lattice(4);
    CHECK(P.label(*P.bottom()) == "1|2|3|4");
    CHECK(P.find_label("1|23|4").has_value());
    auto X = cross_polytope_faces(1);
    CHECK(X.find_label("+").has_value());
    CHECK(X.find_label("-").has_value());
    auto W = weak_order(CoxeterType::A(2));
    CHECK(W.label(*W.top()) == "321");
    auto N = noncrossing(CoxeterType::A(2));
    CHECK(N.label(*N.top()) == "(1,2,3)");
  }

  TEST_CASE("recipes and standard chains") {
    for (auto name : {"boolean", "partition", "signed-partition", "dowling", "subspace"}) {
      auto f = parse_family(name);
      REQUIRE_MESSAGE(f.has_value(), name);
      ZooRecipe r;
      r.family = *f;
      r.params = {3};
      if (*f == ZooFamily::dowling_cyclic || *f == ZooFamily::subspace) r.params = {3, 2};
      auto L = build_zoo(r);
      auto ch = standard_modular_chain(r, L);
      REQUIRE(ch.has_value());
      CHECK(ch->size() == static_cast<std::size_t>(L.height() + 1));
      CHECK_NOTHROW(validate_modular_chain(L, *ch));
      auto e = expected_chi(r);
      REQUIRE(e.has_value());
      CHECK(*e == reciprocal_char_poly(L));
    }
    CHECK_FALSE(parse_family("nope").has_value());
  }

  TEST_CASE("size guards") {
    CHECK_THROWS_AS(boolean_lattice(16), Error);
    try {
      partition_lattice(20);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeGuard);
    }
  }
}
