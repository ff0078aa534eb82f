#include <doctest.h>

#include "oracles.hpp"
#include "upho/error.hpp"
#include "upho/iso.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/upho.hpp"
#include "upho/verifier.hpp"

using namespace upho;

namespace {

std::vector<long long> sizes(const GradedPoset& P) {
  std::vector<long long> s;
  for (int r = 0; r <= P.height(); ++r) s.push_back(static_cast<long long>(P.level_size(r)));
  return s;
}

std::vector<long long> inverse_counts(const IntPolynomial& chi, int N) {
  auto s = series_inverse(chi, N);
  std::vector<long long> v;
  for (int i = 0; i <= N; ++i) v.push_back(static_cast<long long>(s[i]));
  return v;
}

}  // namespace

TEST_SUITE("upho-builders") {
  TEST_CASE("grid") {
    CHECK(sizes(grid(1, 5).poset) == std::vector<long long>(6, 1));
    CHECK(grid(3, 4).poset.level_size(2) == 6);
    for (int d = 1; d <= 4; ++d) CHECK(sizes(grid(d, 6).poset) == inverse_counts(IntPolynomial{1, -1}.pow(d), 6));
    CHECK(grid(2, 3).poset.find_label("(1,2)").has_value());
  }

  TEST_CASE("boolean_infty") {
    auto T = boolean_infty(2, 4);
    CHECK(T.poset.level_size(2) == 3);
    CHECK(sizes(T.poset) == inverse_counts(IntPolynomial{1, -1}.pow(2), 4));
    CHECK(sizes(boolean_infty(1, 5).poset) == std::vector<long long>(6, 1));
    CHECK(is_isomorphic(core(boolean_infty(3, 5).poset), boolean_lattice(3)).has_value());
  }

  TEST_CASE("subspace_infty") {
    CHECK(subspace_infty(2, 2, 3).poset.level_size(1) == 3);
    CHECK(sizes(subspace_infty(2, 2, 4).poset) == inverse_counts(linear_product({1, 2}), 4));
    CHECK(sizes(subspace_infty(1, 3, 4).poset) == std::vector<long long>(5, 1));
    CHECK(sizes(subspace_infty(2, 3, 3).poset) == inverse_counts(linear_product({1, 3}), 3));
  }

  TEST_CASE("partition_infty") {
    CHECK(sizes(partition_infty(2, 3).poset) == std::vector<long long>{1, 3, 7, 15});
    CHECK(sizes(partition_infty(3, 4).poset) == inverse_counts(linear_product({1, 2, 3}), 4));
    CHECK(sizes(partition_infty(1, 4).poset) == std::vector<long long>(5, 1));
    CHECK(is_isomorphic(core(partition_infty(2, 4).poset), partition_lattice(3)).has_value());
  }

  TEST_CASE("signed_partition_infty") {
    CHECK(sizes(signed_partition_infty(1, 4).poset) == std::vector<long long>(5, 1));
    // rank 1 has four Type-B partitions of [2] u -[2] with one nonzero pair
    CHECK(signed_partition_infty(2, 3).poset.level_size(1) == 4);
    CHECK(sizes(signed_partition_infty(2, 5).poset) == inverse_counts(linear_product({1, 3}), 5));
  }

  TEST_CASE("dowling_infty") {
    CHECK(sizes(dowling_infty(1, 3, 4).poset) == std::vector<long long>(5, 1));
    CHECK(sizes(dowling_infty(2, 3, 4).poset) == inverse_counts(linear_product({1, 4}), 4));
    for (int N = 1; N <= 4; ++N)
      CHECK(is_isomorphic(dowling_infty(2, 1, N).poset, partition_infty(2, N).poset).has_value());
    CHECK(is_isomorphic(dowling_infty(2, 2, 4).poset, signed_partition_infty(2, 4).poset).has_value());
  }

  TEST_CASE("from_monoid") {
    auto F4 = from_monoid(rank_two_presentation(2), 3);
    CHECK(sizes(F4.poset) == std::vector<long long>{1, 2, 3, 4});
    auto F2 = from_monoid(dual_braid_presentation(CoxeterType::A(2)), 3);
    CHECK(sizes(F2.poset) == std::vector<long long>{1, 3, 7, 15});
    auto F5 = from_monoid(classical_braid_presentation(CoxeterType::A(2)), 4);
    CHECK(sizes(F5.poset) == std::vector<long long>{1, 2, 4, 7, 12});
    REQUIRE(F5.expected_core.has_value());
    CHECK(F5.expected_core->family == ZooFamily::weak_order);
    CHECK(F2.recipe.find("dual-braid") != std::string::npos);
  }

  TEST_CASE("build_truncation by name") {
    TruncationParams p;
    p.k = 2;
    p.N = 4;
    for (auto& n : truncation_names()) {
      auto T = build_truncation(n, p);
      CHECK(T.N == 4);
      CHECK(T.poset.height() == 4);
      CHECK(T.expected_chi.has_value());
    }
    CHECK_THROWS_AS(build_truncation("nope", p), Error);
  }
}

TEST_SUITE("verifier") {
  TEST_CASE("verify_rank_identity examples") {
    auto r = verify_rank_identity(partition_infty(2, 4));
    CHECK(r.ok);
    CHECK(r.counts == std::vector<std::string>{"1", "3", "7", "15", "31"});
    CHECK(r.chi == IntPolynomial{1, -3, 2});
    CHECK(verify_rank_identity(grid(3, 5)).ok);
    auto c = verify_rank_identity(from_monoid(chains_presentation(2, 3), 8));
    CHECK(c.ok);
    CHECK(c.chi == IntPolynomial{1, -2, 0, 1});
  }

  TEST_CASE("rank identity detects a mutated truncation") {
    auto T = partition_infty(2, 4);
    T.poset = delete_element(T.poset, T.poset.level(3)[0]);
    auto r = verify_rank_identity(T);
    CHECK_FALSE(r.ok);
    REQUIRE(r.mismatch.has_value());
    CHECK(*r.mismatch == 3);
  }

  TEST_CASE("verify_upho examples") {
    auto u = verify_upho(partition_infty(2, 4), 2);
    CHECK(u.ok);
    CHECK(u.filters_checked == 10);
    CHECK(verify_upho(grid(2, 6), 4).ok);
    auto T = partition_infty(2, 4);
    T.poset = delete_element(T.poset, T.poset.level(3)[0]);
    auto bad = verify_upho(T, 1);
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness.has_value());
    try {
      verify_upho(grid(2, 3), 4);
      FAIL("depth beyond N accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DepthExceedsTruncation);
    }
  }

  TEST_CASE("a non-upho truncation with correct rank sizes is rejected") {
    // binary tree = free monoid on two letters, truncated at 2
    std::vector<Cover> c = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
    UphoTruncation T;
    T.poset = build_poset(7, c);
    T.N = 2;
    T.recipe = "tree";
    CHECK(verify_upho(T, 1).ok);
    // same rank sizes 1,2,4 but with one atom covering three elements
    UphoTruncation B;
    B.poset = build_poset(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 6}});
    B.N = 2;
    CHECK_FALSE(verify_upho(B, 1).ok);
  }
}
