#include <doctest.h>

#include <map>
#include <set>

#include "upho/error.hpp"
#include "upho/iso.hpp"
#include "upho/lattice.hpp"
#include "upho/monoid.hpp"
#include "upho/powerseries.hpp"
#include "upho/zoo.hpp"

using namespace upho;

namespace {

// congruence classes of length-l words by flood fill over single rewrites
std::size_t oracle_classes(const MonoidPresentation& P, int l) {
  int g = static_cast<int>(P.generators.size());
  std::vector<Word> all{{}};
  for (int i = 0; i < l; ++i) {
    std::vector<Word> next;
    for (auto& w : all)
      for (int a = 0; a < g; ++a) {
        auto v = w;
        v.push_back(a);
        next.push_back(v);
      }
    all = std::move(next);
  }
  std::set<Word> seen;
  std::size_t classes = 0;
  for (auto& w : all) {
    if (seen.count(w)) continue;
    ++classes;
    std::vector<Word> st{w};
    seen.insert(w);
    while (!st.empty()) {
      auto x = st.back();
      st.pop_back();
      for (auto& [u, v] : P.relations)
        for (int dir = 0; dir < 2; ++dir) {
          const Word& from = dir ? v : u;
          const Word& to = dir ? u : v;
          for (std::size_t i = 0; i + from.size() <= x.size(); ++i) {
            if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<long>(i))) continue;
            auto y = x;
            std::copy(to.begin(), to.end(), y.begin() + static_cast<long>(i));
            if (seen.insert(y).second) st.push_back(y);
          }
        }
    }
  }
  return classes;
}

}  // namespace

TEST_SUITE("monoid-engine") {
  TEST_CASE("enumerate_elements examples") {
    auto R = MonoidPresentation::parse_text("gens: a b\nrel: ba = aa\n");
    auto M = enumerate_elements(R, 2);
    CHECK(M.poset.level_size(2) == 3);
    CHECK(M.element_of(R.parse_word("aa")) == M.element_of(R.parse_word("ba")));
    CHECK(M.element_of(R.parse_word("ab")) != M.element_of(R.parse_word("bb")));
    CHECK(enumerate_elements(free_presentation(2), 3).poset.level_size(3) == 8);
    auto B = enumerate_elements(classical_braid_presentation(CoxeterType::A(2)), 3);
    CHECK(B.poset.level_size(3) == 7);
    CHECK(M.presentation.word_str(M.representative[M.element_of(R.parse_word("ba"))]) == "aa");
    CHECK(M.presentation.word_str({}) == "1");
  }

  TEST_CASE("class counts agree with the rewriting oracle") {
    std::vector<MonoidPresentation> ps = {rank_two_presentation(2),
                                          rank_two_presentation(3),
                                          chains_presentation(2, 3),
                                          chains_presentation(3, 3),
                                          classical_braid_presentation(CoxeterType::A(2)),
                                          classical_braid_presentation(CoxeterType::I2(4)),
                                          dual_braid_presentation(CoxeterType::A(2)),
                                          figure8_presentation(),
                                          MonoidPresentation::parse_text("gens: a b\nrel: ab = bb\nrel: ab = aa\n")};
    for (auto& P : ps) {
      auto M = enumerate_elements(P, 5);
      for (int l = 0; l <= 5; ++l) CHECK_MESSAGE(M.poset.level_size(l) == oracle_classes(P, l), P.name() << " l=" << l);
    }
  }

  TEST_CASE("chains normal forms") {
    // rank sizes follow 1/(1 - r x + (r-1) x^n)
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
      auto M = enumerate_elements(chains_presentation(r, n), 8);
      auto want = series_inverse(IntPolynomial{1, -r} + IntPolynomial::monomial(r - 1, n), 8);
      for (int l = 0; l <= 8; ++l) CHECK(BigInt(M.poset.level_size(l)) == want[l]);
    }
  }

  TEST_CASE("left cancellation") {
    CHECK(left_cancellative_check(enumerate_elements(rank_two_presentation(2), 8)).ok);
    CHECK(left_cancellative_check(enumerate_elements(free_presentation(2), 4)).ok);
    auto bad = MonoidPresentation::parse_text("gens: a b\nrel: ab = bb\nrel: ab = aa\n");
    auto v = left_cancellative_check(enumerate_elements(bad, 3));
    CHECK_FALSE(v.ok);
    CHECK(v.b != v.c);
    CHECK_FALSE(v.x.empty());
  }

  TEST_CASE("truncated joins") {
    auto D = enumerate_elements(dual_braid_presentation(CoxeterType::A(2)), 6);
    CHECK(right_lcm_check(D).status == JoinVerdict::Status::LatticeWithinTruncation);
    auto F = right_lcm_check(enumerate_elements(free_presentation(2), 4));
    CHECK(F.status == JoinVerdict::Status::JoinFree);
    auto C = enumerate_elements(chains_presentation(2, 3), 8);
    auto cv = right_lcm_check(C);
    CHECK(cv.status == JoinVerdict::Status::LatticeWithinTruncation);
    // atoms join on a power of the first generator
    auto x1 = C.element_of({0}), x2 = C.element_of({1});
    auto j = try_join(C.poset, x1, x2);
    REQUIRE(j.has_value());
    CHECK(C.presentation.word_str(C.representative[*j]) == "aaa");
    CHECK(std::string(status_name(JoinVerdict::Status::JoinFree)) == "join-free");
  }

  TEST_CASE("presentations") {
    auto b = classical_braid_presentation(CoxeterType::A(2));
    CHECK(b.relations.size() == 1);
    CHECK(b.to_text().find("aba = bab") != std::string::npos);
    auto s2 = classical_braid_presentation(CoxeterType::A(1));
    CHECK(s2.generators.size() == 1);
    CHECK(s2.relations.empty());
    auto i4 = classical_braid_presentation(CoxeterType::I2(4));
    REQUIRE(i4.relations.size() == 1);
    CHECK(i4.to_text().find("abab = baba") != std::string::npos);

    auto d = dual_braid_presentation(CoxeterType::A(2));
    CHECK(d.generators.size() == 3);
    auto same = MonoidPresentation::parse_text("gens: a b c\nrel: ab = bc = ca\n");
    // same congruence, possibly different generating pairs
    auto Md = enumerate_elements(d, 4), Ms = enumerate_elements(same, 4);
    CHECK(Md.class_of == Ms.class_of);
    CHECK(dual_braid_presentation(CoxeterType::A(1)).relations.empty());
    CHECK(dual_braid_presentation(CoxeterType::A(3)).generators.size() == 6);

    CHECK(chains_presentation(2, 2).relations == rank_two_presentation(2).relations);
    auto f = figure8_presentation();
    CHECK(f.generators.size() == 3);
    CHECK(f.relations.size() == 2);
    CHECK(rank_two_presentation(2).to_text().find("aa = ba") != std::string::npos);
    CHECK(d.name() == "dual-braid(A2)");
  }

  TEST_CASE("presentation errors") {
    CHECK_THROWS_AS(MonoidPresentation::parse_text("gens: a b\nrel: a = bb\n"), Error);
    try {
      MonoidPresentation::parse_text("gens: a b\nrel: a = bb\n");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InhomogeneousRelation);
    }
    CHECK_THROWS_AS(MonoidPresentation::parse_text("gens: a b\nrel: ac = ab\n"), Error);
    auto round = MonoidPresentation::parse_text(figure8_presentation().to_text());
    CHECK(round.relations == figure8_presentation().relations);
  }

  TEST_CASE("word budget") {
    try {
      enumerate_elements(free_presentation(3), 12, 1000);
      FAIL("expected a budget error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
  }

  TEST_CASE("cores of monoid posets") {
    auto D = enumerate_elements(dual_braid_presentation(CoxeterType::A(2)), 4);
    CHECK(is_isomorphic(core(D.poset), noncrossing(CoxeterType::A(2))).has_value());
    auto W = enumerate_elements(classical_braid_presentation(CoxeterType::A(2)), 4);
    CHECK(is_isomorphic(core(W.poset), weak_order(CoxeterType::A(2))).has_value());
    auto R = enumerate_elements(rank_two_presentation(3), 4);
    CHECK(is_isomorphic(core(R.poset), rank_two_lattice(3)).has_value());
  }

  TEST_CASE("figure8 monoid core") {
    // the computed core has 8 elements: cb sits below a v b v c = aab
    auto M = enumerate_elements(figure8_presentation(), 4);
    auto C = core(M.poset);
    CHECK(C.size() == 8);
    auto top = join_of_atoms(M.poset);
    auto& P = M.presentation;
    CHECK(M.element_of(P.parse_word("aab")) == top);
    CHECK(M.element_of(P.parse_word("cbb")) == top);
    CHECK(M.poset.leq(M.element_of(P.parse_word("cb")), top));
  }
}
