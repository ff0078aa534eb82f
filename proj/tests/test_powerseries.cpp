#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "upho/error.hpp"
#include "upho/mobius.hpp"
#include "upho/powerseries.hpp"
#include "upho/zoo.hpp"

using namespace upho;

namespace {

IntPolynomial g16_chi() { return IntPolynomial{1, -1} * IntPolynomial{1, -2}.pow(2) * IntPolynomial{1, -3, 3}.pow(6); }

IntPolynomial random_unit_poly(std::mt19937& rng, int maxdeg) {
  std::vector<BigInt> c(1 + rng() % (maxdeg + 1));
  c[0] = rng() % 2 ? 1 : -1;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = static_cast<int>(rng() % 19) - 9;
  return IntPolynomial(c);
}

}  // namespace

TEST_SUITE("powerseries") {
  TEST_CASE("polynomial basics") {
    IntPolynomial p{1, -2, 1};
    CHECK(p.degree() == 2);
    CHECK(p * IntPolynomial{1, 1} == IntPolynomial{1, -1, -1, 1});
    CHECK((p - p).is_zero());
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
    CHECK(IntPolynomial{1, -1}.pow(3) == IntPolynomial{1, -3, 3, -1});
    CHECK(linear_product({1, 2, 3}) == IntPolynomial{1, -6, 11, -6});
    CHECK(IntPolynomial{1, -6, 12, -8, 1}.str() == "1 - 6x + 12x^2 - 8x^3 + x^4");
  }

  TEST_CASE("series_inverse examples") {
    auto s = series_inverse(IntPolynomial{1, -1}, 3);
    CHECK(s.decimal_coeffs() == std::vector<std::string>{"1", "1", "1", "1"});
    auto o = series_inverse(IntPolynomial{1, -6, 12, -8, 1}, 13);
    CHECK(o[13] == BigInt(-123704));
    auto c = series_inverse(IntPolynomial{1, -4, 6, -3}, 7);
    CHECK(c[7] == BigInt(-80));
    CHECK_THROWS_AS(series_inverse(IntPolynomial{2, 1}, 4), Error);
    CHECK_THROWS_AS(series_inverse(IntPolynomial{}, 4), Error);
    // -1 constant term is a unit too
    auto m = series_inverse(IntPolynomial{-1, 1}, 3);
    CHECK(m.decimal_coeffs() == std::vector<std::string>{"-1", "-1", "-1", "-1"});
  }

  TEST_CASE("octahedron and L(C4) inverses agree with the oracle recurrence") {
    auto o = series_inverse(IntPolynomial{1, -6, 12, -8, 1}, 13);
    auto want = oracle::inverse({1, -6, 12, -8, 1}, 13);
    CHECK(o.coeffs() == want);
    std::vector<long long> octa = {1, 6, 24, 80, 239, 660, 1708, 4160, 9505, 20114, 38196, 59688, 51183, -123704};
    for (std::size_t k = 0; k < octa.size(); ++k) CHECK(o[k] == BigInt(octa[k]));
    auto c = series_inverse(IntPolynomial{1, -4, 6, -3}, 7);
    std::vector<long long> cc = {1, 4, 10, 19, 28, 28, 1, -80};
    for (std::size_t k = 0; k < cc.size(); ++k) CHECK(c[k] == BigInt(cc[k]));
  }

  TEST_CASE("substitute_power") {
    CHECK(substitute_power(IntPolynomial{1, -1}, 2) == IntPolynomial{1, 0, -1});
    CHECK(substitute_power(IntPolynomial{1, -2, 1}, 3) == IntPolynomial{1, 0, 0, -2, 0, 0, 1});
    CHECK(g16_chi().degree() == 15);
    CHECK(substitute_power(g16_chi(), 2).degree() == 30);
    CHECK(substitute_power(g16_chi(), 1) == g16_chi());
  }

  TEST_CASE("series_div") {
    auto s = series_div(IntPolynomial{1, 0, -1}, IntPolynomial{1, -2, 1}, 4);
    CHECK(s.decimal_coeffs() == std::vector<std::string>{"1", "2", "2", "2", "2"});
    auto chi = g16_chi();
    auto g = series_div(substitute_power(chi, 2), chi.pow(2), 24);
    CHECK(g[24] == BigInt("-269758375958758"));
    // independent route: numerator times the oracle inverse
    auto inv = oracle::inverse(chi.pow(2).coeffs(), 24);
    auto want = oracle::truncated_product(substitute_power(chi, 2).coeffs(), inv, 24);
    CHECK(g.coeffs() == want);
    auto one = series_div(chi, chi, 10);
    CHECK(one == IntPowerSeries(IntPolynomial{1}, 10));
    CHECK_THROWS_AS(series_div(IntPolynomial{1}, IntPolynomial{3}, 2), Error);
  }

  TEST_CASE("first_negative_coefficient") {
    CHECK_FALSE(first_negative_coefficient(series_inverse(IntPolynomial{1, -1}.pow(3), 20)).has_value());
    auto k = first_negative_coefficient(series_inverse(IntPolynomial{1, -6, 12, -8, 1}, 13));
    REQUIRE(k.has_value());
    CHECK(*k == 13);
    auto c = first_negative_coefficient(series_inverse(IntPolynomial{1, -4, 6, -3}, 7));
    REQUIRE(c.has_value());
    CHECK(*c == 7);
    auto g = first_negative_coefficient(series_div(substitute_power(g16_chi(), 2), g16_chi().pow(2), 24));
    REQUIRE(g.has_value());
    CHECK(*g <= 24);
  }

  TEST_CASE("default scan order covers the cited indices") {
    CHECK(default_scan_order(IntPolynomial{1, -1}) >= 13);
    CHECK(default_scan_order(IntPolynomial{1, -4, 6, -3}) >= 13);
    CHECK(default_scan_order(g16_chi()) >= 24);
    CHECK(default_scan_order(g16_chi()) == 4 * 15 + 16);
  }

  TEST_CASE("arbitrary precision stress") {
    auto s = series_inverse(IntPolynomial{1, -10}.pow(5), 40);
    // [x^40] (1-10x)^-5 = C(44,4) 10^40
    BigInt want = BigInt(oracle::binom(44, 4));
    for (int i = 0; i < 40; ++i) want *= 10;
    CHECK(s[40] == want);
    CHECK(to_string(s[40]) == "1357510000000000000000000000000000000000000000");
  }

  TEST_CASE("inverse round trip on random polynomials") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 100; ++t) {
      auto p = random_unit_poly(rng, 8);
      std::size_t N = 1 + rng() % 64;
      auto q = series_inverse(p, N);
      auto prod = IntPowerSeries(p, N) * q;
      CHECK(prod == IntPowerSeries(IntPolynomial{1}, N));
      CHECK(q.coeffs() == oracle::inverse(p.coeffs(), N));
    }
  }

  TEST_CASE("series_div reproduces a from a*b / b") {
    std::mt19937 rng(99);
    for (int t = 0; t < 50; ++t) {
      auto a = random_unit_poly(rng, 6);
      auto b = random_unit_poly(rng, 6);
      std::size_t N = 20;
      CHECK(series_div(a * b, b, N) == IntPowerSeries(a, N));
    }
  }
}
