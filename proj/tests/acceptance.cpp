// One line per acceptance criterion. Exit status is nonzero if any line fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "upho/iso.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/verifier.hpp"

using namespace upho;

namespace {

// pinned limits
constexpr double kGoldenSeconds = 1.0;     // each criterion-1 number
constexpr double kIdentitySeconds = 300.0;  // criterion 2 in total, one thread
constexpr int kMinUphoDepth = 2;
constexpr int kMaxUphoDepth = 3;
constexpr std::size_t kProductLimit = 5000;
constexpr int kRandomZoo = 50;
constexpr int kRandomSeries = 100;
constexpr int kSymCases = 20;
constexpr int kSymSize = 6;
constexpr unsigned kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
  bool ok = true;
  std::vector<std::string> notes;
  void check(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
};

struct Case {
  std::string name;
  std::function<UphoTruncation()> make;
};

IntPolynomial g16_chi() { return IntPolynomial{1, -1} * IntPolynomial{1, -2}.pow(2) * IntPolynomial{1, -3, 3}.pow(6); }

std::vector<Case> criterion2_cases() {
  std::vector<Case> c;
  for (int d = 1; d <= 4; ++d) c.push_back({"grid(" + std::to_string(d) + ")", [d] { return grid(d, 8); }});
  for (int k = 1; k <= 3; ++k) c.push_back({"boolean-infty(" + std::to_string(k) + ")", [k] { return boolean_infty(k, 8); }});
  c.push_back({"subspace-infty(2,2)", [] { return subspace_infty(2, 2, 5); }});
  for (int k = 1; k <= 3; ++k)
    c.push_back({"partition-infty(" + std::to_string(k) + ")", [k] { return partition_infty(k, 6); }});
  c.push_back({"signed-partition-infty(2)", [] { return signed_partition_infty(2, 5); }});
  for (int m = 1; m <= 3; ++m)
    c.push_back({"dowling-infty(2," + std::to_string(m) + ")", [m] { return dowling_infty(2, m, 5); }});
  for (int r = 2; r <= 4; ++r)
    c.push_back({"rank-two(" + std::to_string(r) + ")", [r] { return from_monoid(rank_two_presentation(r), 8); }});
  c.push_back({"chains(2,3)", [] { return from_monoid(chains_presentation(2, 3), 8); }});
  c.push_back({"chains(3,3)", [] { return from_monoid(chains_presentation(3, 3), 8); }});
  c.push_back({"classical-braid(A2)", [] { return from_monoid(classical_braid_presentation(CoxeterType::A(2)), 8); }});
  c.push_back({"dual-braid(A2)", [] { return from_monoid(dual_braid_presentation(CoxeterType::A(2)), 6); }});
  c.push_back({"figure8", [] { return from_monoid(figure8_presentation(), 6); }});
  return c;
}

Line criterion1() {
  Line L;
  auto timed = [&](const std::string& what, const std::function<bool()>& f) {
    auto t = Clock::now();
    bool ok = f();
    double s = since(t);
    L.check(ok, what);
    L.check(s < kGoldenSeconds, what + " took " + std::to_string(s) + " s");
  };
  timed("[x^13] octahedron = -123704",
        [] { return series_inverse(IntPolynomial{1, -6, 12, -8, 1}, 13)[13] == BigInt(-123704); });
  timed("[x^7] L(C4) = -80", [] { return series_inverse(IntPolynomial{1, -4, 6, -3}, 7)[7] == BigInt(-80); });
  timed("[x^24] g16 m=2 = -269758375958758", [] {
    auto chi = g16_chi();
    return series_div(substitute_power(chi, 2), chi.pow(2), 24)[24] == BigInt("-269758375958758");
  });
  timed("chi*(L(C4)) by Moebius",
        [] { return reciprocal_char_poly(bond_lattice(Graph::cycle(4))) == IntPolynomial{1, -4, 6, -3}; });
  timed("chi*(octahedron) by Moebius",
        [] { return reciprocal_char_poly(cross_polytope_faces(3)) == IntPolynomial{1, -6, 12, -8, 1}; });
  timed("chi*(g16) by the chromatic route", [] { return bond_char_poly(Graph::sixteen_vertex_example()) == g16_chi(); });
  L.notes.push_back("6 golden values");
  return L;
}

Line criterion2() {
  Line L;
  auto t = Clock::now();
  std::size_t n = 0;
  for (auto& c : criterion2_cases()) {
    auto T = c.make();
    auto r = verify_rank_identity(T);
    L.check(r.ok, c.name + " F = 1/chi*(core) through N = " + std::to_string(T.N));
    ++n;
  }
  double s = since(t);
  L.check(s < kIdentitySeconds, "runtime " + std::to_string(s) + " s");
  std::ostringstream o;
  o << n << " truncations, " << std::fixed;
  o.precision(2);
  o << s << " s";
  L.notes.push_back(o.str());
  return L;
}

Line criterion3() {
  Line L;
  std::size_t filters = 0;
  for (auto& c : criterion2_cases()) {
    auto T = c.make();
    int depth = std::min(kMaxUphoDepth, T.N);
    L.check(depth >= kMinUphoDepth, c.name + " depth");
    auto u = verify_upho(T, depth);
    filters += u.filters_checked;
    L.check(u.ok, c.name + " upho to depth " + std::to_string(depth));
  }
  // control: delete one element and the check must fail
  auto T = partition_infty(2, 4);
  T.poset = delete_element(T.poset, T.poset.level(3)[0]);
  auto bad = verify_upho(T, 1);
  L.check(!bad.ok && bad.witness, "deletion control is rejected");
  auto G = grid(2, 6);
  G.poset = delete_element(G.poset, G.poset.level(2)[1]);
  L.check(!verify_upho(G, 2).ok, "grid deletion control is rejected");
  L.notes.push_back(std::to_string(filters) + " filters, controls rejected");
  return L;
}

Line criterion4() {
  Line L;
  auto iso = [](const GradedPoset& a, const GradedPoset& b) { return is_isomorphic(a, b).has_value(); };
  auto nc = noncrossing(CoxeterType::A(2));
  auto dual_core = core(from_monoid(dual_braid_presentation(CoxeterType::A(2)), 4).poset);
  L.check(iso(dual_core, nc), "core(dual braid S3) = NC(S3)");
  L.check(iso(nc, partition_lattice(3)), "NC(S3) = Pi_3");
  L.check(iso(core(partition_infty(2, 4).poset), partition_lattice(3)), "core(partition-infty(2)) = Pi_3");
  L.check(iso(core(from_monoid(classical_braid_presentation(CoxeterType::A(2)), 4).poset), weak_order(CoxeterType::A(2))),
          "core(classical braid S3) = weak order");
  for (int k = 1; k <= 3; ++k)
    L.check(iso(core(boolean_infty(k, k + 2).poset), boolean_lattice(k)), "core(boolean-infty(" + std::to_string(k) + ")) = B_k");
  auto A = boolean_infty(2, 4), B = grid(2, 4);
  L.check(!iso(A.poset, B.poset), "boolean-infty(2) differs from grid(2)");
  L.check(iso(core(A.poset), core(B.poset)), "same core B_2");
  L.notes.push_back("7 core identifications, 1 non-isomorphism");
  return L;
}

Line criterion5() {
  Line L;
  std::vector<std::pair<std::string, GradedPoset>> cores = {
      {"B3", boolean_lattice(3)},          {"B4", boolean_lattice(4)},
      {"B2(2)", subspace_lattice(2, 2)},   {"B3(2)", subspace_lattice(3, 2)},
      {"Pi3", partition_lattice(3)},       {"Pi4", partition_lattice(4)},
      {"PiB2", signed_partition_lattice(2)}, {"PiB3", signed_partition_lattice(3)},
      {"Q2(Z3)", dowling_lattice(2, 3)},   {"M3", rank_two_lattice(3)},
      {"M4", rank_two_lattice(4)},         {"chain_sum(2,3)", chain_sum(2, 3)},
      {"chain_sum(3,3)", chain_sum(3, 3)}, {"weak(S3)", weak_order(CoxeterType::A(2))},
      {"NC(S3)", noncrossing(CoxeterType::A(2))}, {"NC(S4)", noncrossing(CoxeterType::A(3))},
      {"figure8", figure8_dual_example()}};
  std::vector<std::pair<std::string, GradedPoset>> non = {
      {"octahedron", cross_polytope_faces(3)}, {"hypercube3", hypercube_faces(3)},
      {"cross4", cross_polytope_faces(4)},     {"L(C4)", bond_lattice(Graph::cycle(4))},
      {"L(C5)", bond_lattice(Graph::cycle(5))}, {"U(3,4)", uniform_matroid_flats(3, 4)},
      {"U(3,5)", uniform_matroid_flats(3, 5)}, {"U(4,5)", uniform_matroid_flats(4, 5)},
      {"dual figure8", *dual(figure8_dual_example())}};
  for (auto& [id, P] : cores) L.check(!obstruction_report(id, P).any_fail(), id + " passes every test");
  for (auto& [id, P] : non) {
    auto r = obstruction_report(id, P);
    bool certified = false;
    for (auto& e : r.entries) certified = certified || (e.verdict == Verdict::fail && !e.certificate.empty());
    L.check(certified, id + " fails with a certificate");
  }
  L.check(obstruction_report_chi("g16", g16_chi()).any_fail(), "g16 fails positivity with m = 2");
  auto arith = [&](const GradedPoset& P, long top, long bound, const std::string& what) {
    auto e = obstruction_structural(P);
    bool ok = e.verdict == Verdict::fail &&
              e.certificate.find("covers " + std::to_string(top) + " elements") != std::string::npos &&
              e.certificate.find("at most " + std::to_string(bound)) != std::string::npos && top > bound;
    L.check(ok, what);
  };
  for (int n : {3, 4}) arith(cross_polytope_faces(n), 1L << (n - 1), n, "2^(n-1) > n at n = " + std::to_string(n));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}})
    arith(uniform_matroid_flats(k, n), oracle::binom(n - 1, k - 2), k - 1,
          "C(n-1,k-2) > k-1 at U(" + std::to_string(k) + "," + std::to_string(n) + ")");
  L.notes.push_back(std::to_string(cores.size()) + " cores clean, " + std::to_string(non.size() + 1) + " non-cores refuted");
  return L;
}

Line criterion6() {
  Line L;
  for (int n = 0; n <= 6; ++n) {
    L.check(whitney_inverse_check(whitney_tables("boolean", n)), "boolean n = " + std::to_string(n));
    L.check(whitney_inverse_check(whitney_tables("partition", n)), "partition n = " + std::to_string(n));
  }
  for (int n = 0; n <= 4; ++n) {
    L.check(whitney_inverse_check(whitney_tables("signed-partition", n)), "signed n = " + std::to_string(n));
    for (int m : {2, 3})
      L.check(whitney_inverse_check(whitney_tables("dowling", n, m)),
              "dowling m = " + std::to_string(m) + " n = " + std::to_string(n));
  }
  auto W = whitney_tables("partition", 3);
  BigMatrix S2 = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 3, 1, 0}, {1, 7, 6, 1}};
  BigMatrix S1 = {{1, 0, 0, 0}, {-1, 1, 0, 0}, {2, -3, 1, 0}, {-6, 11, -6, 1}};
  L.check(W.V == S2 && W.v == S1, "4x4 Stirling matrices entry for entry");
  std::mt19937 rng(kSeed);
  for (int t = 0; t < kSymCases; ++t) {
    std::vector<BigInt> a;
    for (int i = 0; i < kSymSize; ++i) a.push_back(static_cast<int>(rng() % 11) - 5);
    auto r = sym_matrix_inverse_check(a, kSymSize);
    // direct product as the oracle
    bool id = is_identity(multiply(r.A, r.B));
    L.check(r.ok && id, "sym matrices case " + std::to_string(t));
  }
  L.notes.push_back("4 families, Stirling 4x4, " + std::to_string(kSymCases) + " random sym cases");
  return L;
}

GradedPoset random_zoo(std::mt19937& rng, std::string& name) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  switch (rng() % 14) {
    case 0: { int n = pick(1, 5); name = "B" + std::to_string(n); return boolean_lattice(n); }
    case 1: { int n = pick(1, 3); unsigned q = pick(2, 3); name = "B" + std::to_string(n) + "(" + std::to_string(q) + ")"; return subspace_lattice(n, q); }
    case 2: { int n = pick(1, 5); name = "Pi" + std::to_string(n); return partition_lattice(n); }
    case 3: { int n = pick(1, 3); name = "PiB" + std::to_string(n); return signed_partition_lattice(n); }
    case 4: { int n = pick(1, 3), m = pick(1, 3); name = "Q" + std::to_string(n) + "(" + std::to_string(m) + ")"; return dowling_lattice(n, m); }
    case 5: { int r = pick(2, 6); name = "M" + std::to_string(r); return rank_two_lattice(r); }
    case 6: { int r = pick(2, 4), n = pick(2, 5); name = "chain_sum"; return chain_sum(r, n); }
    case 7: { int n = pick(1, 4); name = "cross" + std::to_string(n); return cross_polytope_faces(n); }
    case 8: { int n = pick(1, 4); name = "cube" + std::to_string(n); return hypercube_faces(n); }
    case 9: {
      // random connected graph on up to 6 vertices
      Graph g;
      g.n = pick(2, 6);
      for (int v = 2; v <= g.n; ++v) g.edges.emplace_back(pick(1, v - 1), v);
      for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v)
          if (rng() % 3 == 0 && std::find(g.edges.begin(), g.edges.end(), std::pair{u, v}) == g.edges.end())
            g.edges.emplace_back(u, v);
      name = "bond(" + std::to_string(g.n) + " vertices, " + std::to_string(g.edges.size()) + " edges)";
      return bond_lattice(g);
    }
    case 10: { int n = pick(2, 6), k = pick(1, n); name = "U"; return uniform_matroid_flats(k, n); }
    case 11: {
      CoxeterType t = rng() % 2 ? CoxeterType::A(pick(1, 3)) : CoxeterType::I2(pick(2, 6));
      name = "weak " + t.name();
      return weak_order(t);
    }
    case 12: { auto t = CoxeterType::A(pick(1, 3)); name = "NC " + t.name(); return noncrossing(t); }
    default: name = "figure8"; return figure8_dual_example();
  }
}

Line criterion7() {
  Line L;
  std::mt19937 rng(kSeed);
  // Moebius against the chain-count oracle
  std::vector<GradedPoset> zoo;
  for (int t = 0; t < kRandomZoo; ++t) {
    std::string name;
    auto P = random_zoo(rng, name);
    auto mu = oracle::mobius_matrix(P);
    auto le = oracle::closure(P);
    MobiusTable tab(P);
    bool ok = true;
    for (Element x = 0; x < P.size() && ok; ++x)
      for (Element y = 0; y < P.size() && ok; ++y)
        if (le[x][y]) ok = tab(x, y) == mu[x][y];
    L.check(ok, "Moebius on " + name);
    zoo.push_back(std::move(P));
  }
  // chi* of products
  std::size_t products = 0;
  for (std::size_t i = 0; i < zoo.size(); i += 3)
    for (std::size_t j = i; j < zoo.size(); j += 7) {
      if (zoo[i].size() * zoo[j].size() > kProductLimit) continue;
      auto X = direct_product(zoo[i], zoo[j]);
      L.check(reciprocal_char_poly(X) == reciprocal_char_poly(zoo[i]) * reciprocal_char_poly(zoo[j]),
              "product " + std::to_string(i) + " x " + std::to_string(j));
      ++products;
    }
  // series round trip
  for (int t = 0; t < kRandomSeries; ++t) {
    std::vector<BigInt> c(1 + rng() % 9);
    c[0] = rng() % 2 ? 1 : -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = static_cast<int>(rng() % 19) - 9;
    IntPolynomial p(c);
    std::size_t N = 1 + rng() % 64;
    auto q = series_inverse(p, N);
    L.check(IntPowerSeries(p, N) * q == IntPowerSeries(IntPolynomial{1}, N) && q.coeffs() == oracle::inverse(p.coeffs(), N),
            "series round trip " + std::to_string(t));
  }
  // supersolvable factorization, then every trim of those lattices
  std::size_t trims = 0, ss = 0;
  auto family = [&](ZooFamily f, int n, std::vector<int> params) {
    ZooRecipe r;
    r.family = f;
    r.params = std::move(params);
    auto P = build_zoo(r);
    auto chain = *standard_modular_chain(r, P);
    auto s = supersolvable_factorization_check(P, chain);
    L.check(s.ok, r.describe() + " factorization");
    ++ss;
    for (int k = 1; k <= n; ++k) {
      std::vector<Element> old;
      auto T = trim(P, chain, k, &old);
      std::vector<Element> tc;
      for (auto c : chain) tc.push_back(static_cast<Element>(std::find(old.begin(), old.end(), c) - old.begin()));
      L.check(supersolvable_factorization_check(T, tc).ok, r.describe() + " trim k = " + std::to_string(k));
      ++trims;
    }
  };
  for (int n = 1; n <= 6; ++n) family(ZooFamily::partition, n - 1, {n});
  for (int n = 1; n <= 6; ++n) family(ZooFamily::boolean, n, {n});
  for (int n = 1; n <= 4; ++n) family(ZooFamily::dowling_cyclic, n, {n, 2});
  L.notes.push_back(std::to_string(kRandomZoo) + " Moebius, " + std::to_string(products) + " products, " +
                    std::to_string(kRandomSeries) + " series, " + std::to_string(ss) + " supersolvable, " +
                    std::to_string(trims) + " trims");
  return L;
}

}  // namespace

int main() {
  std::vector<std::function<Line()>> crit = {criterion1, criterion2, criterion3, criterion4,
                                             criterion5, criterion6, criterion7};
  int failed = 0;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    Line L;
    try {
      L = crit[i]();
    } catch (const std::exception& e) {
      L.ok = false;
      L.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (L.ok ? "PASS" : "FAIL");
    for (auto& n : L.notes) std::cout << " | " << n;
    std::cout << "\n";
    failed += !L.ok;
  }
  return failed ? 1 : 0;
}
