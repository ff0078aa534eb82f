// Boolean, subspace, rank-two, chain sums, polytope faces, uniform matroids,
// Coxeter posets, the 7-element example
#include <map>

#include "upho/field.hpp"
#include "upho/zoo.hpp"
#include "zoo_build.hpp"

namespace upho {

using detail::elems_str;

namespace {

std::string set_label(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string mask_label(std::uint64_t mask) {
  std::vector<int> xs;
  for (int i = 0; i < 64; ++i)
    if ((mask >> i) & 1u) xs.push_back(i + 1);
  return set_label(xs);
}

}  // namespace

GradedPoset boolean_lattice(int n) {
  if (n < 0) throw Error(ErrorCode::BadInput, "boolean lattice needs n >= 0");
  if (n > 15) throw Error(ErrorCode::SizeGuard, "boolean lattice limited to n <= 15");
  const std::uint32_t N = 1u << n;
  // subsets ordered by (size, mask)
  std::vector<std::uint32_t> masks(N);
  for (std::uint32_t i = 0; i < N; ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint32_t> idx(N);
  for (std::uint32_t i = 0; i < N; ++i) idx[masks[i]] = i;
  std::vector<Cover> cv;
  std::vector<int> rk(N);
  std::vector<std::string> lab(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    std::uint32_t s = masks[i];
    rk[i] = __builtin_popcount(s);
    lab[i] = mask_label(s);
    for (int j = 0; j < n; ++j)
      if (!((s >> j) & 1u)) cv.push_back({i, idx[s | (1u << j)]});
  }
  return GradedPoset::build(N, std::move(cv), std::move(rk), std::move(lab));
}

std::string subspace_key(const std::vector<Vec>& rows, std::size_t dim) {
  std::string k;
  k.push_back(static_cast<char>(rows.size()));
  for (const auto& r : rows)
    for (std::size_t j = 0; j < dim; ++j) k.push_back(static_cast<char>(r[j]));
  return k;
}

std::vector<Vec> subspace_unkey(const std::string& k, std::size_t dim) {
  std::size_t d = static_cast<unsigned char>(k[0]);
  std::vector<Vec> rows(d, Vec(dim));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < dim; ++j) rows[i][j] = static_cast<std::uint8_t>(k[1 + i * dim + j]);
  return rows;
}

// "<100,011>": reduced echelon basis rows over the given coordinates
std::string subspace_label(const std::vector<Vec>& rows, std::size_t shown) {
  std::string s = "<";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    for (std::size_t j = 0; j < shown; ++j) s += static_cast<char>('0' + rows[i][j]);
  }
  return s + ">";
}

namespace detail {

// subspaces of F_q^ambient; with k >= 0 only those inside the first dim+k-1 coordinates
Levels subspace_levels(std::size_t ambient, unsigned q, int max_dim, int k) {
  FiniteField F(q);
  return build_levels(
      {subspace_key({}, ambient)},
      [&, ambient, k](const std::string& key, const Emit& emit) {
        auto rows = subspace_unkey(key, ambient);
        std::size_t d = rows.size();
        std::size_t span = k >= 0 ? std::min(ambient, d + static_cast<std::size_t>(k)) : ambient;
        // every vector supported on the first `span` coordinates
        std::size_t total = 1;
        for (std::size_t j = 0; j < span; ++j) total *= q;
        Vec v(ambient, 0);
        for (std::size_t code = 1; code < total; ++code) {
          std::size_t c = code;
          for (std::size_t j = 0; j < span; ++j) {
            v[j] = static_cast<std::uint8_t>(c % q);
            c /= q;
          }
          auto r2 = rows;
          r2.push_back(v);
          if (rref(F, r2) == d + 1) emit(subspace_key(r2, ambient));
        }
      },
      max_dim);
}

}  // namespace detail

GradedPoset subspace_lattice(int n, unsigned q) {
  if (n < 0) throw Error(ErrorCode::BadInput, "subspace lattice needs n >= 0");
  FiniteField F(q);  // validates q
  if (n == 0) return GradedPoset::build(1, {}, std::vector<int>{0}, {"<>"});
  auto L = detail::subspace_levels(static_cast<std::size_t>(n), q, n, -1);
  return detail::assemble(L, [n](const std::string& k) {
    return subspace_label(subspace_unkey(k, static_cast<std::size_t>(n)), static_cast<std::size_t>(n));
  });
}

GradedPoset rank_two_lattice(int r) {
  if (r < 1) throw Error(ErrorCode::BadInput, "M_r needs r >= 1");
  std::vector<Cover> cv;
  std::vector<int> rk{0};
  std::vector<std::string> lab{"0"};
  for (int i = 1; i <= r; ++i) {
    rk.push_back(1);
    lab.push_back("s" + std::to_string(i));
    cv.push_back({0, static_cast<Element>(i)});
    cv.push_back({static_cast<Element>(i), static_cast<Element>(r + 1)});
  }
  rk.push_back(2);
  lab.push_back("1");
  return GradedPoset::build(static_cast<std::size_t>(r) + 2, std::move(cv), std::move(rk), std::move(lab));
}

GradedPoset chain_sum(int r, int n) {
  if (r < 1 || n < 2) throw Error(ErrorCode::BadInput, "chain_sum needs r >= 1, n >= 2");
  std::vector<Cover> cv;
  std::vector<int> rk{0};
  std::vector<std::string> lab{"0"};
  const Element top = static_cast<Element>(1 + r * (n - 1));
  // element (i, j), chain i in 1..r, height j in 1..n-1, rank-major
  auto id = [&](int i, int j) { return static_cast<Element>(1 + (j - 1) * r + (i - 1)); };
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= r; ++i) {
      rk.push_back(j);
      lab.push_back("c" + std::to_string(i) + "." + std::to_string(j));
      cv.push_back({j == 1 ? 0 : id(i, j - 1), id(i, j)});
      if (j == n - 1) cv.push_back({id(i, j), top});
    }
  rk.push_back(n);
  lab.push_back("1");
  return GradedPoset::build(static_cast<std::size_t>(top) + 1, std::move(cv), std::move(rk), std::move(lab));
}

GradedPoset cross_polytope_faces(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "cross polytope needs n >= 1");
  if (n > 9) throw Error(ErrorCode::SizeGuard, "cross polytope limited to n <= 9");
  // words over {0,+,-}; key sorts by rank because of the leading count byte
  auto L = detail::build_levels(
      {std::string(n, '0')},
      [n](const std::string& w, const detail::Emit& emit) {
        for (int i = 0; i < n; ++i)
          if (w[i] == '0')
            for (char c : {'+', '-'}) {
              std::string u = w;
              u[i] = c;
              emit(u);
            }
      },
      -1);
  GradedPoset P = detail::assemble(L, [](const std::string& k) { return k; });
  return detail::with_top(P, "1");
}

GradedPoset hypercube_faces(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "hypercube needs n >= 1");
  if (n > 9) throw Error(ErrorCode::SizeGuard, "hypercube limited to n <= 9");
  std::vector<std::string> verts;
  for (int m = 0; m < (1 << n); ++m) {
    std::string w(n, '+');
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) w[i] = '-';
    verts.push_back(w);
  }
  auto L = detail::build_levels(
      verts,
      [n](const std::string& w, const detail::Emit& emit) {
        for (int i = 0; i < n; ++i)
          if (w[i] != '*') {
            std::string u = w;
            u[i] = '*';
            emit(u);
          }
      },
      -1);
  GradedPoset V = detail::assemble(L, [](const std::string& k) { return k; });
  // shift up by one and add the empty face below the vertices
  std::vector<Cover> cv;
  std::vector<int> rk{0};
  std::vector<std::string> lab{"empty"};
  for (Element x = 0; x < V.size(); ++x) {
    rk.push_back(V.rank(x) + 1);
    lab.push_back(V.label(x));
    if (V.rank(x) == 0) cv.push_back({0, x + 1});
  }
  for (const auto& c : V.covers()) cv.push_back({c.lower + 1, c.upper + 1});
  return GradedPoset::build(V.size() + 1, std::move(cv), std::move(rk), std::move(lab));
}

GradedPoset uniform_matroid_flats(int k, int n) {
  if (n < 1 || k < 1 || k > n) throw Error(ErrorCode::BadInput, "uniform matroid needs 1 <= k <= n");
  if (n > 16) throw Error(ErrorCode::SizeGuard, "uniform matroid limited to n <= 16");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) < k) masks.push_back(m);
  if (masks.size() > kMaxElements) throw Error(ErrorCode::SizeGuard, "too many flats");
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<std::uint32_t, Element> idx;
  for (std::size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = static_cast<Element>(i);
  const Element top = static_cast<Element>(masks.size());
  std::vector<Cover> cv;
  std::vector<int> rk;
  std::vector<std::string> lab;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::uint32_t s = masks[i];
    rk.push_back(__builtin_popcount(s));
    lab.push_back(mask_label(s));
    if (__builtin_popcount(s) == k - 1) {
      cv.push_back({static_cast<Element>(i), top});
      continue;
    }
    for (int j = 0; j < n; ++j)
      if (!((s >> j) & 1u)) cv.push_back({static_cast<Element>(i), idx.at(s | (1u << j))});
  }
  rk.push_back(k);
  lab.push_back(mask_label((n == 32 ? 0 : (1u << n)) - 1));
  return GradedPoset::build(masks.size() + 1, std::move(cv), std::move(rk), std::move(lab));
}

namespace {

GradedPoset coxeter_poset(const CoxeterGroup& W, const std::vector<int>& elems,
                          const std::vector<int>& rank, const std::vector<std::pair<int, int>>& covers,
                          bool cycle_labels) {
  // order by (rank, label)
  std::vector<int> ord(elems.size());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
  auto lab_of = [&](int w) { return cycle_labels ? W.cycles(w) : W.one_line(w); };
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return W.reduced_word(elems[a]) < W.reduced_word(elems[b]);
  });
  std::map<int, Element> pos;
  for (std::size_t i = 0; i < ord.size(); ++i) pos[elems[ord[i]]] = static_cast<Element>(i);
  std::vector<int> rk(elems.size());
  std::vector<std::string> lab(elems.size());
  for (std::size_t i = 0; i < ord.size(); ++i) {
    rk[i] = rank[ord[i]];
    lab[i] = lab_of(elems[ord[i]]);
  }
  std::vector<Cover> cv;
  for (auto [u, v] : covers) cv.push_back({pos.at(u), pos.at(v)});
  std::sort(cv.begin(), cv.end(), [](const Cover& a, const Cover& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return GradedPoset::build(elems.size(), std::move(cv), std::move(rk), std::move(lab));
}

}  // namespace

GradedPoset weak_order(CoxeterType t) {
  CoxeterGroup W(t);
  std::vector<int> elems, rank;
  std::vector<std::pair<int, int>> cv;
  for (int w = 0; w < W.order(); ++w) {
    elems.push_back(w);
    rank.push_back(W.length(w));
    for (int s : W.simple()) {
      int ws = W.mul(w, s);
      if (W.length(ws) == W.length(w) + 1) cv.emplace_back(w, ws);
    }
  }
  return coxeter_poset(W, elems, rank, cv, false);
}

GradedPoset noncrossing(CoxeterType t) {
  CoxeterGroup W(t);
  const int c = W.coxeter_element();
  std::vector<int> elems, rank;
  std::vector<char> in(W.order(), 0);
  for (int w = 0; w < W.order(); ++w)
    if (W.leq_absolute(w, c)) {
      in[w] = 1;
      elems.push_back(w);
    }
  // rank vector is indexed like elems
  for (int w : elems) rank.push_back(W.abs_length(w));
  std::vector<std::pair<int, int>> cv;
  for (int u : elems)
    for (int r : W.reflections()) {
      int v = W.mul(u, r);
      if (in[v] && W.abs_length(v) == W.abs_length(u) + 1) cv.emplace_back(u, v);
    }
  std::sort(cv.begin(), cv.end());
  cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
  return coxeter_poset(W, elems, rank, cv, true);
}

GradedPoset figure8_dual_example() {
  // nodes 1..7: 1 < 2,3,4; 5 covers 2,3; 6 covers 3,4; 7 covers 5,6
  std::vector<Cover> cv{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}};
  return GradedPoset::build(7, std::move(cv), std::vector<int>{0, 1, 1, 1, 2, 2, 3},
                            {"1", "2", "3", "4", "5", "6", "7"});
}

}  // namespace upho
