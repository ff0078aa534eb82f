// set partitions, Type-B partitions, Dowling lattices, bond lattices
#include <map>
#include <numeric>

#include "upho/zoo.hpp"
#include "zoo_build.hpp"

namespace upho {

using detail::elems_str;

namespace detail {

// restricted growth form: block ids in order of first appearance
std::string rgs(const std::vector<int>& b) {
  std::map<int, int> ren;
  std::string s(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto it = ren.find(b[i]);
    if (it == ren.end()) it = ren.emplace(b[i], static_cast<int>(ren.size())).first;
    s[i] = static_cast<char>(it->second);
  }
  return s;
}

std::vector<int> unkey(const std::string& k) {
  std::vector<int> b(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) b[i] = static_cast<unsigned char>(k[i]);
  return b;
}

int block_count(const std::vector<int>& b) {
  int m = -1;
  for (int x : b) m = std::max(m, x);
  return m + 1;
}

std::string tagged_key(Tagged t, int m) {
  // renumber blocks by first appearance; shift each block so its first element has tag 0
  std::map<int, int> ren;
  std::map<int, int> shift;
  const std::size_t n = t.block.size();
  std::string s(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int b = t.block[i];
    if (b == 0) {
      s[2 * i] = 0;
      s[2 * i + 1] = 0;
      continue;
    }
    auto it = ren.find(b);
    if (it == ren.end()) {
      it = ren.emplace(b, static_cast<int>(ren.size()) + 1).first;
      shift[b] = t.tag[i];
    }
    s[2 * i] = static_cast<char>(it->second);
    s[2 * i + 1] = static_cast<char>(((t.tag[i] - shift[b]) % m + m) % m);
  }
  return s;
}

Tagged tagged_unkey(const std::string& k) {
  Tagged t;
  for (std::size_t i = 0; i + 1 < k.size(); i += 2) {
    t.block.push_back(static_cast<unsigned char>(k[i]));
    t.tag.push_back(static_cast<unsigned char>(k[i + 1]));
  }
  return t;
}

int tagged_blocks(const Tagged& t) {
  int m = 0;
  for (int b : t.block) m = std::max(m, b);
  return m;
}

// "0:12|3-4": special block first, then blocks; tag printed by fmt
std::string tagged_label(const Tagged& t, const std::string& special_prefix,
                         const std::function<std::string(int elem, int tag)>& fmt) {
  const int n = static_cast<int>(t.block.size());
  std::string s;
  std::vector<int> z;
  for (int i = 0; i < n; ++i)
    if (t.block[i] == 0) z.push_back(i + 1);
  if (!z.empty()) s = special_prefix + elems_str(z, n);
  for (int b = 1; b <= tagged_blocks(t); ++b) {
    if (!s.empty()) s += "|";
    bool first = true;
    for (int i = 0; i < n; ++i)
      if (t.block[i] == b) {
        if (!first && n > 9) s += ",";
        s += fmt(i + 1, t.tag[i]);
        first = false;
      }
  }
  return s.empty() ? "()" : s;
}

}  // namespace detail

using namespace detail;

std::string partition_label(const std::vector<int>& block_of) {
  const int n = static_cast<int>(block_of.size());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(block_count(block_of)));
  for (int i = 0; i < n; ++i) blocks[block_of[i]].push_back(i + 1);
  std::sort(blocks.begin(), blocks.end());
  std::string s;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += "|";
    s += elems_str(blocks[b], n);
  }
  return s;
}

GradedPoset partition_lattice(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "partition lattice needs n >= 1");
  if (n > 9) throw Error(ErrorCode::SizeGuard, "partition lattice limited to n <= 9");
  std::vector<int> disc(n);
  std::iota(disc.begin(), disc.end(), 0);
  auto L = detail::build_levels(
      {rgs(disc)},
      [](const std::string& k, const detail::Emit& emit) {
        auto b = unkey(k);
        int c = block_count(b);
        for (int x = 0; x < c; ++x)
          for (int y = x + 1; y < c; ++y) {
            auto m = b;
            for (auto& v : m)
              if (v == y) v = x;
            emit(rgs(m));
          }
      },
      -1);
  return detail::assemble(L, [](const std::string& k) { return partition_label(unkey(k)); });
}

GradedPoset bond_lattice(const Graph& g) {
  if (g.n < 1) throw Error(ErrorCode::BadInput, "graph needs a vertex");
  if (g.n > 9) throw Error(ErrorCode::SizeGuard, "bond lattice limited to n <= 9 (use bond_char_poly)");
  if (!g.connected()) throw Error(ErrorCode::BadInput, "bond lattice needs a connected graph");
  std::vector<int> disc(g.n);
  std::iota(disc.begin(), disc.end(), 0);
  auto L = detail::build_levels(
      {rgs(disc)},
      [&](const std::string& k, const detail::Emit& emit) {
        auto b = unkey(k);
        std::vector<std::pair<int, int>> adj;
        for (auto [u, v] : g.edges) {
          int x = b[u - 1], y = b[v - 1];
          if (x != y) adj.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        for (auto [x, y] : adj) {
          auto m = b;
          for (auto& v : m)
            if (v == y) v = x;
          emit(rgs(m));
        }
      },
      -1);
  return detail::assemble(L, [](const std::string& k) { return partition_label(unkey(k)); });
}

GradedPoset signed_partition_lattice(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "signed partition lattice needs n >= 1");
  if (n > 6) throw Error(ErrorCode::SizeGuard, "signed partition lattice limited to n <= 6");
  Tagged start;
  for (int i = 0; i < n; ++i) {
    start.block.push_back(i + 1);
    start.tag.push_back(0);
  }
  auto L = detail::build_levels(
      {tagged_key(start, 2)},
      [](const std::string& k, const detail::Emit& emit) {
        Tagged t = tagged_unkey(k);
        int c = tagged_blocks(t);
        for (int x = 1; x <= c; ++x) {
          // absorb the pair {B, -B} into the zero block
          Tagged z = t;
          for (std::size_t i = 0; i < z.block.size(); ++i)
            if (z.block[i] == x) {
              z.block[i] = 0;
              z.tag[i] = 0;
            }
          emit(tagged_key(z, 2));
          for (int y = x + 1; y <= c; ++y)
            for (int flip = 0; flip < 2; ++flip) {
              Tagged u = t;
              for (std::size_t i = 0; i < u.block.size(); ++i)
                if (u.block[i] == y) {
                  u.block[i] = x;
                  u.tag[i] ^= flip;
                }
              emit(tagged_key(u, 2));
            }
        }
      },
      -1);
  return detail::assemble(L, [](const std::string& k) {
    return tagged_label(tagged_unkey(k), "0:", [](int e, int sgn) {
      return (sgn ? "-" : "") + std::to_string(e);
    });
  });
}

GradedPoset dowling_lattice(int n, int m) {
  if (n < 0 || m < 1) throw Error(ErrorCode::BadInput, "Dowling lattice needs n >= 0, m >= 1");
  if (n == 0) return GradedPoset::build(1, {}, std::vector<int>{0}, {"()"});
  Tagged start;
  for (int i = 0; i < n; ++i) {
    start.block.push_back(i + 1);
    start.tag.push_back(0);
  }
  auto L = detail::build_levels(
      {tagged_key(start, m)},
      [m](const std::string& k, const detail::Emit& emit) {
        Tagged t = tagged_unkey(k);
        int c = tagged_blocks(t);
        for (int x = 1; x <= c; ++x) {
          Tagged z = t;
          for (std::size_t i = 0; i < z.block.size(); ++i)
            if (z.block[i] == x) {
              z.block[i] = 0;
              z.tag[i] = 0;
            }
          emit(tagged_key(z, m));
          for (int y = x + 1; y <= c; ++y)
            for (int g = 0; g < m; ++g) {
              Tagged u = t;
              for (std::size_t i = 0; i < u.block.size(); ++i)
                if (u.block[i] == y) {
                  u.block[i] = x;
                  u.tag[i] = (u.tag[i] + g) % m;
                }
              emit(tagged_key(u, m));
            }
        }
      },
      -1);
  return detail::assemble(L, [](const std::string& k) {
    return tagged_label(tagged_unkey(k), "0:", [](int e, int g) {
      return std::to_string(e) + (g ? "^" + std::to_string(g) : "");
    });
  });
}

// ---- graphs -------------------------------------------------------------

Graph Graph::cycle(int n) {
  Graph g{n, {}};
  for (int i = 1; i <= n; ++i) g.edges.emplace_back(i, i % n + 1);
  if (n == 2) g.edges.pop_back();
  return g;
}

Graph Graph::complete(int n) {
  Graph g{n, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph Graph::path(int n) {
  Graph g{n, {}};
  for (int i = 1; i < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph Graph::sixteen_vertex_example() {
  // a ladder of triangles and squares closed by triangles at both ends
  return Graph{16,
               {{1, 2},   {1, 3},   {2, 3},   {2, 4},   {4, 5},   {5, 3},   {5, 7},   {7, 6},
                {6, 4},   {6, 8},   {8, 9},   {9, 7},   {9, 11},  {11, 10}, {10, 8},  {10, 12},
                {12, 13}, {13, 11}, {13, 15}, {15, 14}, {14, 12}, {14, 16}, {16, 15}}};
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [u, v] : edges) p[find(u)] = find(v);
  for (int i = 2; i <= n; ++i)
    if (find(i) != find(1)) return false;
  return true;
}

namespace {

// deletion-contraction on simple graphs, memoized on the edge list
struct Chromatic {
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, IntPolynomial> memo;

  static IntPolynomial t_pow(int k) { return IntPolynomial::monomial(1, static_cast<std::size_t>(k)); }

  IntPolynomial run(int n, std::vector<std::pair<int, int>> e) {
    // normalise: vertices 0..n-1, edges (a<b), sorted, deduplicated
    for (auto& [a, b] : e)
      if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) return t_pow(n);
    // drop isolated vertices and relabel by first use
    std::vector<int> deg(n, 0), ren(n, -1);
    for (auto [a, b] : e) {
      ++deg[a];
      ++deg[b];
    }
    int used = 0;
    for (auto& [a, b] : e) {
      if (ren[a] < 0) ren[a] = used++;
      if (ren[b] < 0) ren[b] = used++;
      a = ren[a];
      b = ren[b];
      if (a > b) std::swap(a, b);
    }
    std::sort(e.begin(), e.end());
    IntPolynomial factor = t_pow(n - used);
    n = used;
    // a degree-one vertex contributes (t-1)
    deg.assign(n, 0);
    for (auto [a, b] : e) {
      ++deg[a];
      ++deg[b];
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto [a, b] = e[i];
      int leaf = deg[a] == 1 ? a : (deg[b] == 1 ? b : -1);
      if (leaf < 0) continue;
      auto rest = e;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      // leaf becomes isolated; remove it by counting one fewer vertex factor
      IntPolynomial sub = run(n, rest);  // leaf isolated contributes t
      // sub = t * chi(G - leaf); chi(G) = (t-1) chi(G - leaf)
      std::vector<BigInt> c(sub.coeffs().begin() + 1, sub.coeffs().end());
      return factor * IntPolynomial(std::move(c)) * IntPolynomial{-1, 1};
    }
    auto key = std::make_pair(n, e);
    auto it = memo.find(key);
    if (it != memo.end()) return factor * it->second;
    auto [a, b] = e.back();
    auto del = e;
    del.pop_back();
    std::vector<std::pair<int, int>> con;
    for (auto [x, y] : del) {
      int xx = x == b ? a : x, yy = y == b ? a : y;
      if (xx != yy) con.emplace_back(xx, yy);
    }
    // b becomes isolated after contraction; it is dropped by the relabel and
    // would contribute a spurious factor t, so count n-1 vertices there
    IntPolynomial r = run(n, del) - run_contracted(n, con, b);
    memo.emplace(std::move(key), r);
    return factor * r;
  }

  IntPolynomial run_contracted(int n, std::vector<std::pair<int, int>> e, int gone) {
    // renumber to drop vertex `gone`
    for (auto& [x, y] : e) {
      if (x > gone) --x;
      if (y > gone) --y;
    }
    return run(n - 1, std::move(e));
  }
};

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges) {
    if (u == v) return {};
    e.emplace_back(u - 1, v - 1);
  }
  Chromatic c;
  return c.run(g.n, e);
}

IntPolynomial bond_char_poly(const Graph& g) {
  if (!g.connected()) throw Error(ErrorCode::BadInput, "bond lattice needs a connected graph");
  IntPolynomial chi = chromatic_polynomial(g);
  // coefficient of x^k is [t^{n-k}] chi(G;t)
  std::vector<BigInt> c(static_cast<std::size_t>(g.n));
  for (int k = 0; k < g.n; ++k) c[k] = chi.coeff(static_cast<std::size_t>(g.n - k));
  return IntPolynomial(std::move(c));
}

}  // namespace upho
