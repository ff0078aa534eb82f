#include "upho/upho.hpp"

#include <algorithm>

#include "upho/error.hpp"
#include "upho/mobius.hpp"
#include "zoo_build.hpp"

namespace upho {

namespace {

void check_N(int N) {
  if (N < 0) throw Error(ErrorCode::BadInput, "N must be >= 0");
}

ZooRecipe recipe(ZooFamily f, std::vector<int> params) {
  ZooRecipe r;
  r.family = f;
  r.params = std::move(params);
  return r;
}

void attach_core(UphoTruncation& T, ZooRecipe r) {
  T.expected_chi = expected_chi(r);
  if (!T.expected_chi) T.expected_chi = reciprocal_char_poly(build_zoo(r));
  T.expected_core = std::move(r);
}

std::string set_label(const std::string& key) {
  std::string s = "{";
  for (std::size_t i = 0; i < key.size(); ++i)
    s += (i ? "," : "") + std::to_string(static_cast<unsigned char>(key[i]));
  return s + "}";
}

// tagged truncations: n elements, blocks 1..k-1 with tags mod m, block 0 zero
detail::Levels tagged_infty_levels(int k, int m, int N) {
  detail::Tagged start;
  for (int i = 0; i < k - 1; ++i) {
    start.block.push_back(i + 1);
    start.tag.push_back(0);
  }
  return detail::build_levels(
      {detail::tagged_key(start, m)},
      [k, m](const std::string& key, const detail::Emit& emit) {
        detail::Tagged t = detail::tagged_unkey(key);
        const int c = k - 1;
        // the new element joins a block with some tag, or the zero part
        for (int b = 0; b <= c; ++b)
          for (int g = 0; g < (b ? m : 1); ++g) {
            auto u = t;
            u.block.push_back(b);
            u.tag.push_back(g);
            emit(detail::tagged_key(u, m));
          }
        // one-step coarsening, then the new element as the last block
        auto push_new = [&](detail::Tagged u, int freed) {
          // freed block id is reused by relabelling to c
          for (auto& b : u.block)
            if (b > freed) --b;
          u.block.push_back(c);
          u.tag.push_back(0);
          emit(detail::tagged_key(u, m));
        };
        for (int x = 1; x <= c; ++x) {
          auto z = t;
          for (std::size_t i = 0; i < z.block.size(); ++i)
            if (z.block[i] == x) {
              z.block[i] = 0;
              z.tag[i] = 0;
            }
          push_new(z, x);
          for (int y = x + 1; y <= c; ++y)
            for (int g = 0; g < m; ++g) {
              auto u = t;
              for (std::size_t i = 0; i < u.block.size(); ++i)
                if (u.block[i] == y) {
                  u.block[i] = x;
                  u.tag[i] = (u.tag[i] + g) % m;
                }
              push_new(u, y);
            }
        }
      },
      N);
}

}  // namespace

UphoTruncation grid(int d, int N) {
  check_N(N);
  if (d < 1 || d > 64) throw Error(ErrorCode::BadInput, "grid needs 1 <= d <= 64");
  auto L = detail::build_levels(
      {std::string(static_cast<std::size_t>(d), '\0')},
      [](const std::string& key, const detail::Emit& emit) {
        for (std::size_t i = 0; i < key.size(); ++i) {
          auto u = key;
          if (static_cast<unsigned char>(u[i]) == 255) throw Error(ErrorCode::SizeGuard, "coordinate overflow");
          ++u[i];
          emit(u);
        }
      },
      N);
  UphoTruncation T;
  T.poset = detail::assemble(L, [](const std::string& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.size(); ++i)
      s += (i ? "," : "") + std::to_string(static_cast<unsigned char>(key[i]));
    return s + ")";
  });
  T.recipe = "grid(d=" + std::to_string(d) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::boolean, {d}));
  return T;
}

UphoTruncation boolean_infty(int k, int N) {
  check_N(N);
  if (k < 1) throw Error(ErrorCode::BadInput, "boolean-infty needs k >= 1");
  if (N + k > 250) throw Error(ErrorCode::SizeGuard, "boolean-infty limited to N + k <= 250");
  // sorted element bytes; max(S) < #S + k
  auto L = detail::build_levels(
      {std::string()},
      [k](const std::string& key, const detail::Emit& emit) {
        const int s = static_cast<int>(key.size());
        for (int j = 1; j <= s + k; ++j) {
          if (key.find(static_cast<char>(j)) != std::string::npos) continue;
          std::string u = key + static_cast<char>(j);
          std::sort(u.begin(), u.end(), [](char a, char b) {
            return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
          });
          emit(u);
        }
      },
      N);
  UphoTruncation T;
  T.poset = detail::assemble(L, set_label);
  T.recipe = "boolean-infty(k=" + std::to_string(k) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::boolean, {k}));
  return T;
}

UphoTruncation subspace_infty(int k, unsigned q, int N) {
  check_N(N);
  if (k < 1) throw Error(ErrorCode::BadInput, "subspace-infty needs k >= 1");
  FiniteField F(q);
  const std::size_t ambient = static_cast<std::size_t>(std::max(1, N + k - 1));
  auto L = detail::subspace_levels(ambient, q, N, k);
  UphoTruncation T;
  T.poset = detail::assemble(L, [ambient](const std::string& key) {
    return subspace_label(subspace_unkey(key, ambient), ambient);
  });
  T.recipe = "subspace-infty(k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::subspace, {k, static_cast<int>(q)}));
  return T;
}

UphoTruncation partition_infty(int k, int N) {
  check_N(N);
  if (k < 1 || k > 60) throw Error(ErrorCode::BadInput, "partition-infty needs 1 <= k <= 60");
  std::vector<int> start(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) start[i] = i;
  auto L = detail::build_levels(
      {detail::rgs(start)},
      [k](const std::string& key, const detail::Emit& emit) {
        auto b = detail::unkey(key);
        for (int x = 0; x < k; ++x) {
          auto u = b;
          u.push_back(x);
          emit(detail::rgs(u));
        }
        for (int x = 0; x < k; ++x)
          for (int y = x + 1; y < k; ++y) {
            auto u = b;
            for (auto& v : u)
              if (v == y) v = x;
            u.push_back(y);  // y is free again
            emit(detail::rgs(u));
          }
      },
      N);
  UphoTruncation T;
  T.poset = detail::assemble(L, [](const std::string& key) { return partition_label(detail::unkey(key)); });
  T.recipe = "partition-infty(k=" + std::to_string(k) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::partition, {k + 1}));
  return T;
}

UphoTruncation signed_partition_infty(int k, int N) {
  check_N(N);
  if (k < 1 || k > 60) throw Error(ErrorCode::BadInput, "signed-partition-infty needs 1 <= k <= 60");
  auto L = tagged_infty_levels(k, 2, N);
  UphoTruncation T;
  T.poset = detail::assemble(L, [](const std::string& key) {
    return detail::tagged_label(detail::tagged_unkey(key), "0:",
                                [](int e, int s) { return (s ? "-" : "") + std::to_string(e); });
  });
  T.recipe = "signed-partition-infty(k=" + std::to_string(k) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::signed_partition, {k}));
  return T;
}

UphoTruncation dowling_infty(int k, int m, int N) {
  check_N(N);
  if (k < 1 || k > 60) throw Error(ErrorCode::BadInput, "dowling-infty needs 1 <= k <= 60");
  if (m < 1 || m > 60) throw Error(ErrorCode::BadInput, "dowling-infty needs 1 <= m <= 60");
  auto L = tagged_infty_levels(k, m, N);
  UphoTruncation T;
  T.poset = detail::assemble(L, [](const std::string& key) {
    return detail::tagged_label(detail::tagged_unkey(key), "0:", [](int e, int g) {
      return std::to_string(e) + (g ? "^" + std::to_string(g) : "");
    });
  });
  T.recipe = "dowling-infty(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
  T.N = N;
  attach_core(T, recipe(ZooFamily::dowling_cyclic, {k, m}));
  return T;
}

UphoTruncation from_monoid(const MonoidPresentation& P, int N, std::uint64_t budget) {
  auto M = enumerate_elements(P, N, budget);
  UphoTruncation T;
  T.poset = std::move(M.poset);
  T.recipe = "monoid:" + P.name();
  T.N = N;
  auto with_cox = [&](ZooFamily f) {
    ZooRecipe r;
    r.family = f;
    r.coxeter = *P.coxeter;
    return r;
  };
  switch (P.kind) {
    case PresentationKind::RankTwo: attach_core(T, recipe(ZooFamily::rank_two_M, {P.params[0]})); break;
    case PresentationKind::Chains: attach_core(T, recipe(ZooFamily::chain_sum, {P.params[0], P.params[1]})); break;
    case PresentationKind::ClassicalBraid: attach_core(T, with_cox(ZooFamily::weak_order)); break;
    case PresentationKind::DualBraid: attach_core(T, with_cox(ZooFamily::noncrossing)); break;
    case PresentationKind::Figure8: attach_core(T, recipe(ZooFamily::figure8_dual_example, {})); break;
    case PresentationKind::Custom: break;
  }
  return T;
}

const std::vector<std::string>& truncation_names() {
  static const std::vector<std::string> names = {"grid",           "boolean-infty",          "subspace-infty",
                                                 "partition-infty", "signed-partition-infty", "dowling-infty"};
  return names;
}

UphoTruncation build_truncation(const std::string& name, const TruncationParams& p) {
  if (name == "grid") return grid(p.k, p.N);
  if (name == "boolean-infty") return boolean_infty(p.k, p.N);
  if (name == "subspace-infty") {
    if (p.q < 2) throw Error(ErrorCode::UnsupportedFieldOrder, "q must be 2..5");
    return subspace_infty(p.k, static_cast<unsigned>(p.q), p.N);
  }
  if (name == "partition-infty") return partition_infty(p.k, p.N);
  if (name == "signed-partition-infty") return signed_partition_infty(p.k, p.N);
  if (name == "dowling-infty") return dowling_infty(p.k, p.m, p.N);
  throw Error(ErrorCode::BadInput, "unknown truncation recipe \"" + name + "\"");
}

}  // namespace upho
