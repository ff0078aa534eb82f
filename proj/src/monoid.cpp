#include "upho/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "upho/error.hpp"
#include "upho/lattice.hpp"

namespace upho {

namespace {

std::string trim_ws(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool single_chars(const std::vector<std::string>& g) {
  return std::all_of(g.begin(), g.end(), [](const std::string& s) { return s.size() == 1; });
}

std::string letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

std::vector<std::string> letters(int n) {
  std::vector<std::string> g;
  for (int i = 0; i < n; ++i) g.push_back(letter(i));
  return g;
}

}  // namespace

MonoidPresentation MonoidPresentation::make(std::vector<std::string> gens,
                                            std::vector<std::pair<Word, Word>> rels) {
  if (gens.empty()) throw Error(ErrorCode::BadInput, "presentation needs a generator");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (g.empty() || g == "1" || g.find_first_of(" \t=#") != std::string::npos)
      throw Error(ErrorCode::BadInput, "bad generator symbol \"" + g + "\"");
    if (!seen.insert(g).second) throw Error(ErrorCode::BadInput, "repeated generator " + g);
  }
  MonoidPresentation P;
  P.generators = std::move(gens);
  std::set<std::pair<Word, Word>> uniq;
  for (auto& [u, v] : rels) {
    for (int x : u)
      if (x < 0 || x >= static_cast<int>(P.generators.size())) throw Error(ErrorCode::BadInput, "letter out of range");
    for (int x : v)
      if (x < 0 || x >= static_cast<int>(P.generators.size())) throw Error(ErrorCode::BadInput, "letter out of range");
    if (u.size() != v.size())
      throw Error(ErrorCode::InhomogeneousRelation, P.word_str(u) + " = " + P.word_str(v));
    if (u == v) continue;
    auto r = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    if (uniq.insert(r).second) P.relations.push_back(r);
  }
  return P;
}

Word MonoidPresentation::parse_word(const std::string& s) const {
  Word w;
  std::string t = trim_ws(s);
  if (t == "1" || t.empty()) return w;
  auto lookup = [&](const std::string& sym) {
    auto it = std::find(generators.begin(), generators.end(), sym);
    if (it == generators.end()) throw Error(ErrorCode::BadInput, "unknown generator \"" + sym + "\"");
    return static_cast<int>(it - generators.begin());
  };
  if (single_chars(generators)) {
    for (char c : t)
      if (c != ' ' && c != '\t') w.push_back(lookup(std::string(1, c)));
  } else {
    for (const auto& tok : split_ws(t)) w.push_back(lookup(tok));
  }
  return w;
}

std::string MonoidPresentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  bool sc = single_chars(generators);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!sc && i) s += " ";
    s += generators.at(static_cast<std::size_t>(w[i]));
  }
  return s;
}

MonoidPresentation MonoidPresentation::parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> gens;
  std::vector<std::string> rel_lines;
  bool have_gens = false;
  while (std::getline(is, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    line = trim_ws(line);
    if (line.empty()) continue;
    auto c = line.find(':');
    if (c == std::string::npos) throw Error(ErrorCode::BadInput, "expected \"gens:\" or \"rel:\" in \"" + line + "\"");
    std::string key = trim_ws(line.substr(0, c)), val = line.substr(c + 1);
    if (key == "gens") {
      if (have_gens) throw Error(ErrorCode::BadInput, "duplicate gens line");
      gens = split_ws(val);
      have_gens = true;
    } else if (key == "rel" || key == "rels") {
      rel_lines.push_back(val);
    } else {
      throw Error(ErrorCode::BadInput, "unknown directive \"" + key + "\"");
    }
  }
  if (!have_gens) throw Error(ErrorCode::BadInput, "missing gens line");
  MonoidPresentation tmp;
  tmp.generators = gens;
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& rl : rel_lines) {
    std::vector<Word> parts;
    std::size_t start = 0;
    while (true) {
      auto e = rl.find('=', start);
      parts.push_back(tmp.parse_word(rl.substr(start, e == std::string::npos ? std::string::npos : e - start)));
      if (e == std::string::npos) break;
      start = e + 1;
    }
    if (parts.size() < 2) throw Error(ErrorCode::BadInput, "relation needs '='");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) rels.emplace_back(parts[i], parts[i + 1]);
  }
  return make(std::move(gens), std::move(rels));
}

std::string MonoidPresentation::to_text() const {
  std::string s = "gens:";
  for (const auto& g : generators) s += " " + g;
  s += "\n";
  for (const auto& [u, v] : relations) s += "rel: " + word_str(u) + " = " + word_str(v) + "\n";
  return s;
}

std::string MonoidPresentation::name() const {
  auto ps = [&] {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s;
  };
  switch (kind) {
    case PresentationKind::RankTwo: return "rank-two(" + ps() + ")";
    case PresentationKind::Chains: return "chains(" + ps() + ")";
    case PresentationKind::ClassicalBraid: return "classical-braid(" + coxeter->name() + ")";
    case PresentationKind::DualBraid: return "dual-braid(" + coxeter->name() + ")";
    case PresentationKind::Figure8: return "figure8";
    case PresentationKind::Custom: break;
  }
  return "custom";
}

std::uint64_t word_budget_from_env() {
  const char* e = std::getenv("UPHO_BUDGET");
  if (!e || !*e) return kDefaultWordBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(e, &end, 10);
  if (!end || *end || v == 0) throw Error(ErrorCode::BadInput, "UPHO_BUDGET must be a positive integer");
  return v;
}

std::uint64_t MonoidPoset::code(const Word& w) const {
  std::uint64_t c = 0, g = presentation.generators.size();
  for (int x : w) c = c * g + static_cast<std::uint64_t>(x);
  return c;
}

Element MonoidPoset::element_of(const Word& w) const {
  if (static_cast<int>(w.size()) > N) throw Error(ErrorCode::BadInput, "word longer than the truncation");
  return class_of[w.size()][code(w)];
}

MonoidPoset enumerate_elements(const MonoidPresentation& P, int N, std::uint64_t budget) {
  if (N < 0) throw Error(ErrorCode::BadInput, "N must be >= 0");
  for (const auto& [u, v] : P.relations)
    if (u.size() != v.size()) throw Error(ErrorCode::InhomogeneousRelation, P.word_str(u) + " = " + P.word_str(v));
  const std::uint64_t G = P.generators.size();
  std::vector<std::uint64_t> pw{1};
  std::uint64_t total = 1;
  for (int l = 1; l <= N; ++l) {
    if (pw.back() > budget / G + 1) throw Error(ErrorCode::BudgetExceeded, "word count exceeds budget");
    pw.push_back(pw.back() * G);
    total += pw.back();
    if (total > budget)
      throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " words up to length " + std::to_string(l) +
                                                 " exceed the budget of " + std::to_string(budget));
  }
  if (total > 0xFFFFFFFFull) throw Error(ErrorCode::BudgetExceeded, "word codes exceed 32 bits");
  auto codeof = [&](const Word& w) {
    std::uint64_t c = 0;
    for (int x : w) c = c * G + static_cast<std::uint64_t>(x);
    return c;
  };

  MonoidPoset M;
  M.N = N;
  M.presentation = P;
  M.class_of.resize(static_cast<std::size_t>(N) + 1);
  std::vector<std::vector<std::uint64_t>> rep_codes(static_cast<std::size_t>(N) + 1);
  std::vector<std::uint32_t> parent;
  Element next = 0;
  for (int l = 0; l <= N; ++l) {
    const std::uint64_t W = pw[l];
    parent.resize(W);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& [u, v] : P.relations) {
      const int m = static_cast<int>(u.size());
      if (m == 0 || m > l) continue;
      const std::uint64_t cu = codeof(u), cv = codeof(v);
      for (int i = 0; i + m <= l; ++i) {
        const std::uint64_t tail = pw[l - i - m], block = pw[m];
        for (std::uint64_t pre = 0; pre < pw[i]; ++pre) {
          const std::uint64_t base = pre * block;
          for (std::uint64_t suf = 0; suf < tail; ++suf) {
            std::uint32_t a = find(static_cast<std::uint32_t>((base + cu) * tail + suf));
            std::uint32_t b = find(static_cast<std::uint32_t>((base + cv) * tail + suf));
            if (a == b) continue;
            // smaller code stays root, so roots are lex-least words
            if (a < b) parent[b] = a;
            else parent[a] = b;
          }
        }
      }
    }
    auto& cls = M.class_of[l];
    cls.assign(W, 0);
    for (std::uint64_t c = 0; c < W; ++c) {
      std::uint32_t r = find(static_cast<std::uint32_t>(c));
      if (r == c) {
        cls[c] = next++;
        rep_codes[l].push_back(c);
      } else {
        cls[c] = cls[r];  // r < c already numbered
      }
    }
    if (next > kMaxElements * 4)
      throw Error(ErrorCode::SizeGuard, "truncation has more than " + std::to_string(kMaxElements * 4) + " elements");
  }

  std::vector<int> ranks;
  std::vector<std::string> labels;
  ranks.reserve(next);
  for (int l = 0; l <= N; ++l) {
    for (std::uint64_t c : rep_codes[l]) {
      Word w(static_cast<std::size_t>(l));
      std::uint64_t x = c;
      for (int i = l - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(x % G);
        x /= G;
      }
      labels.push_back(P.word_str(w));
      M.representative.push_back(std::move(w));
      ranks.push_back(l);
    }
  }
  std::vector<Cover> covers;
  for (int l = 0; l < N; ++l) {
    for (std::uint64_t c : rep_codes[l]) {
      Element from = M.class_of[l][c];
      std::vector<Element> ups;
      for (std::uint64_t g = 0; g < G; ++g) ups.push_back(M.class_of[l + 1][c * G + g]);
      std::sort(ups.begin(), ups.end());
      ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
      for (Element t : ups) covers.push_back({from, t});
    }
  }
  M.poset = build_poset(next, std::move(covers), std::move(ranks), std::move(labels));
  return M;
}

CancellationVerdict left_cancellative_check(const MonoidPoset& M) {
  CancellationVerdict v;
  const std::uint64_t G = M.presentation.generators.size();
  std::uint64_t pwl = 1;
  for (int l = 0; l < M.N; ++l) {
    const auto& lvl = M.poset.level(l);
    for (std::uint64_t g = 0; g < G; ++g) {
      std::vector<std::optional<Element>> pre(M.poset.size());
      for (Element b : lvl) {
        Element gb = M.class_of[l + 1][g * pwl + M.code(M.representative[b])];
        if (pre[gb] && *pre[gb] != b) {
          v.ok = false;
          v.verified_to_rank = l;
          v.x = M.presentation.generators[g];
          v.b = M.poset.label(*pre[gb]);
          v.c = M.poset.label(b);
          return v;
        }
        pre[gb] = b;
      }
    }
    pwl *= G;
  }
  v.verified_to_rank = M.N;
  return v;
}

JoinVerdict truncated_join_check(const GradedPoset& P) {
  if (P.size() > 20000) throw Error(ErrorCode::SizeGuard, "join check limited to 20000 elements");
  JoinVerdict v;
  v.conclusive_rank = P.height();
  const auto& O = P.order();
  const auto& K = kernels::active();
  const std::size_t W = O.words();
  bool any_bounded = false;
  Bitset iso(P.size());
  for (Element x = 0; x < P.size(); ++x) {
    for (Element y = x + 1; y < P.size(); ++y) {
      if (O.leq(x, y) || O.leq(y, x)) continue;
      const auto* ux = O.up_row(x);
      const auto* uy = O.up_row(y);
      std::ptrdiff_t f = K.and_first(ux, uy, W);
      if (f < 0) {
        ++v.indeterminate_pairs;
        v.conclusive_rank = std::min(v.conclusive_rank, std::max(P.rank(x), P.rank(y)) - 1);
        continue;
      }
      any_bounded = true;
      Element z = O.elem(static_cast<std::size_t>(f));
      if (K.and_subset(ux, uy, O.up_row(z), W)) continue;
      if (v.status != JoinVerdict::Status::NotLattice) {
        v.status = JoinVerdict::Status::NotLattice;
        v.witness = {x, y};
        v.minimal_bounds = minimal_upper_bounds(P, x, y);
      }
    }
  }
  if (v.status != JoinVerdict::Status::NotLattice && !any_bounded && v.indeterminate_pairs > 0)
    v.status = JoinVerdict::Status::JoinFree;
  return v;
}

JoinVerdict right_lcm_check(const MonoidPoset& M) { return truncated_join_check(M.poset); }

const char* status_name(JoinVerdict::Status s) {
  switch (s) {
    case JoinVerdict::Status::LatticeWithinTruncation: return "lattice-within-truncation";
    case JoinVerdict::Status::NotLattice: return "not-lattice";
    case JoinVerdict::Status::JoinFree: return "join-free";
  }
  return "?";
}

MonoidPresentation classical_braid_presentation(CoxeterType t) {
  CoxeterGroup W(t);
  const int r = t.rank();
  std::vector<std::pair<Word, Word>> rels;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      int m = W.coxeter_m(i, j);
      Word u, v;
      for (int k = 0; k < m; ++k) {
        u.push_back(k % 2 ? j : i);
        v.push_back(k % 2 ? i : j);
      }
      rels.emplace_back(u, v);
    }
  auto P = MonoidPresentation::make(letters(r), rels);
  P.kind = PresentationKind::ClassicalBraid;
  P.coxeter = t;
  return P;
}

MonoidPresentation dual_braid_presentation(CoxeterType t) {
  CoxeterGroup W(t);
  const int c = W.coxeter_element();
  std::vector<int> T;
  for (int s : W.reflections())
    if (W.leq_absolute(s, c)) T.push_back(s);
  if (T.size() > 26) throw Error(ErrorCode::SizeGuard, "too many reflections for letter names");
  auto idx = [&](int w) { return static_cast<int>(std::find(T.begin(), T.end(), w) - T.begin()); };
  std::vector<std::pair<Word, Word>> rels;
  for (int s : T)
    for (int u : T) {
      if (s == u) continue;
      int us = W.mul(u, s);
      if (!W.leq_absolute(us, c)) continue;
      int conj = W.mul(W.mul(s, u), s);  // u^s, so u s = s u^s
      rels.push_back({Word{idx(u), idx(s)}, Word{idx(s), idx(conj)}});
    }
  auto P = MonoidPresentation::make(letters(static_cast<int>(T.size())), rels);
  P.kind = PresentationKind::DualBraid;
  P.coxeter = t;
  return P;
}

MonoidPresentation rank_two_presentation(int r) {
  if (r < 1 || r > 26) throw Error(ErrorCode::BadInput, "rank-two needs 1 <= r <= 26");
  std::vector<std::pair<Word, Word>> rels;
  for (int i = 1; i < r; ++i) rels.push_back({Word{i, 0}, Word{0, 0}});
  auto P = MonoidPresentation::make(letters(r), rels);
  P.kind = PresentationKind::RankTwo;
  P.params = {r};
  return P;
}

MonoidPresentation chains_presentation(int r, int n) {
  if (r < 1 || r > 26 || n < 1) throw Error(ErrorCode::BadInput, "chains needs 1 <= r <= 26, n >= 1");
  std::vector<std::pair<Word, Word>> rels;
  for (int i = 1; i < r; ++i) {
    Word u{i}, v{0};
    for (int k = 1; k < n; ++k) {
      u.push_back(0);
      v.push_back(0);
    }
    rels.emplace_back(u, v);
  }
  auto P = MonoidPresentation::make(letters(r), rels);
  P.kind = PresentationKind::Chains;
  P.params = {r, n};
  return P;
}

MonoidPresentation figure8_presentation() {
  auto P = MonoidPresentation::make(letters(3), {{Word{0, 0}, Word{1, 1}}, {Word{1, 0}, Word{2, 0}}});
  P.kind = PresentationKind::Figure8;
  return P;
}

MonoidPresentation free_presentation(int gens) {
  if (gens < 1 || gens > 26) throw Error(ErrorCode::BadInput, "free monoid needs 1..26 generators");
  return MonoidPresentation::make(letters(gens), {});
}

}  // namespace upho
