#include "upho/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <regex>
#include <set>

#include "upho/error.hpp"

namespace upho {

std::string CoxeterType::name() const {
  return family == Family::A ? "A" + std::to_string(param) : "I2(" + std::to_string(param) + ")";
}

CoxeterType CoxeterType::parse(const std::string& s) {
  std::smatch m;
  static const std::regex a(R"(^[Aa](\d+)$)"), sn(R"(^[Ss](\d+)$)"), i2(R"(^[Ii]2[\(_]?(\d+)\)?$)");
  CoxeterType t;
  if (std::regex_match(s, m, a)) {
    t = A(std::stoi(m[1]));
  } else if (std::regex_match(s, m, sn)) {
    t = A(std::stoi(m[1]) - 1);
  } else if (std::regex_match(s, m, i2)) {
    t = I2(std::stoi(m[1]));
  } else {
    throw Error(ErrorCode::BadInput, "unknown Coxeter type \"" + s + "\"");
  }
  if (t.family == Family::A && (t.param < 1 || t.param > 4))
    throw Error(ErrorCode::BadInput, "type A_n supported for 1 <= n <= 4");
  if (t.family == Family::I2 && (t.param < 2 || t.param > 64))
    throw Error(ErrorCode::BadInput, "I2(m) supported for 2 <= m <= 64");
  return t;
}

int CoxeterGroup::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  if (type_.family == CoxeterType::Family::I2) return type_.param;
  return std::abs(i - j) == 1 ? 3 : 2;
}

CoxeterGroup::CoxeterGroup(CoxeterType t) : type_(t) {
  using Rep = std::vector<int>;
  const bool isA = t.family == CoxeterType::Family::A;
  const int d = isA ? t.param + 1 : 0;
  const int m = t.param;
  auto product = [&](const Rep& u, const Rep& v) -> Rep {
    if (isA) {
      Rep r(d);
      for (int i = 0; i < d; ++i) r[i] = u[v[i]];
      return r;
    }
    // {kind, a}: kind 0 rotation rho^a, kind 1 reflection sigma_a
    int ku = u[0], a = u[1], kv = v[0], b = v[1];
    if (ku == 0 && kv == 0) return {0, (a + b) % m};
    if (ku == 0 && kv == 1) return {1, (a + b) % m};
    if (ku == 1 && kv == 0) return {1, ((a - b) % m + m) % m};
    return {0, ((a - b) % m + m) % m};
  };
  Rep id;
  std::vector<Rep> gens;
  if (isA) {
    id.resize(d);
    for (int i = 0; i < d; ++i) id[i] = i;
    for (int k = 0; k + 1 < d; ++k) {
      Rep s = id;
      std::swap(s[k], s[k + 1]);
      gens.push_back(s);
    }
  } else {
    id = {0, 0};
    gens = {{1, 0}, {1, 1}};
  }
  std::map<Rep, int> index;
  rep_.push_back(id);
  index[id] = 0;
  // BFS by right multiplication gives lengths and lex-least words
  len_.push_back(0);
  word_.push_back("");
  for (std::size_t h = 0; h < rep_.size(); ++h)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Rep w = product(rep_[h], gens[g]);
      auto it = index.find(w);
      std::string cand = word_[h] + static_cast<char>('a' + g);
      if (it == index.end()) {
        index[w] = static_cast<int>(rep_.size());
        rep_.push_back(w);
        len_.push_back(len_[h] + 1);
        word_.push_back(cand);
      } else if (len_[it->second] == len_[h] + 1 && cand < word_[it->second]) {
        word_[it->second] = cand;
      }
    }
  const int n = static_cast<int>(rep_.size());
  table_.assign(static_cast<std::size_t>(n) * n, 0);
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = index.at(product(rep_[a], rep_[b]));
      table_[static_cast<std::size_t>(a) * n + b] = c;
      if (c == 0) inv_[a] = b;
    }
  for (const auto& g : gens) simple_.push_back(index.at(g));
  std::set<int> T(simple_.begin(), simple_.end());
  for (int w = 0; w < n; ++w)
    for (int s : simple_) T.insert(mul(mul(w, s), inv_[w]));
  refl_.assign(T.begin(), T.end());
  std::sort(refl_.begin(), refl_.end(), [&](int x, int y) {
    return len_[x] != len_[y] ? len_[x] < len_[y] : word_[x] < word_[y];
  });
  abslen_.assign(n, -1);
  abslen_[0] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int w = q.front();
    q.pop_front();
    for (int r : refl_) {
      int v = mul(w, r);
      if (abslen_[v] < 0) {
        abslen_[v] = abslen_[w] + 1;
        q.push_back(v);
      }
    }
  }
}

int CoxeterGroup::coxeter_element() const {
  int c = 0;
  for (int s : simple_) c = mul(c, s);
  return c;
}

std::string CoxeterGroup::one_line(int w) const {
  if (type_.family != CoxeterType::Family::A) return word_[w].empty() ? "e" : word_[w];
  std::string s;
  const auto& r = rep_[w];
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.size() > 9 && i) s += ",";
    s += std::to_string(r[i] + 1);
  }
  return s;
}

std::string CoxeterGroup::cycles(int w) const {
  if (type_.family != CoxeterType::Family::A) return word_[w].empty() ? "e" : word_[w];
  const auto& r = rep_[w];
  std::vector<char> seen(r.size(), 0);
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (seen[i] || r[i] == static_cast<int>(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(r[j]);
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace upho
