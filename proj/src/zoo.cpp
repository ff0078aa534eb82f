#include "upho/zoo.hpp"

#include <regex>
#include <sstream>

#include "upho/error.hpp"

namespace upho {

namespace {
struct FamilyName {
  ZooFamily f;
  const char* name;
};
const FamilyName kFamilies[] = {
    {ZooFamily::boolean, "boolean"},
    {ZooFamily::subspace, "subspace"},
    {ZooFamily::partition, "partition"},
    {ZooFamily::signed_partition, "signed-partition"},
    {ZooFamily::dowling_cyclic, "dowling"},
    {ZooFamily::rank_two_M, "rank-two"},
    {ZooFamily::chain_sum, "chain-sum"},
    {ZooFamily::cross_polytope_faces, "cross-polytope"},
    {ZooFamily::hypercube_faces, "hypercube"},
    {ZooFamily::bond_lattice, "bond"},
    {ZooFamily::uniform_matroid_flats, "uniform"},
    {ZooFamily::weak_order, "weak-order"},
    {ZooFamily::noncrossing, "noncrossing"},
    {ZooFamily::figure8_dual_example, "figure8"},
};

int param(const ZooRecipe& r, std::size_t i, const char* what) {
  if (i >= r.params.size())
    throw Error(ErrorCode::BadInput, std::string(family_name(r.family)) + " needs parameter " + what);
  return r.params[i];
}
}  // namespace

const char* family_name(ZooFamily f) {
  for (const auto& e : kFamilies)
    if (e.f == f) return e.name;
  return "?";
}

std::optional<ZooFamily> parse_family(const std::string& s) {
  std::string t = s;
  for (auto& c : t)
    if (c == '_') c = '-';
  for (const auto& e : kFamilies)
    if (t == e.name) return e.f;
  if (t == "signed") return ZooFamily::signed_partition;
  if (t == "dowling-cyclic") return ZooFamily::dowling_cyclic;
  if (t == "cross") return ZooFamily::cross_polytope_faces;
  if (t == "bond-lattice") return ZooFamily::bond_lattice;
  return std::nullopt;
}

std::string ZooRecipe::describe() const {
  std::ostringstream os;
  os << family_name(family);
  if (family == ZooFamily::weak_order || family == ZooFamily::noncrossing) {
    os << "(" << coxeter.name() << ")";
    return os.str();
  }
  if (family == ZooFamily::bond_lattice) {
    os << "(n=" << graph.n << ",m=" << graph.edges.size() << ")";
    return os.str();
  }
  if (!params.empty()) {
    os << "(";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << ")";
  }
  return os.str();
}

GradedPoset build_zoo(const ZooRecipe& r) {
  switch (r.family) {
    case ZooFamily::boolean: return boolean_lattice(param(r, 0, "n"));
    case ZooFamily::subspace:
      return subspace_lattice(param(r, 0, "n"), static_cast<unsigned>(param(r, 1, "q")));
    case ZooFamily::partition: return partition_lattice(param(r, 0, "n"));
    case ZooFamily::signed_partition: return signed_partition_lattice(param(r, 0, "n"));
    case ZooFamily::dowling_cyclic: return dowling_lattice(param(r, 0, "n"), param(r, 1, "m"));
    case ZooFamily::rank_two_M: return rank_two_lattice(param(r, 0, "r"));
    case ZooFamily::chain_sum: return chain_sum(param(r, 0, "r"), param(r, 1, "n"));
    case ZooFamily::cross_polytope_faces: return cross_polytope_faces(param(r, 0, "n"));
    case ZooFamily::hypercube_faces: return hypercube_faces(param(r, 0, "n"));
    case ZooFamily::bond_lattice: return bond_lattice(r.graph);
    case ZooFamily::uniform_matroid_flats: return uniform_matroid_flats(param(r, 0, "k"), param(r, 1, "n"));
    case ZooFamily::weak_order: return weak_order(r.coxeter);
    case ZooFamily::noncrossing: return noncrossing(r.coxeter);
    case ZooFamily::figure8_dual_example: return figure8_dual_example();
  }
  throw Error(ErrorCode::BadInput, "unknown family");
}

std::optional<std::vector<Element>> standard_modular_chain(const ZooRecipe& r, const GradedPoset& L) {
  std::vector<std::string> labels;
  const int n = r.params.empty() ? 0 : r.params[0];
  auto join_digits = [n](int from, int to) {
    std::string s;
    for (int i = from; i <= to; ++i) s += (n > 9 && i > from ? "," : "") + std::to_string(i);
    return s;
  };
  switch (r.family) {
    case ZooFamily::boolean:
      for (int i = 0; i <= n; ++i) {
        std::string s = "{";
        for (int j = 1; j <= i; ++j) s += (j > 1 ? "," : "") + std::to_string(j);
        labels.push_back(s + "}");
      }
      break;
    case ZooFamily::subspace:
      for (int i = 0; i <= n; ++i) {
        std::string s = "<";
        for (int a = 0; a < i; ++a) {
          if (a) s += ",";
          for (int b = 0; b < n; ++b) s += a == b ? '1' : '0';
        }
        labels.push_back(s + ">");
      }
      break;
    case ZooFamily::partition:
      // pi_i = {1..i+1} plus singletons
      for (int i = 0; i < n; ++i) {
        std::string s = join_digits(1, i + 1);
        for (int j = i + 2; j <= n; ++j) s += "|" + std::to_string(j);
        labels.push_back(s);
      }
      break;
    case ZooFamily::signed_partition:
    case ZooFamily::dowling_cyclic:
      // zero (uncovered) part {1..i}, singletons above
      for (int i = 0; i <= n; ++i) {
        std::string s = i ? "0:" + join_digits(1, i) : "";
        for (int j = i + 1; j <= n; ++j) s += (s.empty() ? "" : "|") + std::to_string(j);
        labels.push_back(s.empty() ? "()" : s);
      }
      break;
    default:
      return std::nullopt;
  }
  std::vector<Element> chain;
  for (const auto& s : labels) {
    auto e = L.find_label(s);
    if (!e) throw Error(ErrorCode::BadInput, "chain element " + s + " not found");
    chain.push_back(*e);
  }
  return chain;
}

std::optional<IntPolynomial> expected_chi(const ZooRecipe& r) {
  std::vector<BigInt> a;
  const int n = r.params.empty() ? 0 : r.params[0];
  switch (r.family) {
    case ZooFamily::boolean:
      for (int i = 0; i < n; ++i) a.emplace_back(1);
      return linear_product(a);
    case ZooFamily::subspace: {
      BigInt p = 1;
      for (int i = 0; i < n; ++i) {
        a.push_back(p);
        p *= r.params.at(1);
      }
      return linear_product(a);
    }
    case ZooFamily::partition:
      for (int i = 1; i < n; ++i) a.emplace_back(i);
      return linear_product(a);
    case ZooFamily::signed_partition:
      for (int i = 1; i <= n; ++i) a.emplace_back(2 * i - 1);
      return linear_product(a);
    case ZooFamily::dowling_cyclic:
      for (int i = 0; i < n; ++i) a.emplace_back(1 + i * r.params.at(1));
      return linear_product(a);
    case ZooFamily::rank_two_M: {
      int k = r.params.at(0);
      return IntPolynomial{1, -k, k - 1};
    }
    case ZooFamily::chain_sum: {
      int k = r.params.at(0), m = r.params.at(1);
      return IntPolynomial{1, -k} + IntPolynomial::monomial(BigInt(k - 1), static_cast<std::size_t>(m));
    }
    case ZooFamily::bond_lattice: return bond_char_poly(r.graph);
    default: return std::nullopt;
  }
}

Graph Graph::parse(const std::string& s) {
  std::smatch m;
  static const std::regex named(R"(^(cycle|complete|path|C|K|P)[:]?(\d+)$)");
  if (s == "g16" || s == "sixteen") return sixteen_vertex_example();
  if (std::regex_match(s, m, named)) {
    int n = std::stoi(m[2]);
    std::string k = m[1];
    if (n < 1 || n > 64) throw Error(ErrorCode::BadInput, "graph size out of range");
    if (k == "cycle" || k == "C") {
      if (n < 3) throw Error(ErrorCode::BadInput, "cycle needs n >= 3");
      return cycle(n);
    }
    if (k == "complete" || k == "K") return complete(n);
    return path(n);
  }
  Graph g;
  static const std::regex edge(R"((\d+)-(\d+))");
  std::string rest = s;
  std::size_t count = 0;
  for (std::sregex_iterator it(s.begin(), s.end(), edge), end; it != end; ++it) {
    int u = std::stoi((*it)[1]), v = std::stoi((*it)[2]);
    if (u < 1 || v < 1 || u == v) throw Error(ErrorCode::BadInput, "bad edge in \"" + s + "\"");
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    g.n = std::max({g.n, u, v});
    ++count;
  }
  if (count == 0) throw Error(ErrorCode::BadInput, "no edges in \"" + s + "\"");
  auto e = g.edges;
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end())
    throw Error(ErrorCode::BadInput, "repeated edge in \"" + s + "\"");
  return g;
}

}  // namespace upho
