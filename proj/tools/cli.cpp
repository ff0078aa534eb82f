#include "cli.hpp"

#include <algorithm>
#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "upho/error.hpp"
#include "upho/iso.hpp"
#include "upho/lattice.hpp"
#include "upho/mobius.hpp"
#include "upho/monoid.hpp"
#include "upho/poset_io.hpp"
#include "upho/upho.hpp"
#include "upho/verifier.hpp"
#include "upho/zoo.hpp"

namespace upho::cli {

namespace {

using nlohmann::json;

struct Flags {
  int N = 4, depth = -1, order = -1, m = 2, q = 2, k = 2, jobs = 1;
  std::string fmt;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  bool has_N = false, has_depth = false, has_order = false, has_m = false, has_k = false, has_budget = false;

  std::uint64_t word_budget() const { return has_budget ? budget : word_budget_from_env(); }
};

// verification failure, mapped to exit code 1
struct VerifyFailure {};

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadInput, "expected an integer, got \"" + s + "\"");
  }
}

std::vector<std::string> decimal(const IntPolynomial& p) { return p.decimal_coeffs(); }

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_file(const std::string& s) {
  if (s == "-") return true;
  std::ifstream in(s);
  return static_cast<bool>(in);
}

// a poset from any source, with whatever extra structure the source has
struct Source {
  std::string id;
  GradedPoset poset;
  std::optional<ZooRecipe> recipe;
  std::optional<UphoTruncation> truncation;
  std::optional<MonoidPoset> monoid;
  std::optional<IntPolynomial> chi_only;  // for lattices kept as chi* only
};

void need(const std::vector<std::string>& a, std::size_t n, const std::string& usage) {
  if (a.size() != n) throw Error(ErrorCode::BadInput, "usage: " + usage);
}

ZooRecipe zoo_recipe(ZooFamily f, const std::vector<std::string>& a, const Flags& fl) {
  ZooRecipe r;
  r.family = f;
  const std::string name = family_name(f);
  switch (f) {
    case ZooFamily::boolean:
    case ZooFamily::partition:
    case ZooFamily::signed_partition:
    case ZooFamily::cross_polytope_faces:
    case ZooFamily::hypercube_faces:
      need(a, 1, name + " <n>");
      r.params = {to_int(a[0])};
      break;
    case ZooFamily::rank_two_M:
      need(a, 1, name + " <r>");
      r.params = {to_int(a[0])};
      break;
    case ZooFamily::subspace:
      need(a, 1, name + " <n> [--q q]");
      r.params = {to_int(a[0]), fl.q};
      break;
    case ZooFamily::dowling_cyclic:
      need(a, 1, name + " <n> [--m m]");
      r.params = {to_int(a[0]), fl.m};
      break;
    case ZooFamily::chain_sum:
      need(a, 2, name + " <r> <n>");
      r.params = {to_int(a[0]), to_int(a[1])};
      break;
    case ZooFamily::uniform_matroid_flats:
      need(a, 2, name + " <k> <n>");
      r.params = {to_int(a[0]), to_int(a[1])};
      break;
    case ZooFamily::bond_lattice:
      need(a, 1, name + " <graph: 1-2,2-3,... | cycle:n | complete:n | path:n | g16>");
      r.graph = Graph::parse(a[0]);
      break;
    case ZooFamily::weak_order:
    case ZooFamily::noncrossing:
      need(a, 1, name + " <A1..A4 | I2(m)>");
      r.coxeter = CoxeterType::parse(a[0]);
      break;
    case ZooFamily::figure8_dual_example: need(a, 0, name); break;
  }
  return r;
}

std::optional<MonoidPresentation> named_monoid(const std::string& name, const std::vector<std::string>& a) {
  if (name == "rank-two-monoid") {
    need(a, 1, name + " <r>");
    return rank_two_presentation(to_int(a[0]));
  }
  if (name == "chains-monoid") {
    need(a, 2, name + " <r> <n>");
    return chains_presentation(to_int(a[0]), to_int(a[1]));
  }
  if (name == "classical-braid") {
    need(a, 1, name + " <type>");
    return classical_braid_presentation(CoxeterType::parse(a[0]));
  }
  if (name == "dual-braid") {
    need(a, 1, name + " <type>");
    return dual_braid_presentation(CoxeterType::parse(a[0]));
  }
  if (name == "figure8-monoid") {
    need(a, 0, name);
    return figure8_presentation();
  }
  if (name == "free-monoid") {
    need(a, 1, name + " <generators>");
    return free_presentation(to_int(a[0]));
  }
  return std::nullopt;
}

UphoTruncation truncation_from_json(const json& j) {
  try {
    UphoTruncation T;
    T.poset = poset_from_json(j.at("poset"));
    T.N = j.at("N").get<int>();
    T.recipe = j.value("recipe", std::string("file"));
    if (j.contains("expected_chi") && !j.at("expected_chi").is_null()) {
      std::vector<BigInt> c;
      for (const auto& s : j.at("expected_chi")) c.emplace_back(s.get<std::string>());
      T.expected_chi = IntPolynomial(std::move(c));
    }
    if (T.N != T.poset.height()) throw Error(ErrorCode::BadInput, "N does not match the poset height");
    return T;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string("malformed truncation JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::BadInput, std::string("malformed truncation JSON: ") + e.what());
  }
}

Source load_source(const std::vector<std::string>& a, const Flags& fl) {
  if (a.empty()) throw Error(ErrorCode::BadInput, "missing source (zoo family, truncation recipe, monoid or file)");
  const std::string& head = a[0];
  std::vector<std::string> rest(a.begin() + 1, a.end());
  Source s;
  if (auto f = parse_family(head)) {
    s.recipe = zoo_recipe(*f, rest, fl);
    s.id = s.recipe->describe();
    s.poset = build_zoo(*s.recipe);
    return s;
  }
  const auto& tn = truncation_names();
  if (std::find(tn.begin(), tn.end(), head) != tn.end()) {
    need(rest, 0, head + " --k --q --m --N");
    TruncationParams p{fl.k, fl.q, fl.m, fl.N};
    s.truncation = build_truncation(head, p);
    s.id = s.truncation->recipe;
    s.poset = s.truncation->poset;
    return s;
  }
  std::optional<MonoidPresentation> P = named_monoid(head, rest);
  if (!P && looks_like_file(head)) {
    need(rest, 0, "<file>");
    std::string text = read_input(head);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("not JSON: ") + e.what());
      }
      if (j.contains("poset")) {
        s.truncation = truncation_from_json(j);
        s.id = s.truncation->recipe;
        s.poset = s.truncation->poset;
      } else {
        s.poset = poset_from_json(j);
        s.id = head;
      }
      return s;
    }
    P = MonoidPresentation::parse_text(text);
  }
  if (!P) throw Error(ErrorCode::BadInput, "unknown source \"" + head + "\"");
  s.monoid = enumerate_elements(*P, fl.N, fl.word_budget());
  s.truncation = from_monoid(*P, fl.N, fl.word_budget());
  s.id = s.truncation->recipe;
  s.poset = s.monoid->poset;
  return s;
}

void emit_poset(const GradedPoset& P, const std::string& fmt, const std::string& name, std::ostream& out) {
  if (fmt.empty() || fmt == "json") out << poset_to_json(P).dump() << "\n";
  else if (fmt == "dot") out << poset_to_dot(P, name);
  else if (fmt == "text" || fmt == "md") out << poset_to_text(P);
  else throw Error(ErrorCode::BadInput, "unknown --fmt \"" + fmt + "\" (json, dot, text, md)");
}

void check_fmt(const std::string& fmt, std::initializer_list<const char*> ok) {
  if (fmt.empty()) return;
  for (const char* f : ok)
    if (fmt == f) return;
  std::string list;
  for (const char* f : ok) list += std::string(list.empty() ? "" : ", ") + f;
  throw Error(ErrorCode::BadInput, "--fmt must be one of " + list);
}

std::string json_string_list(const std::vector<std::string>& xs) { return json(xs).dump(); }

// ---- subcommands ------------------------------------------------------------

int cmd_gen(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  const auto& tn = truncation_names();
  if (a.empty() || (!parse_family(a[0]) && std::find(tn.begin(), tn.end(), a[0]) == tn.end()))
    throw Error(ErrorCode::BadInput, "gen needs a zoo family or a truncation name");
  Source s = load_source(a, fl);
  emit_poset(s.poset, fl.fmt, "L", out);
  return 0;
}

json truncation_json(const UphoTruncation& T) {
  json j;
  j["recipe"] = T.recipe;
  j["N"] = T.N;
  j["expected_core"] = T.expected_core ? json(T.expected_core->describe()) : json(nullptr);
  j["expected_chi"] = T.expected_chi ? json(decimal(*T.expected_chi)) : json(nullptr);
  std::vector<std::string> counts;
  for (int r = 0; r <= T.poset.height(); ++r) counts.push_back(std::to_string(T.poset.level_size(r)));
  j["rank_sizes"] = counts;
  j["poset"] = poset_to_json(T.poset);
  return j;
}

int cmd_upho(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  if (!s.truncation) throw Error(ErrorCode::BadInput, "upho needs a truncation recipe or monoid");
  const auto& T = *s.truncation;
  check_fmt(fl.fmt, {"json", "dot", "text", "md"});
  if (fl.fmt.empty() || fl.fmt == "json") {
    out << truncation_json(T).dump() << "\n";
  } else if (fl.fmt == "dot") {
    out << poset_to_dot(T.poset, "T");
  } else {
    out << "recipe: " << T.recipe << "\nN: " << T.N << "\n";
    if (T.expected_core) out << "expected core: " << T.expected_core->describe() << "\n";
    if (T.expected_chi) out << "expected chi*: " << T.expected_chi->str() << "\n";
    out << poset_to_text(T.poset);
  }
  return 0;
}

int cmd_monoid(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  if (!s.monoid) throw Error(ErrorCode::BadInput, "monoid needs a presentation file or a named monoid");
  const auto& M = *s.monoid;
  check_fmt(fl.fmt, {"json", "dot", "text", "md"});
  auto lc = left_cancellative_check(M);
  auto jv = right_lcm_check(M);
  int rc = (lc.ok && jv.status != JoinVerdict::Status::NotLattice) ? 0 : 1;
  if (fl.fmt.empty() || fl.fmt == "json") {
    out << poset_to_json(M.poset).dump() << "\n";
    return rc;
  }
  if (fl.fmt == "dot") {
    out << poset_to_dot(M.poset, "M");
    return rc;
  }
  out << "presentation: " << M.presentation.name() << "\n" << M.presentation.to_text();
  out << "N: " << M.N << "\nclasses per length:";
  for (int r = 0; r <= M.poset.height(); ++r) out << " " << M.poset.level_size(r);
  out << "\nleft cancellative: " << (lc.ok ? "verified to rank " + std::to_string(lc.verified_to_rank) : "no")
      << "\n";
  if (!lc.ok) out << "  witness: " << lc.x << "." << lc.b << " = " << lc.x << "." << lc.c << "\n";
  out << "joins: " << status_name(jv.status) << " (conclusive to rank " << jv.conclusive_rank << ", "
      << jv.indeterminate_pairs << " pairs unbounded inside the truncation)\n";
  if (jv.witness)
    out << "  witness: " << M.poset.label(jv.witness->first) << ", " << M.poset.label(jv.witness->second) << "\n";
  out << "bounded evidence: verified to rank N, not proved\n";
  out << poset_to_text(M.poset);
  return rc;
}

int cmd_invariants(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  const GradedPoset& P = s.poset;
  check_fmt(fl.fmt, {"json", "text", "md"});
  json j;
  j["id"] = s.id;
  j["size"] = P.size();
  j["height"] = P.height();
  std::vector<std::string> sizes;
  for (int r = 0; r <= P.height(); ++r) sizes.push_back(std::to_string(P.level_size(r)));
  j["rank_sizes"] = sizes;
  j["rank_gen_poly"] = decimal(rank_gen_poly(P));
  std::optional<IntPolynomial> chi;
  if (P.bottom()) {
    chi = reciprocal_char_poly(P);
    j["chi_star"] = decimal(*chi);
    std::size_t order = fl.has_order ? static_cast<std::size_t>(fl.order) : default_scan_order(*chi);
    auto inv = series_inverse(*chi, order);
    j["inverse_series"] = inv.decimal_coeffs();
    auto neg = first_negative_coefficient(inv);
    j["first_negative"] = neg ? json(*neg) : json(nullptr);
  } else {
    j["chi_star"] = nullptr;
  }
  std::optional<LatticeVerdict> lv;
  if (P.size() <= 5000) {
    lv = lattice_check(P);
    j["is_lattice"] = lv->is_lattice;
  }
  if (fl.fmt.empty() || fl.fmt == "json") {
    out << j.dump() << "\n";
    return 0;
  }
  auto line = [&](const std::string& k, const std::string& v) {
    if (fl.fmt == "md") out << "| " << k << " | " << v << " |\n";
    else out << k << ": " << v << "\n";
  };
  if (fl.fmt == "md") out << "| invariant | value |\n|---|---|\n";
  line("id", s.id);
  line("size", std::to_string(P.size()));
  line("rank sizes", json_string_list(sizes));
  line("F", rank_gen_poly(P).str());
  if (chi) {
    line("chi*", chi->str());
    line("1/chi*", json_string_list(j["inverse_series"].get<std::vector<std::string>>()));
    line("first negative", j["first_negative"].is_null() ? "none in scan" : j["first_negative"].dump());
  }
  if (lv) line("lattice", lv->is_lattice ? "yes" : "no");
  return 0;
}

int cmd_core(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  GradedPoset C = core(s.poset);
  emit_poset(C, fl.fmt, "core", out);
  return 0;
}

int cmd_upho_check(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  if (!s.truncation) throw Error(ErrorCode::BadInput, "upho-check needs a truncation (recipe, monoid or upho JSON)");
  const auto& T = *s.truncation;
  check_fmt(fl.fmt, {"json", "text", "md"});
  auto rid = verify_rank_identity(T);
  GradedPoset C = core(T.poset);
  int depth = fl.has_depth ? fl.depth : default_upho_depth(T, C.height());
  auto uc = verify_upho(T, depth);
  bool ok = rid.ok && uc.ok;
  json j;
  j["recipe"] = T.recipe;
  j["N"] = T.N;
  j["rank_sizes"] = rid.counts;
  j["expected"] = rid.expected;
  j["chi_star_core"] = decimal(rid.chi);
  j["rank_identity"] = rid.ok ? "pass" : "fail";
  j["upho"] = uc.ok ? "pass" : "fail";
  j["depth"] = depth;
  j["filters_checked"] = uc.filters_checked;
  j["witness"] = uc.witness ? json(T.poset.label(*uc.witness)) : json(nullptr);
  j["evidence"] = "bounded: verified to rank " + std::to_string(T.N);
  if (fl.fmt.empty() || fl.fmt == "json") {
    out << j.dump() << "\n";
  } else {
    out << "recipe: " << T.recipe << "\n";
    out << "rank sizes: " << json_string_list(rid.counts) << "\n";
    out << "1/chi*(core): " << json_string_list(rid.expected) << "\n";
    out << "rank identity: " << (rid.ok ? "pass" : "fail") << "\n";
    out << "upho to depth " << depth << ": " << (uc.ok ? "pass" : "fail") << " (" << uc.filters_checked
        << " filters)\n";
    if (uc.witness) out << "witness: " << T.poset.label(*uc.witness) << "\n";
    out << "evidence: bounded, verified to rank " << T.N << "\n";
  }
  return ok ? 0 : 1;
}

json entry_json(const ObstructionEntry& e, const GradedPoset* L) {
  json j;
  j["test"] = e.test;
  j["verdict"] = verdict_name(e.verdict);
  j["certificate"] = e.certificate;
  j["scan_order"] = e.scan_order;
  if (e.index) j["index"] = *e.index;
  if (e.value) j["value"] = to_string(*e.value);
  if (e.element && L) j["element"] = L->label(*e.element);
  if (e.test == "structural") {
    j["search_nodes"] = e.search_nodes;
    j["search_budget"] = e.search_budget;
  }
  if (e.test == "positivity_m") j["m"] = e.m;
  return j;
}

struct ObstructCase {
  std::string id;
  std::function<GradedPoset()> build;  // empty for chi-only
  std::function<IntPolynomial()> chi;
  bool known_core;
};

std::vector<ObstructCase> obstruct_cases() {
  auto zoo = [](ZooFamily f, std::vector<int> p) {
    ZooRecipe r;
    r.family = f;
    r.params = std::move(p);
    return r;
  };
  std::vector<ObstructCase> cs;
  auto add = [&](ZooRecipe r, bool core) {
    cs.push_back({r.describe(), [r] { return build_zoo(r); }, {}, core});
  };
  for (int n = 1; n <= 4; ++n) add(zoo(ZooFamily::boolean, {n}), true);
  add(zoo(ZooFamily::subspace, {2, 2}), true);
  add(zoo(ZooFamily::subspace, {2, 3}), true);
  add(zoo(ZooFamily::partition, {3}), true);
  add(zoo(ZooFamily::partition, {4}), true);
  add(zoo(ZooFamily::signed_partition, {2}), true);
  add(zoo(ZooFamily::dowling_cyclic, {2, 3}), true);
  add(zoo(ZooFamily::rank_two_M, {3}), true);
  add(zoo(ZooFamily::chain_sum, {2, 3}), true);
  {
    ZooRecipe w = zoo(ZooFamily::weak_order, {});
    w.coxeter = CoxeterType::A(2);
    add(w, true);
    ZooRecipe nc = zoo(ZooFamily::noncrossing, {});
    nc.coxeter = CoxeterType::A(2);
    add(nc, true);
    nc.coxeter = CoxeterType::A(3);
    add(nc, true);
  }
  add(zoo(ZooFamily::figure8_dual_example, {}), true);
  add(zoo(ZooFamily::cross_polytope_faces, {3}), false);
  add(zoo(ZooFamily::cross_polytope_faces, {4}), false);
  add(zoo(ZooFamily::hypercube_faces, {3}), false);
  for (int n : {4, 5}) {
    ZooRecipe b = zoo(ZooFamily::bond_lattice, {});
    b.graph = Graph::cycle(n);
    cs.push_back({"bond(C" + std::to_string(n) + ")", [b] { return build_zoo(b); }, {}, false});
  }
  add(zoo(ZooFamily::uniform_matroid_flats, {3, 4}), false);
  add(zoo(ZooFamily::uniform_matroid_flats, {3, 5}), false);
  add(zoo(ZooFamily::uniform_matroid_flats, {4, 5}), false);
  cs.push_back({"dual(figure8)", [] { return *dual(figure8_dual_example()); }, {}, false});
  cs.push_back({"bond(g16)", {}, [] { return bond_char_poly(Graph::sixteen_vertex_example()); }, false});
  return cs;
}

void print_reports(const std::vector<ObstructionReport>& reps, const std::vector<GradedPoset>& lats,
                   const std::vector<std::string>& expect, const std::string& fmt, std::ostream& out) {
  if (fmt.empty() || fmt == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      json j;
      j["lattice"] = reps[i].lattice;
      if (!expect.empty()) j["expected"] = expect[i];
      j["entries"] = json::array();
      const GradedPoset* L = lats[i].size() ? &lats[i] : nullptr;
      for (const auto& e : reps[i].entries) j["entries"].push_back(entry_json(e, L));
      arr.push_back(j);
    }
    out << (reps.size() == 1 && expect.empty() ? arr[0] : arr).dump() << "\n";
    return;
  }
  if (fmt == "md") out << "| lattice | test | verdict | certificate |\n|---|---|---|---|\n";
  for (const auto& R : reps)
    for (const auto& e : R.entries) {
      if (fmt == "md")
        out << "| " << R.lattice << " | " << e.test << " | " << verdict_name(e.verdict) << " | " << e.certificate
            << " |\n";
      else
        out << R.lattice << "  " << e.test << "  " << verdict_name(e.verdict)
            << (e.certificate.empty() ? "" : "  " + e.certificate) << "\n";
    }
}

int cmd_obstruct(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  check_fmt(fl.fmt, {"json", "text", "md"});
  ObstructionOptions o;
  if (fl.has_order) o.order = static_cast<std::size_t>(fl.order);
  if (fl.has_m) o.m = fl.m;
  if (a.size() == 1 && a[0] == "all") {
    auto cs = obstruct_cases();
    struct Out {
      ObstructionReport rep;
      GradedPoset L;
    };
    auto res = parallel_map<Out>(cs.size(), fl.jobs, [&](std::size_t i) {
      if (cs[i].build) {
        GradedPoset L = cs[i].build();
        return Out{obstruction_report(cs[i].id, L, o), L};
      }
      return Out{obstruction_report_chi(cs[i].id, cs[i].chi(), o), GradedPoset()};
    });
    std::vector<ObstructionReport> reps;
    std::vector<GradedPoset> lats;
    std::vector<std::string> expect;
    bool unexpected = false;
    for (std::size_t i = 0; i < res.size(); ++i) {
      bool failed = res[i].rep.any_fail();
      if (failed == cs[i].known_core) unexpected = true;
      reps.push_back(res[i].rep);
      lats.push_back(res[i].L);
      expect.push_back(cs[i].known_core ? "core" : "non-core");
    }
    print_reports(reps, lats, expect, fl.fmt, out);
    return unexpected ? 1 : 0;
  }
  Source s = load_source(a, fl);
  auto rep = obstruction_report(s.id, s.poset, o);
  print_reports({rep}, {s.poset}, {}, fl.fmt, out);
  return 0;
}

std::string matrix_text(const BigMatrix& M) {
  std::string s;
  for (const auto& row : M) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + to_string(row[j]);
    s += "\n";
  }
  return s;
}

json matrix_json(const BigMatrix& M) {
  json j = json::array();
  for (const auto& row : M) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(to_string(x));
    j.push_back(r);
  }
  return j;
}

int cmd_whitney(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  check_fmt(fl.fmt, {"json", "text", "md"});
  if (a.size() != 2) throw Error(ErrorCode::BadInput, "usage: whitney <boolean|partition|signed-partition|dowling> <n> [--m m]");
  auto W = whitney_tables(a[0], to_int(a[1]), fl.m);
  bool ok = whitney_inverse_check(W);
  std::vector<std::string> as;
  for (const auto& x : W.a) as.push_back(to_string(x));
  if (fl.fmt.empty() || fl.fmt == "json") {
    json j;
    j["family"] = a[0];
    j["n"] = to_int(a[1]);
    j["V"] = matrix_json(W.V);
    j["v"] = matrix_json(W.v);
    j["a"] = as;
    j["inverse"] = ok ? "pass" : "fail";
    out << j.dump() << "\n";
  } else {
    out << "V (second kind):\n" << matrix_text(W.V) << "v (first kind):\n" << matrix_text(W.v);
    out << "a: " << json_string_list(as) << "\ninverse check: " << (ok ? "pass" : "fail") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_reproduce(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  if (!a.empty()) throw Error(ErrorCode::BadInput, "reproduce takes no positional arguments");
  check_fmt(fl.fmt, {"json", "text", "md"});
  ReproOptions o;
  if (fl.has_order) o.order = static_cast<std::size_t>(fl.order);
  o.jobs = fl.jobs;
  o.budget = fl.word_budget();
  auto rows = reproduce_paper(o);
  bool fail = false;
  for (const auto& r : rows) fail = fail || r.verdict == Verdict::fail;
  if (fl.fmt == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"key", r.key}, {"claim", r.claim}, {"value", r.value}, {"verdict", verdict_name(r.verdict)},
                     {"note", r.note}});
    out << arr.dump() << "\n";
  } else if (fl.fmt == "md") {
    out << "| row | verdict | note |\n|---|---|---|\n";
    for (const auto& r : rows) out << "| " << r.line() << " | " << verdict_name(r.verdict) << " | " << r.note << " |\n";
  } else {
    for (const auto& r : rows) out << r.line() << "\n";
  }
  return fail ? 1 : 0;
}

int cmd_export(const std::vector<std::string>& a, const Flags& fl, std::ostream& out) {
  Source s = load_source(a, fl);
  emit_poset(s.poset, fl.fmt, "P", out);
  return 0;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::SizeGuard:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::DepthExceedsTruncation: return 2;
    case ErrorCode::JoinOfAtomsMissing:
    case ErrorCode::NoJoin:
    case ErrorCode::NoMeet:
    case ErrorCode::ChainNotModular:
    case ErrorCode::ChainNotMaximal: return 1;
    default: return 3;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"upho: upho posets, cores and obstructions"};
  app.require_subcommand(1);
  Flags fl;
  std::vector<std::string> pos;

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const std::vector<std::string>&, const Flags&, std::ostream&);
  };
  const Sub subs[] = {
      {"gen", "generate a zoo lattice", cmd_gen},
      {"upho", "build an upho truncation", cmd_upho},
      {"monoid", "enumerate a homogeneous monoid", cmd_monoid},
      {"invariants", "rank sizes, F, chi*, 1/chi*", cmd_invariants},
      {"core", "interval from the minimum to the join of atoms", cmd_core},
      {"upho-check", "F = 1/chi*(core) and filter isomorphism (bounded)", cmd_upho_check},
      {"obstruct", "obstruction tests (or 'all')", cmd_obstruct},
      {"whitney", "Whitney number tables", cmd_whitney},
      {"reproduce", "recompute the cited numbers", cmd_reproduce},
      {"export", "write poset JSON / DOT", cmd_export},
  };
  std::vector<CLI::App*> apps;
  std::vector<CLI::Option*> opt_N, opt_depth, opt_order, opt_m, opt_k, opt_budget;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("args", pos, "source and positional parameters");
    opt_N.push_back(sub->add_option("--N", fl.N, "truncation rank"));
    opt_depth.push_back(sub->add_option("--depth", fl.depth, "upho check depth"));
    opt_order.push_back(sub->add_option("--order", fl.order, "series scan order")->check(CLI::NonNegativeNumber));
    opt_m.push_back(sub->add_option("--m", fl.m, "Dowling group order / positivity exponent"));
    sub->add_option("--q", fl.q, "field order");
    opt_k.push_back(sub->add_option("--k", fl.k, "truncation parameter"));
    sub->add_option("--fmt", fl.fmt, "json, dot, text or md");
    sub->add_option("--jobs", fl.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", fl.seed, "seed for randomized steps (none are randomized)");
    opt_budget.push_back(sub->add_option("--budget", fl.budget, "word budget")->check(CLI::PositiveNumber));
    apps.push_back(sub);
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 3;
  }
  auto any = [](const std::vector<CLI::Option*>& v) {
    for (auto* o : v)
      if (o->count()) return true;
    return false;
  };
  fl.has_N = any(opt_N);
  fl.has_depth = any(opt_depth);
  fl.has_order = any(opt_order);
  fl.has_m = any(opt_m);
  fl.has_k = any(opt_k);
  fl.has_budget = any(opt_budget);
  try {
    for (std::size_t i = 0; i < apps.size(); ++i)
      if (apps[i]->parsed()) return subs[i].fn(pos, fl, out);
  } catch (const Error& e) {
    err << "error [" << error_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}

}  // namespace upho::cli
