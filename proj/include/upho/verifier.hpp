#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upho/iso.hpp"
#include "upho/parallel.hpp"
#include "upho/polynomial.hpp"
#include "upho/poset.hpp"
#include "upho/powerseries.hpp"
#include "upho/upho.hpp"
#include "upho/zoo.hpp"

namespace upho {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);

// ---- truncation checks (bounded evidence up to rank N) --------------------

struct RankIdentityResult {
  bool ok = false;
  IntPolynomial chi;                  // chi*(core), Moebius computed
  std::vector<std::string> counts;    // rank sizes 0..N
  std::vector<std::string> expected;  // 1/chi* coefficients 0..N
  std::optional<int> mismatch;        // first differing rank
  bool chi_matches_recipe = true;     // chi* equals the recipe's closed form
};
RankIdentityResult verify_rank_identity(const UphoTruncation& T);

struct UphoCheckResult {
  bool ok = true;
  int depth = 0;
  std::size_t filters_checked = 0;
  std::optional<Element> witness;  // filter that is not isomorphic
};
inline int default_upho_depth(const UphoTruncation& T, int core_rank) {
  return std::max(0, std::min(3, T.N - core_rank));
}
// DepthExceedsTruncation if depth > N
UphoCheckResult verify_upho(const UphoTruncation& T, int depth, std::uint64_t budget = kDefaultSearchBudget);

// removes x and everything that is no longer above the minimum
GradedPoset delete_element(const GradedPoset& P, Element x);

// ---- obstructions ---------------------------------------------------------

struct ObstructionEntry {
  std::string test;  // positivity, positivity_m, max_join, structural
  Verdict verdict = Verdict::inconclusive;
  std::string certificate;  // human readable; empty only for a plain pass
  std::size_t scan_order = 0;
  std::optional<std::size_t> index;  // first negative coefficient
  std::optional<BigInt> value;
  std::optional<Element> element;  // structural / max_join witness
  std::uint64_t search_nodes = 0, search_budget = 0;
  int m = 1;
};

struct ObstructionReport {
  std::string lattice;
  std::vector<ObstructionEntry> entries;
  bool any_fail() const;
};

// 1/chi* scanned to `order`; pass only when chi* splits into factors (1 - a x), a >= 0
ObstructionEntry obstruction_positivity(const IntPolynomial& chi, std::size_t order);
ObstructionEntry obstruction_positivity(const GradedPoset& L, std::size_t order);
// chi*(x^m) / chi*(x)^m; m = 1 is vacuous
ObstructionEntry obstruction_positivity_m(const IntPolynomial& chi, int m, std::size_t order);
ObstructionEntry obstruction_max_join(const GradedPoset& L);
ObstructionEntry obstruction_structural(const GradedPoset& L, std::uint64_t budget = kDefaultSearchBudget);

struct ObstructionOptions {
  std::optional<std::size_t> order;  // default max(13, 4 deg + 16)
  int m = 2;
  std::uint64_t budget = kDefaultSearchBudget;
};
ObstructionReport obstruction_report(const std::string& id, const GradedPoset& L, const ObstructionOptions& o = {});
// lattices too big to materialize: only the chi*-based tests
ObstructionReport obstruction_report_chi(const std::string& id, const IntPolynomial& chi, const ObstructionOptions& o = {});

// nonnegative integers a with chi* = prod (1 - a x), if such a split exists
std::optional<std::vector<BigInt>> nonnegative_linear_split(const IntPolynomial& chi);

// ---- Whitney numbers and symmetric functions -------------------------------

using BigMatrix = std::vector<std::vector<BigInt>>;

struct WhitneyTables {
  BigMatrix V;  // second kind
  BigMatrix v;  // first kind
  std::vector<BigInt> a;  // a_1..a_n
};
// family: boolean, partition (L_i = Pi_{i+1}), signed-partition, dowling (with m)
WhitneyTables whitney_tables(const std::string& family, int n, int m = 2);
bool whitney_inverse_check(const WhitneyTables& W);

BigMatrix multiply(const BigMatrix& A, const BigMatrix& B);
bool is_identity(const BigMatrix& A);
BigInt complete_h(int k, const std::vector<BigInt>& xs);
BigInt elementary_e(int k, const std::vector<BigInt>& xs);

struct SymMatrixResult {
  bool ok = false;
  BigMatrix A, B;
};
// A = [h_{i-j}(a_1..a_{j+1})], B = [(-1)^{i-j} e_{i-j}(a_1..a_i)], 0 <= i,j < size
SymMatrixResult sym_matrix_inverse_check(const std::vector<BigInt>& a, int size);

struct SupersolvableResult {
  bool ok = false;
  std::vector<BigInt> a;
  IntPolynomial product, chi;
};
SupersolvableResult supersolvable_factorization_check(const GradedPoset& L, const std::vector<Element>& chain);

// ---- reproduction ---------------------------------------------------------

struct ReproRow {
  std::string key;    // "Prop octa"
  std::string claim;  // "[x^13]"
  std::string value;  // computed value
  Verdict verdict = Verdict::inconclusive;
  std::string note;
  std::string line() const;  // "Prop octa: [x^13] = −123704 ✓"
};

struct ReproOptions {
  std::optional<std::size_t> order;  // caps every positivity scan
  int jobs = 1;
  std::uint64_t budget = kDefaultWordBudget;
};
std::vector<ReproRow> reproduce_paper(const ReproOptions& o = {});

}  // namespace upho
