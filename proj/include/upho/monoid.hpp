#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upho/coxeter.hpp"
#include "upho/poset.hpp"

namespace upho {

using Word = std::vector<int>;

enum class PresentationKind { Custom, RankTwo, Chains, ClassicalBraid, DualBraid, Figure8 };

struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;
  // provenance for named presentations
  PresentationKind kind = PresentationKind::Custom;
  std::vector<int> params;
  std::optional<CoxeterType> coxeter;

  // validates symbols and homogeneity (InhomogeneousRelation)
  static MonoidPresentation make(std::vector<std::string> gens, std::vector<std::pair<Word, Word>> rels);
  // "gens: a b c" / "rel: ab = bc = ca" lines, '#' comments
  static MonoidPresentation parse_text(const std::string& text);
  std::string to_text() const;
  std::string name() const;

  Word parse_word(const std::string& s) const;
  std::string word_str(const Word& w) const;  // "1" for the empty word
};

inline constexpr std::uint64_t kDefaultWordBudget = 2'000'000;
// UPHO_BUDGET (if set and valid) else the default
std::uint64_t word_budget_from_env();

struct MonoidPoset {
  GradedPoset poset;
  std::vector<Word> representative;  // lex-least word per element
  int N = 0;
  MonoidPresentation presentation;
  // class_of[l][code] = element of the length-l word with that base-|gens| code
  std::vector<std::vector<Element>> class_of;

  std::uint64_t code(const Word& w) const;
  Element element_of(const Word& w) const;
};

MonoidPoset enumerate_elements(const MonoidPresentation& P, int N,
                               std::uint64_t budget = kDefaultWordBudget);

struct CancellationVerdict {
  bool ok = true;
  int verified_to_rank = 0;
  // x.b = x.c with b != c
  std::string x, b, c;
};
CancellationVerdict left_cancellative_check(const MonoidPoset& M);

struct JoinVerdict {
  enum class Status { LatticeWithinTruncation, NotLattice, JoinFree };
  Status status = Status::LatticeWithinTruncation;
  std::optional<std::pair<Element, Element>> witness;
  std::vector<Element> minimal_bounds;  // for NotLattice
  std::size_t indeterminate_pairs = 0;  // pairs without an upper bound inside the truncation
  // every pair of elements of rank <= this has its join decided
  int conclusive_rank = 0;
};
JoinVerdict truncated_join_check(const GradedPoset& P);
JoinVerdict right_lcm_check(const MonoidPoset& M);
const char* status_name(JoinVerdict::Status s);

MonoidPresentation classical_braid_presentation(CoxeterType t);
MonoidPresentation dual_braid_presentation(CoxeterType t);
MonoidPresentation rank_two_presentation(int r);
MonoidPresentation chains_presentation(int r, int n);
MonoidPresentation figure8_presentation();
MonoidPresentation free_presentation(int gens);

}  // namespace upho
