#pragma once
#include <string>
#include <vector>

namespace upho {

struct CoxeterType {
  enum class Family { A, I2 };
  Family family = Family::A;
  int param = 1;  // n for A_n, m for I_2(m)

  int rank() const { return family == Family::A ? param : 2; }
  std::string name() const;
  // "A2", "S3", "I2(4)", "I2_4"
  static CoxeterType parse(const std::string& s);
  static CoxeterType A(int n) { return {Family::A, n}; }
  static CoxeterType I2(int m) { return {Family::I2, m}; }
};

// Finite Coxeter group with a full multiplication table. Type A_n acts on
// {1..n+1} with (uv)(i) = u(v(i)); I_2(m) uses rotation/flip pairs.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterType t);

  const CoxeterType& type() const { return type_; }
  int order() const { return static_cast<int>(len_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
  int inverse(int a) const { return inv_[a]; }
  const std::vector<int>& simple() const { return simple_; }
  // ordered by (length, lex-least reduced word)
  const std::vector<int>& reflections() const { return refl_; }
  int length(int w) const { return len_[w]; }
  int abs_length(int w) const { return abslen_[w]; }
  int coxeter_element() const;
  // lex-least reduced word, letters a,b,c,...; "" for the identity
  const std::string& reduced_word(int w) const { return word_[w]; }
  // type A: one-line ("213"); dihedral: reduced word or "e"
  std::string one_line(int w) const;
  // type A: cycle notation ("(1,2,3)"); dihedral: reduced word or "e"
  std::string cycles(int w) const;
  bool leq_absolute(int u, int w) const {
    return abslen_[u] + abslen_[mul(inverse(u), w)] == abslen_[w];
  }
  // m(s_i, s_j)
  int coxeter_m(int i, int j) const;

 private:
  CoxeterType type_;
  std::vector<std::vector<int>> rep_;
  std::vector<int> table_, inv_, simple_, refl_, len_, abslen_;
  std::vector<std::string> word_;
};

}  // namespace upho
