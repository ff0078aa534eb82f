#include "upho/field.hpp"

#include "upho/error.hpp"

namespace upho {

FiniteField::FiniteField(unsigned q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw Error(ErrorCode::UnsupportedFieldOrder, "q = " + std::to_string(q) + " (supported: 2,3,4,5)");
  add_.assign(q * q, 0);
  neg_.assign(q, 0);
  log_.assign(q, 0);
  exp_.assign(q - 1, 0);
  if (q == 4) {
    // F_2[a]/(a^2+a+1): 0,1,a=2,a+1=3; addition is xor
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) add_[a * 4 + b] = static_cast<std::uint8_t>(a ^ b);
    for (unsigned a = 0; a < 4; ++a) neg_[a] = static_cast<std::uint8_t>(a);
    exp_ = {1, 2, 3};
  } else {
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) add_[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
      neg_[a] = static_cast<std::uint8_t>((q - a) % q);
    }
    // 2 generates the units mod 3 and mod 5; mod 2 the group is trivial
    unsigned g = q == 2 ? 1 : 2, v = 1;
    for (unsigned i = 0; i + 1 < q; ++i) {
      exp_[i] = static_cast<std::uint8_t>(v);
      v = (v * g) % q;
    }
  }
  for (unsigned i = 0; i + 1 < q; ++i) log_[exp_[i]] = static_cast<std::uint8_t>(i);
}

std::size_t rref(const FiniteField& F, std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::uint8_t s = F.inv(rows[r][c]);
    for (auto& v : rows[r]) v = F.mul(v, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint8_t t = rows[i][c];
      for (std::size_t j = 0; j < m; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return r;
}

}  // namespace upho
