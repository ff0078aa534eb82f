#include "upho/powerseries.hpp"

#include <algorithm>

#include "upho/error.hpp"

namespace upho {

IntPowerSeries::IntPowerSeries(const IntPolynomial& p, std::size_t order) : c_(order + 1) {
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) c_[k] = p.coeffs()[k];
}

IntPowerSeries IntPowerSeries::operator*(const IntPowerSeries& o) const {
  std::size_t N = std::min(order(), o.order());
  IntPowerSeries r(N);
  for (std::size_t i = 0; i <= N; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

IntPowerSeries IntPowerSeries::operator+(const IntPowerSeries& o) const {
  std::size_t N = std::min(order(), o.order());
  IntPowerSeries r(N);
  for (std::size_t i = 0; i <= N; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

std::vector<std::string> IntPowerSeries::decimal_coeffs() const {
  std::vector<std::string> out;
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

IntPowerSeries series_inverse(const IntPolynomial& p, std::size_t order) {
  const BigInt p0 = p.coeff(0);
  if (p0 != 1 && p0 != -1)
    throw Error(ErrorCode::NonUnitConstantTerm, "constant term " + p0.str() + " is not a unit");
  const auto& c = p.coeffs();
  IntPowerSeries q(order);
  q[0] = p0;  // 1/p0 = p0 for units
  for (std::size_t n = 1; n <= order; ++n) {
    BigInt s = 0;
    std::size_t kmax = std::min(n, c.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k)
      if (c[k] != 0) s += c[k] * q[n - k];
    q[n] = -p0 * s;
  }
  return q;
}

IntPolynomial substitute_power(const IntPolynomial& p, unsigned m) {
  if (m == 0) throw Error(ErrorCode::BadInput, "substitute_power needs m >= 1");
  if (p.is_zero()) return p;
  std::vector<BigInt> r(static_cast<std::size_t>(p.degree()) * m + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) r[k * m] = p.coeffs()[k];
  return IntPolynomial(std::move(r));
}

IntPowerSeries series_div(const IntPolynomial& num, const IntPolynomial& den, std::size_t order) {
  return IntPowerSeries(num, order) * series_inverse(den, order);
}

std::optional<std::size_t> first_negative_coefficient(const IntPowerSeries& s) {
  for (std::size_t k = 0; k <= s.order(); ++k)
    if (s[k] < 0) return k;
  return std::nullopt;
}

std::size_t default_scan_order(const IntPolynomial& chi) {
  long d = std::max(0L, chi.degree());
  return std::max<std::size_t>(13, static_cast<std::size_t>(4 * d + 16));
}

}  // namespace upho
