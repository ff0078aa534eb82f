#pragma once
#include <optional>
#include <string>
#include <vector>

#include "upho/polynomial.hpp"

namespace upho {

// coefficients 0..N of a power series; the order is part of the value
class IntPowerSeries {
 public:
  explicit IntPowerSeries(std::size_t order) : c_(order + 1) {}
  IntPowerSeries(const IntPolynomial& p, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const BigInt& operator[](std::size_t k) const { return c_.at(k); }
  BigInt& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPowerSeries operator*(const IntPowerSeries& o) const;  // min order of the two
  IntPowerSeries operator+(const IntPowerSeries& o) const;
  bool operator==(const IntPowerSeries& o) const { return c_ == o.c_; }
  std::vector<std::string> decimal_coeffs() const;

 private:
  std::vector<BigInt> c_;
};

IntPowerSeries series_inverse(const IntPolynomial& p, std::size_t order);
IntPolynomial substitute_power(const IntPolynomial& p, unsigned m);
IntPowerSeries series_div(const IntPolynomial& num, const IntPolynomial& den, std::size_t order);
std::optional<std::size_t> first_negative_coefficient(const IntPowerSeries& s);

// default positivity scan order for a given chi*
std::size_t default_scan_order(const IntPolynomial& chi);

}  // namespace upho
