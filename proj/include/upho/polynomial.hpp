#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace upho {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& v);

// exact integer polynomial, coeffs[k] = coefficient of x^k, normalized
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> c);
  explicit IntPolynomial(std::vector<BigInt> c);
  static IntPolynomial monomial(const BigInt& c, std::size_t deg);
  static IntPolynomial constant(const BigInt& c) { return monomial(c, 0); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(unsigned e) const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // "1 - 6x + 12x^2"
  std::string str() const;
  // decimal strings, index = degree
  std::vector<std::string> decimal_coeffs() const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// product of linear factors (1 - a_i x)
IntPolynomial linear_product(const std::vector<BigInt>& a);
IntPolynomial linear_product(std::initializer_list<long long> a);

}  // namespace upho
