#include "upho/polynomial.hpp"

#include <sstream>

namespace upho {

std::string to_string(const BigInt& v) { return v.str(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> c) {
  for (long long v : c) c_.emplace_back(v);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { normalize(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t deg) {
  std::vector<BigInt> v(deg + 1);
  v[deg] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> r(c_);
  for (auto& v : r) v = -v;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r{1}, b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigInt& v = c_[k];
    if (v == 0) continue;
    BigInt a = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << a.str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::decimal_coeffs() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& v : c_) out.push_back(v.str());
  return out;
}

IntPolynomial linear_product(const std::vector<BigInt>& a) {
  IntPolynomial r{1};
  for (const auto& ai : a) r = r * IntPolynomial(std::vector<BigInt>{BigInt(1), BigInt(-ai)});
  return r;
}

IntPolynomial linear_product(std::initializer_list<long long> a) {
  std::vector<BigInt> v;
  for (long long x : a) v.emplace_back(x);
  return linear_product(v);
}

}  // namespace upho
