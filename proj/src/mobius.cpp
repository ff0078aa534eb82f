#include "upho/mobius.hpp"

#include "upho/error.hpp"

namespace upho {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::SizeGuard, "Mobius value overflows 64 bits");
  return r;
}

std::vector<std::int64_t> compute_row(const GradedPoset& P, Element x) {
  const auto& R = P.order();
  const std::size_t n = P.size();
  std::vector<std::int64_t> mu(n, 0);
  const auto* upx = R.up_row(x);
  Bitset tmp(n);
  // positions above x in rank order
  const std::size_t start = R.pos(x);
  mu[x] = 1;
  for (std::size_t p = start + 1; p < n; ++p) {
    if (!((upx[p >> 6] >> (p & 63)) & 1u)) continue;
    Element z = R.elem(p);
    std::copy(upx, upx + R.words(), tmp.data());
    kernels::active().and_into(tmp.data(), R.down_row(z), R.words());
    std::int64_t s = 0;
    tmp.for_each([&](std::size_t q) {
      if (q != p) s = checked_add(s, mu[R.elem(q)]);
    });
    mu[z] = -s;
  }
  return mu;
}

}  // namespace

const std::vector<std::int64_t>& MobiusTable::row(Element x) {
  std::lock_guard<std::mutex> g(mu_);
  auto it = rows_.find(x);
  if (it == rows_.end()) it = rows_.emplace(x, compute_row(P_, x)).first;
  return it->second;
}

std::int64_t MobiusTable::operator()(Element x, Element y) {
  if (!P_.leq(x, y))
    throw Error(ErrorCode::NotComparable, P_.label(x) + " is not below " + P_.label(y));
  return row(x)[y];
}

std::int64_t mobius(const GradedPoset& P, Element x, Element y) {
  MobiusTable t(P);
  return t(x, y);
}

IntPolynomial rank_gen_poly(const GradedPoset& P) {
  std::vector<BigInt> c(static_cast<std::size_t>(P.height()) + 1);
  for (int r = 0; r <= P.height(); ++r) c[r] = P.level_size(r);
  return IntPolynomial(std::move(c));
}

IntPolynomial reciprocal_char_poly(const GradedPoset& P) {
  auto b = P.bottom();
  if (!b) throw Error(ErrorCode::NoMinimum, "reciprocal characteristic polynomial needs a 0");
  MobiusTable t(P);
  const auto& mu = t.row(*b);
  std::vector<BigInt> c(static_cast<std::size_t>(P.height()) + 1);
  for (Element z = 0; z < P.size(); ++z) c[P.rank(z)] += mu[z];
  return IntPolynomial(std::move(c));
}

}  // namespace upho
