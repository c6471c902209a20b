#include "rmgeo/interval.hpp"

#include <algorithm>

namespace rmgeo {

namespace {

BigInt shift_floor(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

BigInt shift_ceil(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

BigInt shift_left(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

Fix FixArith::from_int(const BigInt& n) const {
  BigInt v = shift_left(n, K_);
  return {v, v};
}

Fix FixArith::from_rational(const BigRational& q) const { return hull(q, q); }

Fix FixArith::hull(const BigRational& lo, const BigRational& hi) const {
  return {floor_div(shift_left(lo.get_num(), K_), lo.get_den()), ceil_div(shift_left(hi.get_num(), K_), hi.get_den())};
}

Fix FixArith::mul(const Fix& x, const Fix& y) const {
  const BigInt p[] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {shift_floor(*mn, K_), shift_ceil(*mx, K_)};
}

Fix FixArith::mul_int(const Fix& x, const BigInt& n) const {
  return n >= 0 ? Fix{x.lo * n, x.hi * n} : Fix{x.hi * n, x.lo * n};
}

Fix FixArith::div(const Fix& x, const Fix& y) const {
  if (y.contains_zero()) throw Error(ErrorKind::division_by_zero, "interval divisor contains zero");
  BigInt lo, hi;
  bool first = true;
  for (const BigInt* a : {&x.lo, &x.hi})
    for (const BigInt* b : {&y.lo, &y.hi}) {
      const BigInt num = shift_left(*a, K_);
      BigInt f = floor_div(num, *b), c = ceil_div(num, *b);
      if (first || f < lo) lo = f;
      if (first || c > hi) hi = c;
      first = false;
    }
  return {lo, hi};
}

Fix FixArith::sqrt(const Fix& x) const {
  if (!x.positive()) throw Error(ErrorKind::invalid_input, "interval square root needs a positive argument");
  const BigInt lo2 = shift_left(x.lo, K_), hi2 = shift_left(x.hi, K_);
  BigInt hi = isqrt(hi2);
  if (hi * hi < hi2) hi += 1;
  return {isqrt(lo2), hi};
}

BigRational FixArith::lower(const Fix& x) const {
  BigRational q(x.lo, shift_left(BigInt(1), K_));
  q.canonicalize();
  return q;
}

BigRational FixArith::upper(const Fix& x) const {
  BigRational q(x.hi, shift_left(BigInt(1), K_));
  q.canonicalize();
  return q;
}

std::string FixArith::mid_decimal(const Fix& x, int digits) const {
  return to_decimal(Number((lower(x) + upper(x)) / 2), digits);
}

CFix cadd(const FixArith& A, const CFix& x, const CFix& y) { return {A.add(x.re, y.re), A.add(x.im, y.im)}; }

CFix csub(const FixArith& A, const CFix& x, const CFix& y) { return {A.sub(x.re, y.re), A.sub(x.im, y.im)}; }

CFix cmul(const FixArith& A, const CFix& x, const CFix& y) {
  return {A.sub(A.mul(x.re, y.re), A.mul(x.im, y.im)), A.add(A.mul(x.re, y.im), A.mul(x.im, y.re))};
}

CFix cmul_int(const FixArith& A, const CFix& x, const BigInt& n) { return {A.mul_int(x.re, n), A.mul_int(x.im, n)}; }

CFix conj(const FixArith& A, const CFix& x) { return {x.re, A.neg(x.im)}; }

}  // namespace rmgeo
