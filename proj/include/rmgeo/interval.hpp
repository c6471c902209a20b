#ifndef RMGEO_INTERVAL_HPP
#define RMGEO_INTERVAL_HPP

#include <string>

#include "rmgeo/exact.hpp"

namespace rmgeo {

/// Closed interval [lo, hi] * 2^-K with integer endpoints. All operations
/// round outward, so the true value always stays inside.
struct Fix {
  BigInt lo, hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
  BigInt width() const { return hi - lo; }
};

class FixArith {
 public:
  explicit FixArith(unsigned long bits) : K_(bits) {}

  unsigned long bits() const { return K_; }

  Fix from_int(const BigInt& n) const;
  Fix from_rational(const BigRational& q) const;
  Fix hull(const BigRational& lo, const BigRational& hi) const;

  Fix add(const Fix& x, const Fix& y) const { return {x.lo + y.lo, x.hi + y.hi}; }
  Fix sub(const Fix& x, const Fix& y) const { return {x.lo - y.hi, x.hi - y.lo}; }
  Fix neg(const Fix& x) const { return {-x.hi, -x.lo}; }
  Fix mul(const Fix& x, const Fix& y) const;
  Fix mul_int(const Fix& x, const BigInt& n) const;
  Fix div(const Fix& x, const Fix& y) const;  // y must exclude zero
  Fix sqrt(const Fix& x) const;               // x must be positive

  BigRational lower(const Fix& x) const;
  BigRational upper(const Fix& x) const;
  /// Midpoint as a decimal string.
  std::string mid_decimal(const Fix& x, int digits) const;

 private:
  unsigned long K_;
};

struct CFix {
  Fix re, im;
};

CFix cadd(const FixArith& A, const CFix& x, const CFix& y);
CFix csub(const FixArith& A, const CFix& x, const CFix& y);
CFix cmul(const FixArith& A, const CFix& x, const CFix& y);
CFix cmul_int(const FixArith& A, const CFix& x, const BigInt& n);
CFix conj(const FixArith& A, const CFix& x);

}  // namespace rmgeo

#endif  // RMGEO_INTERVAL_HPP
