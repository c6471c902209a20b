#ifndef RMGEO_EXACT_HPP
#define RMGEO_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rmgeo/error.hpp"
#include "rmgeo/poly.hpp"

namespace rmgeo {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
inline Sign sign(const BigInt& x) { return sign_of(sgn(x)); }
inline Sign sign(const BigRational& x) { return sign_of(sgn(x)); }

BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor(const BigRational& q);

// g = gcd(a, b) >= 0 with g = x*a + y*b.
struct ExtGcd {
  BigInt g, x, y;
};
ExtGcd extended_gcd(const BigInt& a, const BigInt& b);

// n = core * root^2 with core squarefree (sign carried by core). n != 0.
struct SquarefreeSplit {
  BigInt core;
  BigInt root;
};
SquarefreeSplit squarefree_split(const BigInt& n);
bool is_squarefree(const BigInt& n);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), d squarefree > 1.
/// b == 0 is allowed so that the type is closed under field operations; such
/// elements compare exactly like the rational a.
class QuadElem {
 public:
  QuadElem(BigInt d, BigRational a, BigRational b);

  const BigInt& d() const { return d_; }
  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  BigInt d_;
  BigRational a_;
  BigRational b_;
};

Sign quad_sign(const QuadElem& q);
int compare(const QuadElem& x, const QuadElem& y);

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);
QuadElem operator+(const QuadElem& x, const BigRational& r);
QuadElem operator*(const QuadElem& x, const BigRational& r);
QuadElem invert(const QuadElem& q);
QuadElem galois_conjugate(const QuadElem& q);
BigRational norm(const QuadElem& q);
BigRational trace(const QuadElem& q);

/// Exact scalar that is either rational or irrational in some Q(sqrt(d)).
/// Irrational-free quadratic values always collapse to the rational variant.
class Number {
 public:
  Number() : value_(BigRational(0)) {}
  Number(long v) : value_(BigRational(v)) {}  // NOLINT
  Number(BigInt v) : value_(BigRational(std::move(v))) {}  // NOLINT
  Number(BigRational v) : value_(std::move(v)) {}  // NOLINT
  Number(const QuadElem& q);  // NOLINT

  bool is_rational() const { return std::holds_alternative<BigRational>(value_); }
  const BigRational& rational() const { return std::get<BigRational>(value_); }
  const QuadElem& quad() const { return std::get<QuadElem>(value_); }
  std::optional<BigInt> radicand() const;

  // Lift to Q(sqrt(d)); the value must be rational or already live there.
  QuadElem in_field(const BigInt& d) const;

  friend bool operator==(const Number& x, const Number& y) { return x.value_ == y.value_; }

 private:
  std::variant<BigRational, QuadElem> value_;
};

Number operator+(const Number& x, const Number& y);
Number operator-(const Number& x, const Number& y);
Number operator-(const Number& x);
Number operator*(const Number& x, const Number& y);
Number operator/(const Number& x, const Number& y);
Sign sign(const Number& x);
int compare(const Number& x, const Number& y);
Number galois_conjugate(const Number& x);

/// Builds a + b*sqrt(d_raw), pulling square factors out of the radicand.
Number normalize_quad(const BigInt& d_raw, const BigRational& a, const BigRational& b);

/// Primitive integer polynomial (positive leading coefficient) vanishing at x:
/// linear for rationals, the quadratic with roots x and its conjugate otherwise.
IntPoly minpoly(const Number& x);

// Text syntax shared with the CLI: "p/q", "sqrt(D)", "(1+2*sqrt(5))/3", ...
std::string to_string(const BigRational& q);
std::string to_string(const QuadElem& q);
std::string to_string(const Number& x);
Number parse_number(std::string_view text);

// Decimal rendering with `digits` significant digits (MPFR backed).
std::string to_decimal(const Number& x, int digits);
std::string log_decimal(const Number& x, int digits);
double to_double(const Number& x);

}  // namespace rmgeo

#endif  // RMGEO_EXACT_HPP
