#ifndef RMGEO_POLY_HPP
#define RMGEO_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rmgeo {

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int i) const;
  const mpz_class& lead() const { return coeffs_.back(); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

/// Same layout over Q; used for Euclidean remainders and Sturm chains.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(int i) const;
  const mpq_class& lead() const { return coeffs_.back(); }

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

mpz_class content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);  // also makes the leading coefficient positive
IntPoly derivative(const IntPoly& p);
IntPoly operator*(const IntPoly& p, const IntPoly& q);
IntPoly operator-(const IntPoly& p, const IntPoly& q);
mpq_class eval(const IntPoly& p, const mpq_class& x);
int sign_at(const IntPoly& p, const mpq_class& x);

RatPoly operator*(const RatPoly& p, const RatPoly& q);
RatPoly operator+(const RatPoly& p, const RatPoly& q);
RatPoly operator-(const RatPoly& p, const RatPoly& q);
RatPoly scale(const RatPoly& p, const mpq_class& c);
void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem);
RatPoly gcd(const RatPoly& p, const RatPoly& q);  // monic, or zero
mpq_class eval(const RatPoly& p, const mpq_class& x);
IntPoly to_primitive_int(const RatPoly& p);

bool is_squarefree(const IntPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... (exact, over Q).
std::vector<RatPoly> sturm_chain(const IntPoly& p);
int sign_variations_at(const std::vector<RatPoly>& chain, const mpq_class& x);
int sign_variations_at_infinity(const std::vector<RatPoly>& chain, bool positive);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_roots(const std::vector<RatPoly>& chain, const mpq_class& lo, const mpq_class& hi);
int count_real_roots(const IntPoly& p);

/// Bound B with every complex root satisfying |z| < B (Cauchy).
mpq_class cauchy_root_bound(const IntPoly& p);

/// Rational roots via the rational root theorem.
std::vector<mpq_class> rational_roots(const IntPoly& p);

/// Certifies irreducibility over Q for degree <= 4: no rational root, and for
/// degree 4 no quadratic factor (Kronecker's method over the values at -1, 0, 1).
bool is_irreducible(const IntPoly& p);

std::string to_string(const IntPoly& p, char var = 'x');
IntPoly parse_poly(std::string_view text);

}  // namespace rmgeo

#endif  // RMGEO_POLY_HPP
