#ifndef RMGEO_QFORMS_HPP
#define RMGEO_QFORMS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rmgeo/exact.hpp"
#include "rmgeo/slope.hpp"

namespace rmgeo {

/// a x^2 + b x y + c y^2, primitive, with positive nonsquare discriminant.
struct IndefForm {
  BigInt a, b, c;

  BigInt disc() const { return b * b - 4 * a * c; }

  friend bool operator==(const IndefForm&, const IndefForm&) = default;
  friend bool operator<(const IndefForm& x, const IndefForm& y);
};

/// Throws invalid-discriminant unless D > 0, nonsquare, D = 0 or 1 mod 4.
void validate_discriminant(const BigInt& D);
/// Throws invalid-discriminant / invalid-input for forms outside the domain.
void validate_form(const IndefForm& f);

/// f(alpha x + beta y, gamma x + delta y) for g = [[alpha, beta], [gamma, delta]].
IndefForm act(const IndefForm& f, const IntMatrix2& g);

bool is_reduced(const IndefForm& f);
IndefForm rho(const IndefForm& f);
/// The matrix g with act(f, g) == rho(f).
IntMatrix2 rho_matrix(const IndefForm& f);
IndefForm reduce(const IndefForm& f);

/// Reduced forms sorted by (|a|, a < 0, b). The principal form comes first.
std::vector<IndefForm> enumerate_reduced(const BigInt& D);
/// The rho-cycle through a reduced form, starting at it.
std::vector<IndefForm> rho_cycle(const IndefForm& reduced);
/// Rho-cycles partitioning enumerate_reduced(D); the principal cycle first and
/// each cycle starting at its smallest member.
std::vector<std::vector<IndefForm>> proper_classes(const BigInt& D);

IndefForm principal_form(const BigInt& D);
/// Dirichlet composition followed by reduction (result is a reduced form).
IndefForm compose(const IndefForm& f, const IndefForm& g);

struct FormClassGroup {
  BigInt discriminant;
  std::vector<std::vector<IndefForm>> cycles;
  std::vector<IndefForm> representatives;      // cycles[i].front()
  std::vector<std::vector<std::size_t>> cayley;  // cayley[i][j] = class of rep_i * rep_j
  std::vector<std::size_t> inverse;
  std::vector<BigInt> invariant_factors;         // d1 | d2 | ..., empty when trivial

  std::size_t order() const { return cycles.size(); }
  /// Index of the cycle containing the reduction of f.
  std::size_t class_of(const IndefForm& f) const;
};

FormClassGroup class_group(const BigInt& D);

/// Fundamental unit of the order of discriminant D. Both units are kept as
/// (t + u sqrt(D)) / 2 with integers t, u > 0.
struct OrderUnit {
  BigInt t, u;            // epsilon
  int norm;
  BigInt t_plus, u_plus;  // epsilon^+, the least totally positive unit > 1
  Number epsilon;
  Number epsilon_plus;
};

OrderUnit order_unit(const BigInt& D);

/// Proper automorph of f attached to epsilon^+.
IntMatrix2 automorph(const IndefForm& f, const OrderUnit& unit);

struct WideClassGroup {
  std::size_t h;
  std::vector<std::size_t> wide_of_proper;  // indexed like proper_classes(D)
};

/// Proper classes modulo f ~ -f, i.e. (a, b, c) ~ (-a, b, -c).
WideClassGroup wide_class_group(const BigInt& D);

struct ClosedGeodesic {
  BigInt discriminant;
  std::vector<IndefForm> cycle;
  std::array<QuadElem, 2> slope_pair;  // (-b + sqrt(D)) / 2a, then its conjugate
  Number epsilon_plus;                 // length = 2 log(epsilon_plus)

  std::string length_numeric(int digits) const;
};

ClosedGeodesic class_to_geodesic(const BigInt& D, const IndefForm& f);

std::string to_string(const IndefForm& f);

}  // namespace rmgeo

#endif  // RMGEO_QFORMS_HPP
