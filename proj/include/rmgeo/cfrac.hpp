#ifndef RMGEO_CFRAC_HPP
#define RMGEO_CFRAC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rmgeo/exact.hpp"
#include "rmgeo/slope.hpp"

namespace rmgeo {

/// Eventually periodic simple continued fraction [preperiod; (period)].
/// The period is empty exactly for rationals; otherwise it is primitive and,
/// for expansions built by cf_expand, the lexicographically least rotation.
struct CFExpansion {
  std::vector<BigInt> preperiod;
  std::vector<BigInt> period;

  bool is_rational() const { return period.empty(); }
  /// k-th partial quotient, or nullopt past the end of a finite expansion.
  std::optional<BigInt> quotient(std::size_t k) const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// (P + sqrt(D)) / Q with Q | D - P^2; the loop state of the expansion.
struct QuadSurdState {
  BigInt P, Q, D;

  friend bool operator==(const QuadSurdState&, const QuadSurdState&) = default;
};

QuadSurdState to_surd_state(const QuadElem& x);

/// Raw expansion: minimal preperiod, period in the order it first occurs.
CFExpansion cf_expand_raw(const Number& x);
/// Canonical expansion: the period rotated to its least rotation, with the
/// skipped quotients moved onto the preperiod (the value is unchanged).
CFExpansion cf_expand(const Number& x);

/// Upper bound on the number of distinct reduced surd states for radicand D;
/// every period found for that radicand is at most this long.
BigInt surd_state_bound(const BigInt& D);

BigRational convergent(const CFExpansion& cf, std::size_t k);

/// True iff x and y lie in one GL2(Z)-orbit of P^1(R). Generic slopes are
/// rejected with undecidable-input.
bool gl2z_equivalent(const Slope& x, const Slope& y);

struct PellUnit {
  BigInt x, y;             // x + y sqrt(D)
  int norm;                // x^2 - D y^2
  Number unit;             // the same value over the squarefree radicand
  std::size_t period_length;
};

/// Smallest x + y sqrt(D) > 1 with x^2 - D y^2 = +-1, read off the last
/// convergent of the first period of sqrt(D).
PellUnit pell_fundamental_unit(const BigInt& D);

std::vector<BigInt> least_rotation(const std::vector<BigInt>& word);

/// "[a0; a1, ..., (p1, ..., pm)]".
std::string to_string(const CFExpansion& cf);

}  // namespace rmgeo

#endif  // RMGEO_CFRAC_HPP
