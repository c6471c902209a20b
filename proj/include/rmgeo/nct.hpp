#ifndef RMGEO_NCT_HPP
#define RMGEO_NCT_HPP

#include <optional>
#include <utility>

#include "rmgeo/exact.hpp"
#include "rmgeo/geodesic.hpp"
#include "rmgeo/slope.hpp"

namespace rmgeo {

/// Z^2 with the real line of slope theta.
struct PreLilac {
  Slope theta;
};

bool lilac_iso(const PreLilac& l1, const PreLilac& l2);
/// Morita equivalence of the attached noncommutative tori, decided through
/// the lilac each one determines.
bool morita_equivalent(const Slope& theta1, const Slope& theta2);

/// Z + Z theta ordered as a subgroup of R; (m, n) stands for m + n theta.
struct OrderedK0 {
  Slope theta;  // rational or quadratic
};

using IntPair = std::pair<BigInt, BigInt>;

bool k0_positive(const IntPair& element, const OrderedK0& k0);

/// Some (m, n) with 0 < m + n theta < eps, read off a convergent of theta.
IntPair small_positive_element(const Slope& theta, const BigRational& eps);

/// (m, n) with x = m + n theta when one exists. For rational theta = r/s the
/// solution is not unique; the one with 0 <= n < s is returned.
std::optional<IntPair> pseudolattice_member(const Number& x, const Slope& theta);

/// p and q lie on one leaf: p - q is in Z + Z theta.
bool leaf_equal(const Number& p, const Number& q, const Slope& theta);

struct LevelStructure {
  LevelStructure(BigInt N, IntMatrix2 phi);  // entries reduced mod N

  BigInt N;
  IntMatrix2 phi;
};

/// |GL2(Z/N)| from the product formula.
BigInt count_level_structures(const BigInt& N);
/// |GL2(Z/N)| by running over all N^4 matrices.
BigInt count_level_structures_by_enumeration(unsigned long N);

GeodesicPoint pair_to_geodesic(const Slope& theta1, const Slope& theta2);

}  // namespace rmgeo

#endif  // RMGEO_NCT_HPP
