#ifndef RMGEO_GEODESIC_HPP
#define RMGEO_GEODESIC_HPP

#include <cstddef>
#include <string>

#include "rmgeo/exact.hpp"
#include "rmgeo/slope.hpp"

namespace rmgeo {

/// A point of X named by its two eigenlines; the slopes are always distinct.
class GeodesicPoint {
 public:
  GeodesicPoint(Slope s_x, Slope s_y);  // equal slopes -> degenerate-point

  const Slope& s_x() const { return s_x_; }
  const Slope& s_y() const { return s_y_; }

  friend bool operator==(const GeodesicPoint&, const GeodesicPoint&) = default;

 private:
  Slope s_x_, s_y_;
};

/// 2x2 matrix with entries in Q or in one field Q(sqrt(d)).
struct NumMatrix2 {
  Number a, b, c, d;
};

/// Eigenlines of g h0 g^-1 are the columns of g.
GeodesicPoint point_from_conjugator(const NumMatrix2& g);

/// The homography action of GL2(Z) on both slopes.
GeodesicPoint act(const IntMatrix2& g, const GeodesicPoint& p);

struct BMTClass {
  enum class Kind { split_torus_conj, rm_torus, borel, full_gl2 };
  Kind kind = Kind::full_gl2;
  IntMatrix2 conjugator{};   // split_torus_conj: integral columns spanning the two lines
  BigInt d;                  // rm_torus: squarefree radicand
  std::size_t rational_slope = 0;  // borel: 0 for s_x, 1 for s_y
};

struct MTClass {
  enum class Kind { split_torus, rm_torus, full_gl2 };
  Kind kind;
  BigInt d;  // rm_torus only

  friend bool operator==(const MTClass&, const MTClass&) = default;
};

enum class DynamicalType { non_closed, closed_rm, closed_cuspidal };

BMTClass classify_bmt(const GeodesicPoint& p);
MTClass mt_of(const BMTClass& bmt);
MTClass classify_mt(const GeodesicPoint& p);
DynamicalType dynamical_type(const MTClass& mt);
DynamicalType dynamical_type(const GeodesicPoint& p);

/// Number of RM geodesics of discriminant D: h+ when oriented, h otherwise.
std::size_t rm_point_count(const BigInt& D, bool oriented);

std::string to_string(BMTClass::Kind k);
std::string to_string(MTClass::Kind k);
std::string to_string(DynamicalType t);

}  // namespace rmgeo

#endif  // RMGEO_GEODESIC_HPP
