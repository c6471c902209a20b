#include "rmgeo/geodesic.hpp"

#include "rmgeo/qforms.hpp"

namespace rmgeo {

namespace {

Slope column_slope(const Number& v1, const Number& v2) {
  if (sign(v1) == Sign::zero) return Slope::infinity();
  return Slope::from_number(v2 / v1);
}

// Primitive integer vector spanning the line of a rational slope.
std::pair<BigInt, BigInt> integral_column(const Slope& s) {
  if (s.kind() == Slope::Kind::infinity) return {0, 1};
  const BigRational& q = s.rational_value();
  return {q.get_den(), q.get_num()};
}

}  // namespace

GeodesicPoint::GeodesicPoint(Slope s_x, Slope s_y) : s_x_(std::move(s_x)), s_y_(std::move(s_y)) {
  if (s_x_ == s_y_) throw Error(ErrorKind::degenerate_point, "both lines have slope " + to_string(s_x_));
}

GeodesicPoint point_from_conjugator(const NumMatrix2& g) {
  if (sign(g.a * g.d - g.b * g.c) == Sign::zero) throw Error(ErrorKind::not_invertible, "conjugator is singular");
  return GeodesicPoint(column_slope(g.a, g.c), column_slope(g.b, g.d));
}

GeodesicPoint act(const IntMatrix2& g, const GeodesicPoint& p) {
  return GeodesicPoint(mobius(g, p.s_x()), mobius(g, p.s_y()));
}

BMTClass classify_bmt(const GeodesicPoint& p) {
  const Slope& x = p.s_x();
  const Slope& y = p.s_y();
  if (x.is_rational_point() && y.is_rational_point()) {
    BMTClass out;
    out.kind = BMTClass::Kind::split_torus_conj;
    auto [x1, x2] = integral_column(x);
    auto [y1, y2] = integral_column(y);
    out.conjugator = {x1, y1, x2, y2};
    return out;
  }
  if (x.is_rational_point() || y.is_rational_point()) {
    BMTClass out;
    out.kind = BMTClass::Kind::borel;
    out.rational_slope = x.is_rational_point() ? 0 : 1;
    return out;
  }
  if (x.kind() == Slope::Kind::quadratic && y.kind() == Slope::Kind::quadratic && x.quad().d() == y.quad().d() &&
      galois_conjugate(x.quad()) == y.quad()) {
    BMTClass out;
    out.kind = BMTClass::Kind::rm_torus;
    out.d = x.quad().d();
    return out;
  }
  return BMTClass{};
}

MTClass mt_of(const BMTClass& bmt) {
  switch (bmt.kind) {
    case BMTClass::Kind::split_torus_conj: return {MTClass::Kind::split_torus, 0};
    case BMTClass::Kind::rm_torus: return {MTClass::Kind::rm_torus, bmt.d};
    default: return {MTClass::Kind::full_gl2, 0};  // a Borel is not reductive; its envelope is GL2
  }
}

MTClass classify_mt(const GeodesicPoint& p) { return mt_of(classify_bmt(p)); }

DynamicalType dynamical_type(const MTClass& mt) {
  switch (mt.kind) {
    case MTClass::Kind::split_torus: return DynamicalType::closed_cuspidal;
    case MTClass::Kind::rm_torus: return DynamicalType::closed_rm;
    default: return DynamicalType::non_closed;
  }
}

DynamicalType dynamical_type(const GeodesicPoint& p) { return dynamical_type(classify_mt(p)); }

std::size_t rm_point_count(const BigInt& D, bool oriented) {
  return oriented ? proper_classes(D).size() : wide_class_group(D).h;
}

std::string to_string(BMTClass::Kind k) {
  switch (k) {
    case BMTClass::Kind::split_torus_conj: return "split_torus_conj";
    case BMTClass::Kind::rm_torus: return "rm_torus";
    case BMTClass::Kind::borel: return "borel";
    default: return "full_gl2";
  }
}

std::string to_string(MTClass::Kind k) {
  switch (k) {
    case MTClass::Kind::split_torus: return "split_torus";
    case MTClass::Kind::rm_torus: return "rm_torus";
    default: return "full_gl2";
  }
}

std::string to_string(DynamicalType t) {
  switch (t) {
    case DynamicalType::closed_cuspidal: return "closed_cuspidal";
    case DynamicalType::closed_rm: return "closed_rm";
    default: return "non_closed";
  }
}

}  // namespace rmgeo
