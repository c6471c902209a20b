#include <random>

#include "doctest.h"
#include "rmgeo/geodesic.hpp"
#include "rmgeo/qforms.hpp"

using namespace rmgeo;

namespace {

Number num(const char* s) { return parse_number(s); }
Slope sl(const char* s) { return parse_slope(s); }
GeodesicPoint pt(const char* x, const char* y) { return GeodesicPoint(sl(x), sl(y)); }

struct Gen {
  std::mt19937_64 rng{1009};
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Slope slope() {
    switch (range(0, 5)) {
      case 0: return Slope::infinity();
      case 1:
      case 2: {
        BigRational q(range(-20, 20), range(1, 9));
        q.canonicalize();
        return Slope::rational(q);
      }
      case 3: return Slope::generic(std::string(1, static_cast<char>('a' + range(0, 3))));
      default: {
        static const long ds[] = {2, 3, 5, 7};
        BigRational a(range(-9, 9), range(1, 5)), b(range(1, 6) * (range(0, 1) ? 1 : -1), range(1, 5));
        a.canonicalize();
        b.canonicalize();
        return Slope::quadratic(QuadElem(ds[range(0, 3)], a, b));
      }
    }
  }
  GeodesicPoint point() {
    for (;;) {
      Slope x = slope();
      // Bias toward conjugate pairs so the RM branch is exercised.
      Slope y = (x.kind() == Slope::Kind::quadratic && range(0, 1)) ? Slope::quadratic(galois_conjugate(x.quad())) : slope();
      if (!(x == y)) return GeodesicPoint(x, y);
    }
  }
  IntMatrix2 gl2z() {
    for (;;) {
      IntMatrix2 g{1, 0, 0, 1};
      for (int i = 0, n = static_cast<int>(range(1, 6)); i < n; ++i) {
        BigInt k(range(-3, 3));
        switch (range(0, 3)) {
          case 0: g = g * IntMatrix2{1, k, 0, 1}; break;
          case 1: g = g * IntMatrix2{1, 0, k, 1}; break;
          case 2: g = g * IntMatrix2{0, 1, 1, 0}; break;
          default: g = g * IntMatrix2{-1, 0, 0, 1}; break;
        }
      }
      if (abs(g.a) <= 10 && abs(g.b) <= 10 && abs(g.c) <= 10 && abs(g.d) <= 10) return g;
    }
  }
};

}  // namespace

TEST_CASE("point_from_conjugator examples") {
  GeodesicPoint id = point_from_conjugator({1, 0, 0, 1});
  CHECK(id.s_x() == Slope::rational(0));
  CHECK(id.s_y() == Slope::infinity());

  GeodesicPoint hu = point_from_conjugator({1, num("sqrt(2)"), 0, 1});
  CHECK(hu.s_x() == Slope::rational(0));
  CHECK(to_string(hu.s_y()) == "sqrt(2)/2");

  GeodesicPoint rm = point_from_conjugator({1, 1, num("sqrt(5)"), num("-sqrt(5)")});
  CHECK(to_string(rm.s_x()) == "sqrt(5)");
  CHECK(to_string(rm.s_y()) == "-sqrt(5)");

  try {
    point_from_conjugator({1, 2, 2, 4});
    FAIL("singular accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_invertible);
  }
  try {
    point_from_conjugator({1, num("sqrt(2)"), num("sqrt(2)"), 2});
    FAIL("singular accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_invertible);
  }
  try {
    GeodesicPoint(sl("sqrt(3)"), sl("sqrt(12)/2"));
    FAIL("equal slopes accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_point);
  }
}

TEST_CASE("conjugator modulo the diagonal centralizer") {
  const NumMatrix2 gs[] = {{1, 0, 0, 1}, {1, num("sqrt(2)"), 0, 1}, {1, 1, num("sqrt(5)"), num("-sqrt(5)")},
                           {num("1/2"), 3, num("(1+sqrt(3))/2"), 1}, {0, 1, 1, num("7/3")}};
  const Number lambdas[] = {num("2"), num("-1/3"), num("sqrt(3)"), num("1+sqrt(3)")};
  for (const auto& g : gs)
    for (const auto& l : lambdas)
      for (const auto& m : lambdas) {
        try {
          NumMatrix2 gd{g.a * l, g.b * m, g.c * l, g.d * m};
          CHECK(point_from_conjugator(gd) == point_from_conjugator(g));
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::incompatible_fields);  // mixing sqrt(3) with sqrt(2) or sqrt(5)
        }
      }
}

TEST_CASE("worked classifications") {
  auto identity = point_from_conjugator({1, 0, 0, 1});
  CHECK(classify_bmt(identity).kind == BMTClass::Kind::split_torus_conj);
  CHECK(classify_mt(identity).kind == MTClass::Kind::split_torus);
  CHECK(dynamical_type(identity) == DynamicalType::closed_cuspidal);

  auto borel = point_from_conjugator({1, num("sqrt(2)"), 0, 1});
  BMTClass b = classify_bmt(borel);
  CHECK(b.kind == BMTClass::Kind::borel);
  CHECK(b.rational_slope == 0);
  CHECK(classify_mt(borel).kind == MTClass::Kind::full_gl2);

  auto split = point_from_conjugator({1, num("1/2"), 0, 1});
  BMTClass s = classify_bmt(split);
  CHECK(s.kind == BMTClass::Kind::split_torus_conj);
  CHECK(s.conjugator == IntMatrix2{1, 1, 0, 2});

  auto rm = pt("sqrt(5)", "-sqrt(5)");
  CHECK(classify_bmt(rm).kind == BMTClass::Kind::rm_torus);
  CHECK(classify_mt(rm) == MTClass{MTClass::Kind::rm_torus, 5});
  CHECK(dynamical_type(rm) == DynamicalType::closed_rm);

  auto e = GeodesicPoint(Slope::rational(0), Slope::generic("e"));
  CHECK(classify_bmt(e).kind == BMTClass::Kind::borel);
  CHECK(classify_mt(e).kind == MTClass::Kind::full_gl2);
  CHECK(dynamical_type(GeodesicPoint(Slope::generic("e"), Slope::generic("-e"))) == DynamicalType::non_closed);

  CHECK(classify_mt(pt("sqrt(2)", "sqrt(3)")).kind == MTClass::Kind::full_gl2);
  CHECK(classify_mt(pt("sqrt(2)", "1+sqrt(2)")).kind == MTClass::Kind::full_gl2);
}

TEST_CASE("exactly one branch fires and MT is conjugation invariant") {
  Gen gen;
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    GeodesicPoint p = gen.point();
    const Slope &x = p.s_x(), &y = p.s_y();
    bool split = x.is_rational_point() && y.is_rational_point();
    bool borel = x.is_rational_point() != y.is_rational_point();
    bool rm = x.kind() == Slope::Kind::quadratic && y.kind() == Slope::Kind::quadratic &&
              minpoly(x.number()) == minpoly(y.number());
    bool full = !split && !borel && !rm;
    CHECK(split + borel + rm + full == 1);
    BMTClass b = classify_bmt(p);
    BMTClass::Kind expect = split ? BMTClass::Kind::split_torus_conj
                            : borel ? BMTClass::Kind::borel
                            : rm    ? BMTClass::Kind::rm_torus
                                    : BMTClass::Kind::full_gl2;
    CHECK(b.kind == expect);
    ++counts[static_cast<int>(b.kind)];
    if (split) {
      CHECK(b.conjugator.det() != 0);
      CHECK(point_from_conjugator({b.conjugator.a, b.conjugator.b, b.conjugator.c, b.conjugator.d}) == p);
    }
    if (x.kind() == Slope::Kind::quadratic) {
      IntPoly m = minpoly(x.number());
      CHECK(m.coeff(1) * m.coeff(1) - 4 * m.coeff(0) * m.coeff(2) > 0);
    }
    MTClass mt = classify_mt(p);
    for (int k = 0; k < 50; ++k) CHECK(classify_mt(act(gen.gl2z(), p)) == mt);
  }
  for (int c : counts) CHECK(c > 0);
}

TEST_CASE("rm_point_count") {
  CHECK(rm_point_count(5, true) == 1);
  CHECK(rm_point_count(12, true) == 2);
  CHECK(rm_point_count(12, false) == 1);
  CHECK(rm_point_count(40, false) == 2);
  CHECK_THROWS_AS(rm_point_count(16, true), Error);
}

TEST_CASE("class geodesics classify as RM over the field of D") {
  for (long D = 5; D <= 100; ++D) {
    if (is_perfect_square(BigInt(D)) || (D % 4 != 0 && D % 4 != 1)) continue;
    const BigInt core = squarefree_split(D).core;
    for (const auto& cycle : proper_classes(D)) {
      ClosedGeodesic g = class_to_geodesic(D, cycle.front());
      GeodesicPoint p(Slope::quadratic(g.slope_pair[0]), Slope::quadratic(g.slope_pair[1]));
      CHECK(classify_mt(p) == MTClass{MTClass::Kind::rm_torus, core});
    }
  }
}
