#include <random>
#include <set>

#include "doctest.h"
#include "rmgeo/cfrac.hpp"
#include "rmgeo/nct.hpp"

using namespace rmgeo;

namespace {

Slope sl(const char* s) { return parse_slope(s); }
Number num(const char* s) { return parse_number(s); }

// Oracle: search GL2(Z) words of length <= depth in the generators
// T = [[1,1],[0,1]], its inverse and S = [[0,1],[1,0]] for g with g.x = y.
bool homography_search(const Slope& x, const Slope& y, int depth) {
  const IntMatrix2 gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {0, 1, 1, 0}};
  std::vector<Slope> frontier{x};
  std::vector<Slope> seen{x};
  for (int k = 0; k <= depth; ++k) {
    for (const auto& s : frontier)
      if (s == y) return true;
    std::vector<Slope> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        Slope t = mobius(g, s);
        if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
          seen.push_back(t);
          next.push_back(t);
        }
      }
    frontier = std::move(next);
  }
  return false;
}

std::vector<Slope> sample_slopes() {
  std::vector<Slope> out;
  for (const char* t : {"0", "1/2", "7/5", "-3", "inf", "sqrt(2)", "sqrt(2)/2", "1+sqrt(2)", "3-sqrt(2)", "sqrt(8)",
                        "(1+sqrt(5))/2", "sqrt(5)", "2+sqrt(5)", "(sqrt(5)-1)/4", "1/sqrt(5)", "sqrt(3)",
                        "(1+sqrt(3))/2", "2-sqrt(3)", "sqrt(12)", "sqrt(7)", "(3+sqrt(7))/2", "sqrt(6)", "1/sqrt(6)",
                        "(2+sqrt(6))/5", "sqrt(10)", "sqrt(10)/3", "(1+sqrt(13))/2", "sqrt(13)", "sqrt(11)",
                        "-sqrt(11)", "sqrt(2)/3", "(5+sqrt(2))/7", "sqrt(18)", "-1/sqrt(2)", "(1-sqrt(5))/2",
                        "3/sqrt(5)", "sqrt(45)", "4+sqrt(3)", "sqrt(3)/3", "1/(1+sqrt(3))", "5/8", "-11/3",
                        "sqrt(15)", "(1+sqrt(17))/2", "sqrt(17)", "sqrt(19)", "1/sqrt(19)", "sqrt(21)/2",
                        "(1+sqrt(21))/2", "sqrt(23)"})
    out.push_back(sl(t));
  return out;
}

}  // namespace

TEST_CASE("lilac and Morita examples") {
  CHECK(lilac_iso({sl("sqrt(3)")}, {sl("sqrt(3)+1")}));
  CHECK_FALSE(lilac_iso({sl("sqrt(2)")}, {sl("sqrt(3)")}));
  CHECK(lilac_iso({sl("1/2")}, {sl("7/5")}));
  CHECK(morita_equivalent(sl("sqrt(2)"), sl("sqrt(2)/2")));
  CHECK_FALSE(morita_equivalent(sl("sqrt(2)"), sl("1/3")));
  try {
    morita_equivalent(Slope::generic("e"), sl("1"));
    FAIL("generic accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::undecidable_input);
  }
}

TEST_CASE("golden ratio and sqrt(5) are not Morita equivalent") {
  // The discriminant of the primitive minimal polynomial is a GL2(Z)
  // invariant: 5 for the golden ratio, 20 for sqrt(5).
  CHECK_FALSE(morita_equivalent(sl("(1+sqrt(5))/2"), sl("sqrt(5)")));
  CHECK_FALSE(homography_search(sl("(1+sqrt(5))/2"), sl("sqrt(5)"), 9));
  // The search does find genuine equivalences at that depth.
  CHECK(homography_search(sl("sqrt(2)"), sl("sqrt(2)/2"), 9));
  CHECK(homography_search(sl("sqrt(5)"), sl("(sqrt(5)-1)/4"), 9));
}

TEST_CASE("Morita equivalence agrees with lilac isomorphism and the search oracle") {
  auto pts = sample_slopes();
  REQUIRE(pts.size() == 50);
  const std::size_t n = pts.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = morita_equivalent(pts[i], pts[j]);
      CHECK(m[i][j] == lilac_iso({pts[i]}, {pts[j]}));
    }
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(m[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(m[i][j] == m[j][i]);
      if (i < j && homography_search(pts[i], pts[j], 5)) CHECK(m[i][j]);
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][j] && m[j][k]) CHECK(m[i][k]);
    }
  }
}

TEST_CASE("positive cone") {
  for (const char* t : {"sqrt(2)", "1/3", "-sqrt(7)", "(1+sqrt(5))/2"}) CHECK(k0_positive({1, 0}, {sl(t)}));
  CHECK(k0_positive({-1, 1}, {sl("sqrt(2)")}));
  CHECK(k0_positive({3, -2}, {sl("sqrt(2)")}));
  CHECK_FALSE(k0_positive({-3, 2}, {sl("sqrt(2)")}));
  CHECK_FALSE(k0_positive({1, -3}, {sl("1/3")}));
  CHECK_THROWS_AS(k0_positive({1, 0}, {Slope::generic("pi")}), Error);
}

TEST_CASE("order density through convergents") {
  for (const char* t : {"sqrt(2)", "(1+sqrt(5))/2", "sqrt(3)/7", "-2+sqrt(11)", "sqrt(97)"}) {
    for (const BigRational eps : {BigRational(1, 1000), BigRational(1, 1000000)}) {
      IntPair e = small_positive_element(sl(t), eps);
      Number v = Number(e.first) + Number(e.second) * sl(t).number();
      CHECK(sign(v) == Sign::positive);
      CHECK(compare(v, Number(eps)) < 0);
    }
  }
  IntPair r = small_positive_element(sl("3/7"), BigRational(1, 2));
  CHECK(Number(r.first) + Number(r.second) * num("3/7") == Number(BigRational(1, 7)));
  CHECK_THROWS_AS(small_positive_element(sl("3/7"), BigRational(1, 10)), Error);
}

TEST_CASE("pseudolattice membership") {
  CHECK(pseudolattice_member(num("3+2*sqrt(2)"), sl("sqrt(2)")) == IntPair{3, 2});
  CHECK_FALSE(pseudolattice_member(num("1/2"), sl("sqrt(2)")));
  CHECK_FALSE(pseudolattice_member(num("5/6"), sl("1/3")));
  CHECK(pseudolattice_member(num("4/3"), sl("1/3")) == IntPair{1, 1});
  CHECK(pseudolattice_member(num("(1+sqrt(5))/2"), sl("(3+sqrt(5))/2")) == IntPair{-1, 1});
  CHECK_FALSE(pseudolattice_member(num("sqrt(2)"), sl("1/3")));
  try {
    pseudolattice_member(num("sqrt(3)"), sl("sqrt(2)"));
    FAIL("mixed fields accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incompatible_fields);
  }
}

TEST_CASE("membership solutions are unique for irrational theta") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-20, 20);
  for (const char* t : {"sqrt(2)", "(1+sqrt(5))/2", "2*sqrt(3)/3"}) {
    const Number theta = num(t);
    for (int i = 0; i < 40; ++i) {
      const Number x = Number(BigInt(c(rng))) + Number(BigInt(c(rng))) * theta;
      auto sol = pseudolattice_member(x, sl(t));
      REQUIRE(sol);
      CHECK(Number(sol->first) + Number(sol->second) * theta == x);
      int hits = 0;
      for (long m = -60; m <= 60; ++m)
        for (long n = -60; n <= 60; ++n)
          if (Number(BigInt(m)) + Number(BigInt(n)) * theta == x) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("leaf equality") {
  CHECK(leaf_equal(num("sqrt(2)"), num("3*sqrt(2)-2"), sl("sqrt(2)")));
  CHECK_FALSE(leaf_equal(0, num("1/2"), sl("sqrt(2)")));
  CHECK(leaf_equal(num("1/3"), num("2/3"), sl("1/3")));

  for (const char* t : {"sqrt(2)", "2/5"}) {
    std::vector<Number> vals;
    for (const char* v : {"0", "1/2", "1/5", "3", "sqrt(2)", "1+sqrt(2)", "1/2+sqrt(2)", "2*sqrt(2)/5", "7/5", "-3/5"})
      vals.push_back(num(v));
    for (const auto& a : vals) {
      CHECK(leaf_equal(a, a, sl(t)));
      for (const auto& b : vals) {
        CHECK(leaf_equal(a, b, sl(t)) == leaf_equal(b, a, sl(t)));
        for (const auto& c : vals)
          if (leaf_equal(a, b, sl(t)) && leaf_equal(b, c, sl(t))) CHECK(leaf_equal(a, c, sl(t)));
      }
    }
  }
}

TEST_CASE("level structures") {
  CHECK(count_level_structures_by_enumeration(2) == 6);
  CHECK(count_level_structures_by_enumeration(3) == 48);
  CHECK(count_level_structures_by_enumeration(4) == 96);
  for (unsigned long N = 2; N <= 8; ++N) CHECK(count_level_structures(N) == count_level_structures_by_enumeration(N));
  CHECK(count_level_structures(12) == count_level_structures(3) * count_level_structures(4));
  for (long bad : {1L, 0L, -4L}) {
    try {
      count_level_structures(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_modulus);
    }
  }
  LevelStructure phi(6, {7, -1, 0, 5});
  CHECK(phi.phi == IntMatrix2{1, 5, 0, 5});
  CHECK_THROWS_AS(LevelStructure(6, {2, 0, 0, 1}), Error);
}

TEST_CASE("pair_to_geodesic") {
  CHECK(classify_mt(pair_to_geodesic(sl("sqrt(2)"), sl("-sqrt(2)"))) == MTClass{MTClass::Kind::rm_torus, 2});
  CHECK(classify_mt(pair_to_geodesic(sl("1/2"), Slope::generic("e"))).kind == MTClass::Kind::full_gl2);
  try {
    pair_to_geodesic(sl("0"), sl("0"));
    FAIL("equal slopes accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_transverse);
  }
}
