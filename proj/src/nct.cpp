#include "rmgeo/nct.hpp"

#include "rmgeo/cfrac.hpp"

namespace rmgeo {

namespace {

void require_exact(const Slope& theta, const char* what) {
  if (theta.is_generic())
    throw Error(ErrorKind::undecidable_input, std::string(what) + " needs an exact theta, got " + to_string(theta));
  if (theta.kind() == Slope::Kind::infinity) throw Error(ErrorKind::invalid_input, std::string(what) + " is undefined at theta = inf");
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

bool lilac_iso(const PreLilac& l1, const PreLilac& l2) { return gl2z_equivalent(l1.theta, l2.theta); }

bool morita_equivalent(const Slope& theta1, const Slope& theta2) { return lilac_iso({theta1}, {theta2}); }

bool k0_positive(const IntPair& element, const OrderedK0& k0) {
  require_exact(k0.theta, "positivity");
  return sign(Number(element.first) + Number(element.second) * k0.theta.number()) == Sign::positive;
}

IntPair small_positive_element(const Slope& theta, const BigRational& eps) {
  require_exact(theta, "small positive element");
  if (eps <= 0) throw Error(ErrorKind::invalid_input, "eps must be positive");
  const Number t = theta.number();
  if (t.is_rational()) {
    // Z + Z r/s = (1/s) Z, so nothing below 1/s is positive.
    const BigRational& q = t.rational();
    BigRational step(1, q.get_den());
    if (step >= eps) throw Error(ErrorKind::invalid_input, "Z + Z theta is discrete below " + to_string(step));
    const ExtGcd e = extended_gcd(q.get_den(), q.get_num());
    return {e.x, e.y};
  }
  const CFExpansion cf = cf_expand(t);
  StepCounter steps("convergent search");
  for (std::size_t k = 0;; ++k) {
    steps.tick();
    const BigRational c = convergent(cf, k);
    const BigInt p = c.get_num(), q = c.get_den();
    const Number gap = Number(q) * t - Number(p);
    const Sign s = sign(gap);
    IntPair out = s == Sign::positive ? IntPair{-p, q} : IntPair{p, -q};
    const Number v = s == Sign::positive ? gap : -gap;
    if (compare(v, Number(eps)) < 0) return out;
  }
}

std::optional<IntPair> pseudolattice_member(const Number& x, const Slope& theta) {
  require_exact(theta, "pseudolattice membership");
  const Number t = theta.number();
  if (t.is_rational()) {
    if (!x.is_rational()) return std::nullopt;
    const BigRational& q = t.rational();
    const BigRational xs = x.rational() * q.get_den();
    if (xs.get_den() != 1) return std::nullopt;
    const BigInt X = xs.get_num(), r = q.get_num(), s = q.get_den();
    const ExtGcd e = extended_gcd(s, r);  // s*e.x + r*e.y = 1
    const BigInt n = mod_floor(e.y * X, s);
    return IntPair{(X - n * r) / s, n};
  }
  const QuadElem& tq = t.quad();
  if (!x.is_rational() && x.quad().d() != tq.d())
    throw Error(ErrorKind::incompatible_fields, "Q(sqrt(" + x.quad().d().get_str() + ")) vs Q(sqrt(" + tq.d().get_str() + "))");
  const BigRational xa = x.is_rational() ? x.rational() : x.quad().a();
  const BigRational xb = x.is_rational() ? BigRational(0) : x.quad().b();
  const BigRational n = xb / tq.b();
  if (n.get_den() != 1) return std::nullopt;
  const BigRational m = xa - n * tq.a();
  if (m.get_den() != 1) return std::nullopt;
  return IntPair{m.get_num(), n.get_num()};
}

bool leaf_equal(const Number& p, const Number& q, const Slope& theta) {
  return pseudolattice_member(p - q, theta).has_value();
}

LevelStructure::LevelStructure(BigInt modulus, IntMatrix2 m) : N(std::move(modulus)), phi(std::move(m)) {
  if (N < 2) throw Error(ErrorKind::invalid_modulus, "level must be at least 2, got " + N.get_str());
  phi = {mod_floor(phi.a, N), mod_floor(phi.b, N), mod_floor(phi.c, N), mod_floor(phi.d, N)};
  if (gcd(phi.det(), N) != 1) throw Error(ErrorKind::not_invertible, "level structure is not invertible mod " + N.get_str());
}

BigInt count_level_structures(const BigInt& N) {
  if (N < 2) throw Error(ErrorKind::invalid_modulus, "level must be at least 2, got " + N.get_str());
  // N^4 prod (1 - 1/p)(1 - 1/p^2) = N^4 prod (p - 1)(p^2 - 1) / p^3
  BigInt num = N * N * N * N, den = 1, n = N;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    num *= (p - 1) * (p * p - 1);
    den *= p * p * p;
  }
  if (n > 1) {
    num *= (n - 1) * (n * n - 1);
    den *= n * n * n;
  }
  return num / den;
}

BigInt count_level_structures_by_enumeration(unsigned long N) {
  if (N < 2) throw Error(ErrorKind::invalid_modulus, "level must be at least 2");
  unsigned long count = 0;
  const long n = static_cast<long>(N);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d) {
          long det = ((a * d - b * c) % n + n) % n;
          long x = det, y = n;
          while (y) {
            long t = x % y;
            x = y;
            y = t;
          }
          if (x == 1) ++count;
        }
  return BigInt(count);
}

GeodesicPoint pair_to_geodesic(const Slope& theta1, const Slope& theta2) {
  if (theta1 == theta2) throw Error(ErrorKind::not_transverse, "both lines have slope " + to_string(theta1));
  return GeodesicPoint(theta1, theta2);
}

}  // namespace rmgeo
