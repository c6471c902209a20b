#include "rmgeo/slope.hpp"

namespace rmgeo {

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Slope Slope::rational(BigRational q) { return Slope(Value(std::move(q))); }

Slope Slope::infinity() { return Slope(Value(InfinityTag{})); }

Slope Slope::quadratic(QuadElem q) {
  if (q.is_rational()) throw Error(ErrorKind::invalid_input, "quadratic slope with zero surd part");
  return Slope(Value(std::move(q)));
}

Slope Slope::generic(std::string label) {
  if (label.empty()) throw Error(ErrorKind::invalid_input, "generic slope needs a label");
  return Slope(Value(GenericTag{std::move(label)}));
}

Slope Slope::from_number(const Number& x) {
  return x.is_rational() ? rational(x.rational()) : quadratic(x.quad());
}

Slope::Kind Slope::kind() const { return static_cast<Kind>(value_.index()); }

Number Slope::number() const {
  switch (kind()) {
    case Kind::rational: return Number(rational_value());
    case Kind::quadratic: return Number(quad());
    default: throw Error(ErrorKind::undecidable_input, "slope " + to_string(*this) + " has no exact value");
  }
}

Slope mobius(const IntMatrix2& g, const Slope& s) {
  const BigInt det = g.det();
  if (det != 1 && det != -1) throw Error(ErrorKind::not_invertible, "matrix is not in GL2(Z)");
  switch (s.kind()) {
    case Slope::Kind::infinity: {
      if (g.c == 0) return Slope::infinity();
      BigRational r(g.a, g.c);
      r.canonicalize();
      return Slope::rational(r);
    }
    case Slope::Kind::generic:
      return Slope::generic("(" + g.a.get_str() + "*" + s.label() + "+" + g.b.get_str() + ")/(" + g.c.get_str() + "*" +
                            s.label() + "+" + g.d.get_str() + ")");
    default: {
      const Number x = s.number();
      const Number den = Number(g.c) * x + Number(g.d);
      if (sign(den) == Sign::zero) return Slope::infinity();
      return Slope::from_number((Number(g.a) * x + Number(g.b)) / den);
    }
  }
}

std::string to_string(const Slope& s) {
  switch (s.kind()) {
    case Slope::Kind::infinity: return "inf";
    case Slope::Kind::generic: return "generic:" + s.label();
    default: return to_string(s.number());
  }
}

Slope parse_slope(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') t += ch;
  if (t == "inf" || t == "infinity" || t == "oo") return Slope::infinity();
  if (t.rfind("generic:", 0) == 0) {
    if (t.size() == 8) throw Error(ErrorKind::parse_error, "generic slope needs a name");
    return Slope::generic(t.substr(8));
  }
  return Slope::from_number(parse_number(text));
}

}  // namespace rmgeo
