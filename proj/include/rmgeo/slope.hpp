#ifndef RMGEO_SLOPE_HPP
#define RMGEO_SLOPE_HPP

#include <string>
#include <string_view>
#include <variant>

#include "rmgeo/exact.hpp"

namespace rmgeo {

/// Integer 2x2 matrix [[a, b], [c, d]].
struct IntMatrix2 {
  BigInt a, b, c, d;

  BigInt det() const { return a * d - b * c; }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);

/// A point of P^1(R) named exactly: the line spanned by (v1, v2) is stored as
/// v2 / v1, with infinity for v1 = 0. Generic slopes carry only a label and the
/// caller's promise that the value is irrational and not quadratic.
class Slope {
 public:
  enum class Kind { rational, infinity, quadratic, generic };

  static Slope rational(BigRational q);
  static Slope infinity();
  static Slope quadratic(QuadElem q);  // requires b != 0
  static Slope generic(std::string label);
  static Slope from_number(const Number& x);

  Kind kind() const;
  bool is_rational_point() const { return kind() == Kind::rational || kind() == Kind::infinity; }
  bool is_generic() const { return kind() == Kind::generic; }

  const BigRational& rational_value() const { return std::get<BigRational>(value_); }
  const QuadElem& quad() const { return std::get<QuadElem>(value_); }
  const std::string& label() const { return std::get<GenericTag>(value_).label; }
  Number number() const;  // rational or quadratic only

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  struct InfinityTag {
    friend bool operator==(const InfinityTag&, const InfinityTag&) = default;
  };
  struct GenericTag {
    std::string label;
    friend bool operator==(const GenericTag&, const GenericTag&) = default;
  };
  using Value = std::variant<BigRational, InfinityTag, QuadElem, GenericTag>;

  explicit Slope(Value v) : value_(std::move(v)) {}

  Value value_;
};

/// Moebius action s -> (a s + b) / (c s + d) of an integer matrix with det +-1.
Slope mobius(const IntMatrix2& g, const Slope& s);

std::string to_string(const Slope& s);
/// Accepts "inf", "generic:NAME", or any exact expression.
Slope parse_slope(std::string_view text);

}  // namespace rmgeo

#endif  // RMGEO_SLOPE_HPP
