#include "rmgeo/exact.hpp"

#include <mpfr.h>

#include <cctype>
#include <utility>

namespace rmgeo {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::invalid_input, "isqrt of negative number");
  return sqrt(n);
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ExtGcd extended_gcd(const BigInt& a, const BigInt& b) {
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt floor(const BigRational& q) { return floor_div(q.get_num(), q.get_den()); }

SquarefreeSplit squarefree_split(const BigInt& n_in) {
  if (n_in == 0) throw Error(ErrorKind::invalid_input, "squarefree split of zero");
  BigInt n = abs(n_in), core = 1, root = 1;
  for (unsigned long p = 2; BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e % 2) core *= p;
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
  }
  // What is left is 1 or a prime.
  core *= n;
  if (n_in < 0) core = -core;
  return {core, root};
}

bool is_squarefree(const BigInt& n) { return n != 0 && squarefree_split(n).root == 1; }

QuadElem::QuadElem(BigInt d, BigRational a, BigRational b) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
  if (d_ <= 1 || !is_squarefree(d_))
    throw Error(ErrorKind::invalid_radicand, "radicand " + d_.get_str() + " is not squarefree > 1");
}

Sign quad_sign(const QuadElem& q) {
  const int sa = sgn(q.a()), sb = sgn(q.b());
  if (sb == 0) return sign_of(sa);
  if (sa == 0 || sa == sb) return sign_of(sb);
  // Opposite signs: the larger of a^2 and b^2 d decides. Equality is impossible
  // for squarefree d > 1.
  const BigRational lhs = q.a() * q.a(), rhs = q.b() * q.b() * q.d();
  return lhs > rhs ? sign_of(sa) : sign_of(sb);
}

int compare(const QuadElem& x, const QuadElem& y) { return static_cast<int>(quad_sign(x - y)); }

namespace {
void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.d() != y.d())
    throw Error(ErrorKind::incompatible_fields,
                "Q(sqrt(" + x.d().get_str() + ")) vs Q(sqrt(" + y.d().get_str() + "))");
}
}  // namespace

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.d(), x.a() + y.a(), x.b() + y.b()};
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.d(), x.a() - y.a(), x.b() - y.b()};
}

QuadElem operator-(const QuadElem& x) { return {x.d(), -x.a(), -x.b()}; }

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return {x.d(), x.a() * y.a() + x.b() * y.b() * x.d(), x.a() * y.b() + x.b() * y.a()};
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * invert(y); }

QuadElem operator+(const QuadElem& x, const BigRational& r) { return {x.d(), x.a() + r, x.b()}; }

QuadElem operator*(const QuadElem& x, const BigRational& r) { return {x.d(), x.a() * r, x.b() * r}; }

QuadElem invert(const QuadElem& q) {
  const BigRational n = norm(q);
  if (n == 0) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  return {q.d(), q.a() / n, -q.b() / n};
}

QuadElem galois_conjugate(const QuadElem& q) { return {q.d(), q.a(), -q.b()}; }

BigRational norm(const QuadElem& q) { return q.a() * q.a() - q.b() * q.b() * q.d(); }

BigRational trace(const QuadElem& q) { return 2 * q.a(); }

// ---------------------------------------------------------------------------

Number::Number(const QuadElem& q) {
  if (q.is_rational())
    value_ = q.a();
  else
    value_ = q;
}

std::optional<BigInt> Number::radicand() const {
  if (is_rational()) return std::nullopt;
  return quad().d();
}

QuadElem Number::in_field(const BigInt& d) const {
  if (is_rational()) return {d, rational(), 0};
  if (quad().d() != d)
    throw Error(ErrorKind::incompatible_fields,
                "Q(sqrt(" + quad().d().get_str() + ")) vs Q(sqrt(" + d.get_str() + "))");
  return quad();
}

namespace {
template <typename RatOp, typename QuadOp>
Number combine(const Number& x, const Number& y, RatOp rat_op, QuadOp quad_op) {
  if (x.is_rational() && y.is_rational()) return Number(rat_op(x.rational(), y.rational()));
  const BigInt d = x.is_rational() ? y.quad().d() : x.quad().d();
  return Number(quad_op(x.in_field(d), y.in_field(d)));
}
}  // namespace

Number operator+(const Number& x, const Number& y) {
  return combine(x, y, [](const BigRational& a, const BigRational& b) { return BigRational(a + b); },
                 [](const QuadElem& a, const QuadElem& b) { return a + b; });
}

Number operator-(const Number& x, const Number& y) {
  return combine(x, y, [](const BigRational& a, const BigRational& b) { return BigRational(a - b); },
                 [](const QuadElem& a, const QuadElem& b) { return a - b; });
}

Number operator-(const Number& x) {
  if (x.is_rational()) return Number(BigRational(-x.rational()));
  return Number(-x.quad());
}

Number operator*(const Number& x, const Number& y) {
  return combine(x, y, [](const BigRational& a, const BigRational& b) { return BigRational(a * b); },
                 [](const QuadElem& a, const QuadElem& b) { return a * b; });
}

Number operator/(const Number& x, const Number& y) {
  if (sign(y) == Sign::zero) throw Error(ErrorKind::division_by_zero, "division by zero");
  return combine(x, y, [](const BigRational& a, const BigRational& b) { return BigRational(a / b); },
                 [](const QuadElem& a, const QuadElem& b) { return a / b; });
}

Sign sign(const Number& x) { return x.is_rational() ? sign(x.rational()) : quad_sign(x.quad()); }

int compare(const Number& x, const Number& y) { return static_cast<int>(sign(x - y)); }

Number galois_conjugate(const Number& x) { return x.is_rational() ? x : Number(galois_conjugate(x.quad())); }

Number normalize_quad(const BigInt& d_raw, const BigRational& a, const BigRational& b) {
  if (d_raw < 2) throw Error(ErrorKind::invalid_radicand, "radicand " + d_raw.get_str() + " < 2");
  const auto [core, root] = squarefree_split(d_raw);
  if (core == 1 || b == 0) return Number(BigRational(a + b * root));
  return Number(QuadElem(core, a, b * root));
}

IntPoly minpoly(const Number& x) {
  if (x.is_rational()) {
    const BigRational& q = x.rational();
    return IntPoly({-BigInt(q.get_num()), BigInt(q.get_den())});
  }
  // x^2 - trace*x + norm, cleared of denominators.
  const QuadElem& q = x.quad();
  const BigRational t = trace(q), n = norm(q);
  const BigInt den = lcm(BigInt(t.get_den()), BigInt(n.get_den()));
  return primitive_part(IntPoly({BigInt(n * den), BigInt(-t * den), den}));
}

// ---------------------------------------------------------------------------

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const QuadElem& q) {
  if (q.is_rational()) return to_string(q.a());
  // (p + r*sqrt(d)) / s with integers and s > 0.
  const BigInt s = lcm(BigInt(q.a().get_den()), BigInt(q.b().get_den()));
  const BigInt p = BigInt(q.a() * s), r = BigInt(q.b() * s);
  const std::string root = "sqrt(" + q.d().get_str() + ")";
  std::string surd;
  if (r == 1)
    surd = root;
  else if (r == -1)
    surd = "-" + root;
  else
    surd = r.get_str() + "*" + root;
  if (p == 0) return s == 1 ? surd : surd + "/" + s.get_str();
  std::string sum = p.get_str() + (r > 0 ? "+" : "") + surd;
  return s == 1 ? sum : "(" + sum + ")/" + s.get_str();
}

std::string to_string(const Number& x) { return x.is_rational() ? to_string(x.rational()) : to_string(x.quad()); }

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*
//                          term := unary (('*'|'/') unary)*
//                          unary := ('+'|'-') unary | atom
//                          atom := integer | sqrt(expr) | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : original_(text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Number parse() {
    if (s_.empty()) fail("empty expression");
    Number v = expr();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse_error, "'" + std::string(original_) + "': " + why);
  }

  bool eat(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Number expr() {
    Number v = term();
    while (pos_ < s_.size()) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        break;
    }
    return v;
  }

  Number term() {
    Number v = unary();
    while (pos_ < s_.size()) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Number den = unary();
        if (sign(den) == Sign::zero) fail("division by zero");
        v = v / den;
      } else {
        break;
      }
    }
    return v;
  }

  Number unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return atom();
  }

  Number atom() {
    if (eat('(')) {
      Number v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      Number arg = expr();
      if (!eat(')')) fail("missing ')' after sqrt");
      if (!arg.is_rational() || arg.rational().get_den() != 1) fail("sqrt takes an integer argument");
      const BigInt n = arg.rational().get_num();
      if (n < 0) fail("sqrt of a negative integer");
      if (n < 2) return Number(n);
      return normalize_quad(n, 0, 1);
    }
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    return Number(BigInt(s_.substr(start, pos_ - start)));
  }

  std::string_view original_;
  std::string s_;
  size_t pos_ = 0;
};

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

void to_mpfr(const Number& x, mpfr_t out) {
  const mpfr_prec_t prec = mpfr_get_prec(out);
  if (x.is_rational()) {
    mpfr_set_q(out, x.rational().get_mpq_t(), MPFR_RNDN);
    return;
  }
  const QuadElem& q = x.quad();
  Mpfr root(prec + 32), tmp(prec + 32);
  mpfr_set_z(root.v, q.d().get_mpz_t(), MPFR_RNDN);
  mpfr_sqrt(root.v, root.v, MPFR_RNDN);
  mpfr_mul_q(root.v, root.v, q.b().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(tmp.v, q.a().get_mpq_t(), MPFR_RNDN);
  mpfr_add(out, tmp.v, root.v, MPFR_RNDN);
}

std::string format(mpfr_t v, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpfr_prec_t bits_for(int digits) { return static_cast<mpfr_prec_t>(digits * 3.33) + 64; }

}  // namespace

Number parse_number(std::string_view text) { return Parser(text).parse(); }

std::string to_decimal(const Number& x, int digits) {
  Mpfr v(bits_for(digits));
  to_mpfr(x, v.v);
  return format(v.v, digits);
}

std::string log_decimal(const Number& x, int digits) {
  if (sign(x) != Sign::positive) throw Error(ErrorKind::invalid_input, "log of a non-positive number");
  Mpfr v(bits_for(digits));
  to_mpfr(x, v.v);
  mpfr_log(v.v, v.v, MPFR_RNDN);
  return format(v.v, digits);
}

double to_double(const Number& x) {
  Mpfr v(128);
  to_mpfr(x, v.v);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

}  // namespace rmgeo
