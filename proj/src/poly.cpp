#include "rmgeo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "rmgeo/error.hpp"

namespace rmgeo {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<mpz_class> small, large;
  mpz_class root = sqrt(n);
  for (mpz_class i = 1; i <= root; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

mpz_class IntPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : mpz_class(0);
}

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

mpq_class RatPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : mpq_class(0);
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  std::vector<mpz_class> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeffs()[i] * i);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<mpz_class> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) {
  std::vector<mpz_class> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
  return IntPoly(std::move(c));
}

mpq_class eval(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const IntPoly& p, const mpq_class& x) { return sgn(eval(p, x)); }

RatPoly operator*(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<mpq_class> c(p.coeffs().size() + q.coeffs().size() - 1, 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    for (size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& p, const RatPoly& q) {
  std::vector<mpq_class> c(std::max(p.coeffs().size(), q.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& p, const RatPoly& q) { return p + scale(q, -1); }

RatPoly scale(const RatPoly& p, const mpq_class& s) {
  std::vector<mpq_class> c = p.coeffs();
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

void divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  if (den.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
  std::vector<mpq_class> r = num.coeffs();
  const int dd = den.degree();
  std::vector<mpq_class> q(std::max(0, num.degree() - dd + 1), 0);
  for (int k = num.degree() - dd; k >= 0; --k) {
    mpq_class f = r[k + dd] / den.lead();
    q[k] = f;
    for (int j = 0; j <= dd; ++j) r[k + j] -= f * den.coeffs()[j];
  }
  quot = RatPoly(std::move(q));
  rem = RatPoly(std::move(r));
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
  RatPoly a = p, b = q;
  while (!b.is_zero()) {
    RatPoly quo, rem;
    divmod(a, b, quo, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return scale(a, 1 / a.lead());
}

mpq_class eval(const RatPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly to_primitive_int(const RatPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> c;
  for (const auto& x : p.coeffs()) c.push_back(mpz_class(x * den));
  return primitive_part(IntPoly(std::move(c)));
}

bool is_squarefree(const IntPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(RatPoly(p), RatPoly(derivative(p))).degree() == 0;
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
  std::vector<RatPoly> chain{RatPoly(p), RatPoly(derivative(p))};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly quo, rem;
    divmod(chain[chain.size() - 2], chain.back(), quo, rem);
    if (rem.is_zero()) break;
    chain.push_back(scale(rem, -1));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {
int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}
}  // namespace

int sign_variations_at(const std::vector<RatPoly>& chain, const mpq_class& x) {
  std::vector<int> s;
  for (const auto& q : chain) s.push_back(sgn(eval(q, x)));
  return variations(s);
}

int sign_variations_at_infinity(const std::vector<RatPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& q : chain) {
    int ls = sgn(q.lead());
    if (!positive && q.degree() % 2 == 1) ls = -ls;
    s.push_back(ls);
  }
  return variations(s);
}

int count_roots(const std::vector<RatPoly>& chain, const mpq_class& lo, const mpq_class& hi) {
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_real_roots(const IntPoly& p) {
  auto chain = sturm_chain(p);
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

mpq_class cauchy_root_bound(const IntPoly& p) {
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class r = abs(mpq_class(p.coeffs()[i], abs(p.lead())));
    r.canonicalize();
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<mpq_class> rational_roots(const IntPoly& p_in) {
  std::set<mpq_class> roots;
  IntPoly p = p_in;
  if (p.is_zero()) return {};
  while (p.degree() > 0 && p.coeffs()[0] == 0) {
    roots.insert(0);
    std::vector<mpz_class> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = IntPoly(std::move(c));
  }
  if (p.degree() >= 1) {
    for (const auto& num : positive_divisors(p.coeffs()[0])) {
      for (const auto& den : positive_divisors(p.lead())) {
        for (int s : {1, -1}) {
          mpq_class cand(num * s, den);
          cand.canonicalize();
          if (eval(p, cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

bool is_irreducible(const IntPoly& p_in) {
  IntPoly p = primitive_part(p_in);
  const int deg = p.degree();
  if (deg < 1) return false;
  if (deg == 1) return true;
  if (deg > 4) throw Error(ErrorKind::invalid_input, "irreducibility certificate limited to degree <= 4");
  if (!rational_roots(p).empty()) return false;
  if (deg <= 3) return true;
  // Any quadratic factor g over Z has g(k) | p(k) for k = -1, 0, 1 (all nonzero here).
  const mpz_class pm = mpz_class(eval(p, -1)), p0 = p.coeffs()[0], pp = mpz_class(eval(p, 1));
  const auto dm = positive_divisors(pm), d0 = positive_divisors(p0), dp = positive_divisors(pp);
  RatPoly rp(p);
  for (const auto& u0 : dm) {
    for (const auto& v : d0) {  // fix g(0) > 0; -g is the same factor
      for (const auto& w0 : dp) {
        for (int su : {1, -1}) {
          for (int sw : {1, -1}) {
            mpz_class u = u0 * su, w = w0 * sw;
            if ((u + w) % 2 != 0) continue;
            mpz_class a = (u + w) / 2 - v, b = (w - u) / 2;
            if (a == 0) continue;
            RatPoly g(std::vector<mpq_class>{mpq_class(v), mpq_class(b), mpq_class(a)});
            RatPoly quo, rem;
            divmod(rp, g, quo, rem);
            if (rem.is_zero()) return false;
          }
        }
      }
    }
  }
  return true;
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::parse_error, "empty polynomial");
  std::vector<mpz_class> coeffs;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::parse_error, "polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sgn_term = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn_term = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    mpz_class coef = 1;
    bool have_coef = false;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coef = mpz_class(s.substr(start, i - start));
      have_coef = true;
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'x') fail("expected x after '*'");
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) fail("missing exponent");
        power = std::stoi(s.substr(ps, i - ps));
        if (power > 64) fail("exponent too large");
      }
    } else if (!have_coef) {
      fail("expected a term");
    }
    if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, 0);
    coeffs[power] += sgn_term * coef;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace rmgeo
