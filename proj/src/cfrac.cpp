#include "rmgeo/cfrac.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace rmgeo {

std::optional<BigInt> CFExpansion::quotient(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  if (period.empty()) return std::nullopt;
  return period[(k - preperiod.size()) % period.size()];
}

QuadSurdState to_surd_state(const QuadElem& x) {
  if (x.is_rational()) throw Error(ErrorKind::invalid_input, "surd state of a rational");
  const BigInt C = lcm(BigInt(x.a().get_den()), BigInt(x.b().get_den()));
  BigInt A = BigInt(x.a() * C), B = BigInt(x.b() * C);
  BigInt P = A, Q = C;
  if (B < 0) {
    P = -A;
    Q = -C;
    B = -B;
  }
  BigInt D = B * B * x.d();
  if ((D - P * P) % Q != 0) {
    const BigInt q_abs = abs(Q);
    P *= q_abs;
    D *= Q * Q;
    Q *= q_abs;
  }
  return {P, Q, D};
}

namespace {

BigInt surd_floor(const QuadSurdState& s, const BigInt& root) {
  return s.Q > 0 ? floor_div(s.P + root, s.Q) : floor_div(s.P + root + 1, s.Q);
}

CFExpansion expand_rational(const BigRational& q) {
  CFExpansion cf;
  BigInt p = q.get_num(), d = q.get_den();
  while (d != 0) {
    BigInt a = floor_div(p, d);
    cf.preperiod.push_back(a);
    BigInt r = p - a * d;
    p = d;
    d = r;
  }
  return cf;
}

}  // namespace

CFExpansion cf_expand_raw(const Number& x) {
  if (x.is_rational()) return expand_rational(x.rational());
  QuadSurdState s = to_surd_state(x.quad());
  const BigInt root = isqrt(s.D);
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  std::vector<BigInt> quotients;
  StepCounter steps("continued fraction expansion");
  for (;;) {
    auto [it, fresh] = seen.emplace(std::make_pair(s.P, s.Q), quotients.size());
    if (!fresh) {
      const std::size_t start = it->second;
      CFExpansion cf;
      cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<std::ptrdiff_t>(start));
      cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
      return cf;
    }
    steps.tick();
    const BigInt a = surd_floor(s, root);
    quotients.push_back(a);
    const BigInt P = a * s.Q - s.P;
    const BigInt Q = (s.D - P * P) / s.Q;
    s.P = P;
    s.Q = Q;
  }
}

std::vector<BigInt> least_rotation(const std::vector<BigInt>& word) {
  std::vector<BigInt> best = word;
  std::vector<BigInt> cur = word;
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

CFExpansion cf_expand(const Number& x) {
  CFExpansion cf = cf_expand_raw(x);
  if (cf.period.empty()) return cf;
  // Smallest shift r with period rotated left by r lexicographically least.
  const std::vector<BigInt> target = least_rotation(cf.period);
  std::vector<BigInt> cur = cf.period;
  std::size_t r = 0;
  while (cur != target) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    ++r;
  }
  cf.preperiod.insert(cf.preperiod.end(), cf.period.begin(), cf.period.begin() + static_cast<std::ptrdiff_t>(r));
  cf.period = target;
  return cf;
}

BigInt surd_state_bound(const BigInt& D) { return 2 * D; }

BigRational convergent(const CFExpansion& cf, std::size_t k) {
  // Seeds (p_{-2}, q_{-2}) = (0, 1) and (p_{-1}, q_{-1}) = (1, 0).
  BigInt p_prev = 0, q_prev = 1, p = 1, q = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    auto a = cf.quotient(i);
    if (!a) break;
    BigInt pn = *a * p + p_prev, qn = *a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  BigRational out(p, q);
  out.canonicalize();
  return out;
}

bool gl2z_equivalent(const Slope& x, const Slope& y) {
  if (x.is_generic() || y.is_generic())
    throw Error(ErrorKind::undecidable_input, "GL2(Z)-equivalence of a generic slope is not decidable");
  if (x.is_rational_point() || y.is_rational_point()) return x.is_rational_point() && y.is_rational_point();
  if (x.quad().d() != y.quad().d()) return false;
  return cf_expand(Number(x.quad())).period == cf_expand(Number(y.quad())).period;
}

PellUnit pell_fundamental_unit(const BigInt& D) {
  if (D < 2 || is_perfect_square(D)) throw Error(ErrorKind::invalid_input, "Pell needs a nonsquare D >= 2");
  const BigInt a0 = isqrt(D);
  BigInt P = 0, Q = 1, a = a0;
  BigInt p_prev = 1, p = a0, q_prev = 0, q = 1;
  std::size_t length = 0;
  StepCounter steps("Pell period");
  for (;;) {
    steps.tick();
    P = a * Q - P;
    Q = (D - P * P) / Q;
    ++length;
    if (Q == 1) break;
    a = (a0 + P) / Q;
    BigInt pn = a * p + p_prev, qn = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = pn;
    q = qn;
  }
  const int norm = (length % 2 == 0) ? 1 : -1;
  return {p, q, norm, normalize_quad(D, p, q), length};
}

std::string to_string(const CFExpansion& cf) {
  auto join = [](const std::vector<BigInt>& xs, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < xs.size(); ++i) {
      if (i > from) out += ", ";
      out += xs[i].get_str();
    }
    return out;
  };
  std::string tail;
  if (!cf.period.empty()) tail = "(" + join(cf.period, 0) + ")";
  if (cf.preperiod.empty()) return "[" + tail + "]";
  std::string rest = join(cf.preperiod, 1);
  if (!rest.empty() && !tail.empty()) rest += ", ";
  rest += tail;
  return "[" + cf.preperiod[0].get_str() + (rest.empty() ? "" : "; " + rest) + "]";
}

}  // namespace rmgeo
