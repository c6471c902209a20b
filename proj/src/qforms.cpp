#include "rmgeo/qforms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "rmgeo/cfrac.hpp"

namespace rmgeo {

namespace {

auto sort_key(const IndefForm& f) { return std::make_tuple(BigInt(abs(f.a)), f.a < 0, f.b, f.c); }

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigRational rat(const BigInt& n, const BigInt& d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> ps;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool operator<(const IndefForm& x, const IndefForm& y) { return sort_key(x) < sort_key(y); }

void validate_discriminant(const BigInt& D) {
  if (D <= 0) throw Error(ErrorKind::invalid_discriminant, "discriminant must be positive: " + D.get_str());
  if (is_perfect_square(D)) throw Error(ErrorKind::invalid_discriminant, "square discriminant " + D.get_str());
  const BigInt r = mod_floor(D, 4);
  if (r != 0 && r != 1) throw Error(ErrorKind::invalid_discriminant, "discriminant must be 0 or 1 mod 4: " + D.get_str());
}

void validate_form(const IndefForm& f) {
  validate_discriminant(f.disc());
  if (f.a == 0) throw Error(ErrorKind::invalid_input, "leading coefficient is zero");
  BigInt g = gcd(gcd(f.a, f.b), f.c);
  if (g != 1) throw Error(ErrorKind::invalid_input, "form " + to_string(f) + " is not primitive");
}

IndefForm act(const IndefForm& f, const IntMatrix2& g) {
  return {f.a * g.a * g.a + f.b * g.a * g.c + f.c * g.c * g.c,
          2 * f.a * g.a * g.b + f.b * (g.a * g.d + g.b * g.c) + 2 * f.c * g.c * g.d,
          f.a * g.b * g.b + f.b * g.b * g.d + f.c * g.d * g.d};
}

bool is_reduced(const IndefForm& f) {
  // 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, squared out exactly.
  const BigInt D = f.disc();
  if (f.b <= 0 || f.b * f.b >= D) return false;
  const BigInt a2 = 2 * abs(f.a);
  const BigInt hi = a2 + f.b;
  if (hi * hi <= D) return false;
  const BigInt lo = a2 - f.b;
  return lo <= 0 || lo * lo < D;
}

IntMatrix2 rho_matrix(const IndefForm& f) {
  const BigInt D = f.disc();
  const BigInt ac = abs(f.c), m = 2 * ac;
  BigInt b;
  if (ac * ac > D) {
    b = mod_floor(-f.b, m);
    if (b > ac) b -= m;
  } else {
    const BigInt s = isqrt(D);
    b = s - mod_floor(s + f.b, m);
  }
  const BigInt k = (b + f.b) / (2 * f.c);
  return {0, -1, 1, k};
}

IndefForm rho(const IndefForm& f) { return act(f, rho_matrix(f)); }

IndefForm reduce(const IndefForm& f) {
  validate_form(f);
  IndefForm g = f;
  StepCounter steps("form reduction");
  while (!is_reduced(g)) {
    steps.tick();
    g = rho(g);
  }
  return g;
}

std::vector<IndefForm> enumerate_reduced(const BigInt& D) {
  validate_discriminant(D);
  std::vector<IndefForm> out;
  const BigInt s = isqrt(D);
  StepCounter steps("reduced form scan");
  for (BigInt b = mod_floor(D, 2) == 0 ? 2 : 1; b <= s; b += 2) {
    const BigInt n = (D - b * b) / 4;  // = -a c > 0
    for (BigInt a = 1; a * a <= n; ++a) {
      steps.tick();
      if (n % a != 0) continue;
      const BigInt other = n / a;
      for (const BigInt& x : {a, other}) {
        for (int sg : {1, -1}) {
          IndefForm f{sg * x, b, -sg * (n / x)};
          if (gcd(gcd(f.a, f.b), f.c) == 1 && is_reduced(f)) out.push_back(f);
        }
        if (a == other) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndefForm> rho_cycle(const IndefForm& reduced) {
  if (!is_reduced(reduced)) throw Error(ErrorKind::invalid_input, "cycle start " + to_string(reduced) + " is not reduced");
  std::vector<IndefForm> cycle{reduced};
  StepCounter steps("rho cycle");
  for (IndefForm g = rho(reduced); !(g == reduced); g = rho(g)) {
    steps.tick();
    cycle.push_back(g);
  }
  return cycle;
}

std::vector<std::vector<IndefForm>> proper_classes(const BigInt& D) {
  const std::vector<IndefForm> forms = enumerate_reduced(D);
  std::map<IndefForm, bool> seen;
  std::vector<std::vector<IndefForm>> cycles;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    auto cycle = rho_cycle(f);
    for (const auto& g : cycle) seen[g] = true;
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

IndefForm principal_form(const BigInt& D) {
  validate_discriminant(D);
  BigInt b = isqrt(D);
  if (mod_floor(b - D, 2) != 0) b -= 1;
  return {1, b, (b * b - D) / 4};
}

IndefForm compose(const IndefForm& f, const IndefForm& g) {
  validate_form(f);
  validate_form(g);
  const BigInt D = f.disc();
  if (g.disc() != D)
    throw Error(ErrorKind::incompatible_forms, "discriminants " + D.get_str() + " and " + g.disc().get_str() + " differ");
  const BigInt beta = (f.b + g.b) / 2;
  const ExtGcd first = extended_gcd(f.a, g.a);
  const ExtGcd second = extended_gcd(first.g, beta);
  const BigInt e = second.g;
  const BigInt u = second.x * first.x, v = second.x * first.y, w = second.y;
  const BigInt A = f.a * g.a / (e * e);
  const BigInt num = u * f.a * g.b + v * g.a * f.b + w * (f.b * g.b + D) / 2;
  if (num % e != 0) throw std::logic_error("composition: non-integral middle coefficient");
  const BigInt B = mod_floor(num / e, 2 * abs(A));
  const BigInt C4 = B * B - D;
  if (C4 % (4 * A) != 0) throw std::logic_error("composition: non-integral last coefficient");
  return reduce({A, B, C4 / (4 * A)});
}

std::size_t FormClassGroup::class_of(const IndefForm& f) const {
  const IndefForm r = reduce(f);
  if (r.disc() != discriminant) throw Error(ErrorKind::incompatible_forms, "form of another discriminant");
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (std::find(cycles[i].begin(), cycles[i].end(), r) != cycles[i].end()) return i;
  throw std::logic_error("reduced form missing from every cycle");
}

FormClassGroup class_group(const BigInt& D) {
  FormClassGroup G;
  G.discriminant = D;
  G.cycles = proper_classes(D);
  const std::size_t h = G.cycles.size();
  for (const auto& c : G.cycles) G.representatives.push_back(c.front());

  G.cayley.assign(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j)
      G.cayley[i][j] = G.cayley[j][i] = G.class_of(compose(G.representatives[i], G.representatives[j]));
  G.inverse.assign(h, 0);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if (G.cayley[i][j] == 0) G.inverse[i] = j;

  // Invariant factors from the sizes of the p^k-torsion subgroups.
  std::vector<std::vector<unsigned>> exps_by_prime;
  std::vector<BigInt> primes = prime_factors(BigInt(static_cast<unsigned long>(h)));
  for (const BigInt& p : primes) {
    const unsigned long pl = p.get_ui();
    std::vector<std::size_t> pw(h);
    std::iota(pw.begin(), pw.end(), 0);
    std::vector<unsigned> ranks;  // ranks[k-1] = #cyclic factors of order >= p^k
    std::size_t prev = 1;
    for (;;) {
      for (auto& x : pw) {
        std::size_t y = 0;
        for (unsigned long r = 0; r < pl; ++r) y = G.cayley[y][x];
        x = y;
      }
      const auto n = static_cast<std::size_t>(std::count(pw.begin(), pw.end(), std::size_t{0}));
      if (n == prev) break;
      unsigned rank = 0;
      for (std::size_t q = n / prev; q > 1; q /= pl) ++rank;
      ranks.push_back(rank);
      prev = n;
    }
    std::vector<unsigned> exps(ranks.empty() ? 0 : ranks.front(), 0);
    for (unsigned r : ranks)
      for (unsigned i = 0; i < r; ++i) ++exps[i];  // largest first
    exps_by_prime.push_back(exps);
  }
  std::size_t count = 0;
  for (const auto& e : exps_by_prime) count = std::max(count, e.size());
  for (std::size_t i = 0; i < count; ++i) {
    BigInt d = 1;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (i >= exps_by_prime[j].size()) continue;
      BigInt pk;
      mpz_pow_ui(pk.get_mpz_t(), primes[j].get_mpz_t(), exps_by_prime[j][i]);
      d *= pk;
    }
    G.invariant_factors.push_back(d);
  }
  std::reverse(G.invariant_factors.begin(), G.invariant_factors.end());
  return G;
}

OrderUnit order_unit(const BigInt& D) {
  const IndefForm p = principal_form(D);
  IntMatrix2 acc{1, 0, 0, 1};
  for (const auto& f : rho_cycle(p)) acc = acc * rho_matrix(f);
  OrderUnit unit;
  unit.t_plus = abs(acc.a + acc.d);
  unit.u_plus = abs(acc.c);  // a = 1 for the principal form
  if (unit.t_plus * unit.t_plus - D * unit.u_plus * unit.u_plus != 4)
    throw std::logic_error("principal automorph has the wrong norm");

  unit.t = unit.t_plus;
  unit.u = unit.u_plus;
  unit.norm = 1;
  const BigInt tt = unit.t_plus - 2;
  if (is_perfect_square(tt)) {
    const BigInt t1 = isqrt(tt), rest = t1 * t1 + 4;
    if (rest % D == 0 && is_perfect_square(rest / D)) {
      unit.t = t1;
      unit.u = isqrt(rest / D);
      unit.norm = -1;
    }
  }
  unit.epsilon = normalize_quad(D, rat(unit.t, 2), rat(unit.u, 2));
  unit.epsilon_plus = normalize_quad(D, rat(unit.t_plus, 2), rat(unit.u_plus, 2));

  if (mod_floor(D, 4) == 0) {
    const PellUnit pell = pell_fundamental_unit(D / 4);
    if (!(pell.unit == unit.epsilon) || pell.norm != unit.norm)
      throw std::logic_error("form unit disagrees with the Pell unit");
  }
  return unit;
}

IntMatrix2 automorph(const IndefForm& f, const OrderUnit& unit) {
  const BigInt& t = unit.t_plus;
  const BigInt& u = unit.u_plus;
  return {(t - f.b * u) / 2, -f.c * u, f.a * u, (t + f.b * u) / 2};
}

WideClassGroup wide_class_group(const BigInt& D) {
  const FormClassGroup G = class_group(D);
  const std::size_t none = G.order();
  WideClassGroup W{0, std::vector<std::size_t>(G.order(), none)};
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (W.wide_of_proper[i] != none) continue;
    const IndefForm& r = G.representatives[i];
    const std::size_t j = G.class_of({-r.a, r.b, -r.c});
    W.wide_of_proper[i] = W.wide_of_proper[j] = W.h++;
  }
  return W;
}

ClosedGeodesic class_to_geodesic(const BigInt& D, const IndefForm& f) {
  validate_form(f);
  if (f.disc() != D) throw Error(ErrorKind::incompatible_forms, "form " + to_string(f) + " is not of discriminant " + D.get_str());
  ClosedGeodesic g{D, rho_cycle(reduce(f)),
                   {normalize_quad(D, rat(-f.b, 2 * f.a), rat(1, 2 * f.a)).quad(),
                    normalize_quad(D, rat(-f.b, 2 * f.a), rat(-1, 2 * f.a)).quad()},
                   order_unit(D).epsilon_plus};
  return g;
}

std::string ClosedGeodesic::length_numeric(int digits) const {
  return log_decimal(epsilon_plus * epsilon_plus, digits);
}

std::string to_string(const IndefForm& f) {
  return "(" + f.a.get_str() + ", " + f.b.get_str() + ", " + f.c.get_str() + ")";
}

}  // namespace rmgeo
