#include "rmgeo/fields.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rmgeo {

namespace {

constexpr unsigned long kStartBits = 64;
constexpr unsigned long kMaxBits = 1UL << 14;

BigRational rq(const BigInt& n, const BigInt& d = 1) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

BigRational pow2_inv(unsigned long k) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return rq(1, den);
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0 || !is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) return std::nullopt;
  return rq(isqrt(q.get_num()), isqrt(q.get_den()));
}

// Arithmetic in Q[x]/(p).
class Quotient {
 public:
  explicit Quotient(const IntPoly& p) : mod_(p) {}

  RatPoly reduce(const RatPoly& x) const {
    RatPoly q, r;
    divmod(x, mod_, q, r);
    return r;
  }
  RatPoly mul(const RatPoly& x, const RatPoly& y) const { return reduce(x * y); }
  RatPoly inv(const RatPoly& a) const {
    RatPoly r0 = mod_, r1 = reduce(a), s0, s1({BigRational(1)});
    while (!r1.is_zero()) {
      RatPoly q, r;
      divmod(r0, r1, q, r);
      RatPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error(ErrorKind::division_by_zero, "element is not invertible in the field");
    return reduce(scale(s0, 1 / r0.coeff(0)));
  }

 private:
  RatPoly mod_;
};

RatPoly to_poly(const FieldVec& v) { return RatPoly(v); }

FieldVec to_vec(const RatPoly& r, int n) {
  FieldVec v(static_cast<std::size_t>(n));
  for (int i = 0; i <= r.degree(); ++i) v[static_cast<std::size_t>(i)] = r.coeff(i);
  return v;
}

// h_j(t) with p(x) - p(t) = (x - t) sum_j h_j(t) x^j; at a root t of p the
// vector (h_0(t), ..., h_{n-1}(t)) spans the eigenline of multiplication by x
// for the eigenvalue t.
std::vector<RatPoly> synthetic_rows(const IntPoly& p) {
  const int n = p.degree();
  std::vector<RatPoly> rows;
  for (int j = 0; j < n; ++j) {
    std::vector<BigRational> c;
    for (int m = 0; j + 1 + m <= n; ++m) c.emplace_back(p.coeff(j + 1 + m));
    rows.emplace_back(std::move(c));
  }
  return rows;
}

Fix eval_fix(const FixArith& A, const RatPoly& f, const Fix& x) {
  Fix acc = A.from_int(0);
  for (int i = f.degree(); i >= 0; --i) acc = A.add(A.mul(acc, x), A.from_rational(f.coeff(i)));
  return acc;
}

CFix eval_cfix(const FixArith& A, const RatPoly& f, const CFix& x) {
  CFix acc{A.from_int(0), A.from_int(0)};
  for (int i = f.degree(); i >= 0; --i) acc = cadd(A, cmul(A, acc, x), {A.from_rational(f.coeff(i)), A.from_int(0)});
  return acc;
}

Fix det_fix(const FixArith& A, const std::vector<std::vector<Fix>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Fix total = A.from_int(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Fix term = A.from_int(1);
    for (std::size_t i = 0; i < n; ++i) term = A.mul(term, m[i][perm[i]]);
    total = inversions % 2 ? A.sub(total, term) : A.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool overlaps(const Fix& x, const Fix& y) { return x.lo <= y.hi && y.lo <= x.hi; }

BigInt max_abs(const Fix& x) { return std::max(BigInt(abs(x.lo)), BigInt(abs(x.hi))); }

const std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Enclosures for a signature (2, 1) quartic at one precision.
struct SiegelNumerics {
  FixArith A;
  std::vector<Fix> w1, w2;
  std::vector<CFix> wz;
};

std::optional<SiegelNumerics> siegel_numerics(SiegelPoint& pt, unsigned long bits) {
  SiegelNumerics out{FixArith(bits), {}, {}, {}};
  const FixArith& A = out.A;
  const IntPoly& p = pt.poly;
  const Fix r1 = pt.r1.enclose(A), r2 = pt.r2.enclose(A);
  // Vieta: r1 + r2 + 2 Re z = -a3/a4 and r1 r2 |z|^2 = a0/a4.
  const Fix s = A.add(A.from_rational(rq(p.coeff(3), p.coeff(4))), A.add(r1, r2));
  const Fix re = A.mul(s, A.from_rational(rq(-1, 2)));
  const Fix prod = A.mul(r1, r2);
  if (prod.contains_zero()) return std::nullopt;
  const Fix mod2 = A.div(A.from_rational(rq(p.coeff(0), p.coeff(4))), prod);
  const Fix im2 = A.sub(mod2, A.mul(re, re));
  if (!im2.positive()) return std::nullopt;
  const CFix z{re, A.sqrt(im2)};
  for (const RatPoly& h : synthetic_rows(p)) {
    out.w1.push_back(eval_fix(A, h, r1));
    out.w2.push_back(eval_fix(A, h, r2));
    out.wz.push_back(eval_cfix(A, h, z));
  }
  return out;
}

SiegelNumerics siegel_numerics_at_least(SiegelPoint& pt, unsigned long bits) {
  for (; bits <= kMaxBits; bits *= 2)
    if (auto n = siegel_numerics(pt, bits)) return *n;
  throw Error(ErrorKind::budget_exceeded, "complex root enclosure did not separate");
}

// Plucker coordinates of (u, v) for real u and complex v.
std::array<CFix, 6> plucker(const FixArith& A, const std::vector<Fix>& u, const std::vector<CFix>& v) {
  std::array<CFix, 6> out;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    const CFix a = cmul(A, {u[i], A.from_int(0)}, v[j]);
    const CFix b = cmul(A, {u[j], A.from_int(0)}, v[i]);
    out[k] = csub(A, a, b);
  }
  return out;
}

CFix pair_value(const FixArith& A, const std::array<CFix, 6>& pl, const Psi& psi) {
  CFix acc{A.from_int(0), A.from_int(0)};
  for (std::size_t k = 0; k < 6; ++k)
    if (psi[k] != 0) acc = cadd(A, acc, cmul_int(A, pl[k], psi[k]));
  return acc;
}

std::string describe(const FixArith& A, const CFix& v) {
  return "[" + A.mid_decimal(v.re, 12) + "] + [" + A.mid_decimal(v.im, 12) + "]i";
}

}  // namespace

void RealRoot::refine(const BigRational& width) {
  if (lo == hi) return;
  const int s_lo = sign_at(poly, lo);
  StepCounter steps("root refinement");
  while (hi - lo > width) {
    steps.tick();
    BigRational mid = (lo + hi) / 2;
    const int s = sign_at(poly, mid);
    if (s == 0) {
      lo = hi = mid;
      return;
    }
    (s == s_lo ? lo : hi) = mid;
  }
}

Fix RealRoot::enclose(const FixArith& A) {
  refine(pow2_inv(A.bits() + 1));
  return A.hull(lo, hi);
}

EmbeddingSet isolate_real_roots(const IntPoly& p) {
  if (p.degree() < 1) throw Error(ErrorKind::invalid_input, "polynomial must have positive degree");
  if (!is_squarefree(p)) throw Error(ErrorKind::squarefree_required, to_string(p) + " has a repeated factor");
  EmbeddingSet E;
  E.poly = p;
  if (p.degree() == 1) {
    const BigRational root = rq(-p.coeff(0), p.coeff(1));
    E.real_roots.push_back({p, root, root});
    return E;
  }
  const std::vector<RatPoly> chain = sturm_chain(p);
  BigRational B = cauchy_root_bound(p);
  while (sign_at(p, B) == 0 || sign_at(p, -B) == 0) B *= 2;
  StepCounter steps("root isolation");
  std::function<void(const BigRational&, const BigRational&)> isolate = [&](const BigRational& lo, const BigRational& hi) {
    steps.tick();
    const int n = count_roots(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
      E.real_roots.push_back({p, lo, hi});
      return;
    }
    BigRational mid = (lo + hi) / 2;
    while (sign_at(p, mid) == 0) mid = (mid + hi) / 2;
    isolate(lo, mid);
    isolate(mid, hi);
  };
  isolate(-B, B);
  E.complex_pairs = (p.degree() - static_cast<int>(E.real_roots.size())) / 2;
  return E;
}

NumberField::NumberField(const IntPoly& p) : poly_(primitive_part(p)) {
  const int n = poly_.degree();
  if (n != 1 && n != 2 && n != 4)
    throw Error(ErrorKind::invalid_input, "number fields here have degree 1, 2 or 4, got " + std::to_string(n));
  if (!is_irreducible(poly_)) throw Error(ErrorKind::invalid_input, to_string(poly_) + " is reducible over Q");
  emb_ = isolate_real_roots(poly_);
}

NumberField NumberField::parse(std::string_view text) { return NumberField(parse_poly(text)); }

BigInt quadratic_radicand(const NumberField& E) {
  if (E.degree() != 2) throw Error(ErrorKind::invalid_input, "expected a quadratic field");
  const IntPoly& e = E.minpoly();
  const BigInt disc = e.coeff(1) * e.coeff(1) - 4 * e.coeff(2) * e.coeff(0);
  return squarefree_split(disc).core;
}

std::optional<FieldVec> subfield_embed(const NumberField& E, const NumberField& F) {
  if (E.degree() != 2 || F.degree() != 4)
    throw Error(ErrorKind::invalid_input, "subfield_embed needs a quadratic E and a quartic F");
  const BigInt d = quadratic_radicand(E);
  const IntPoly& f = F.minpoly();
  BigRational P[4];
  for (int i = 0; i < 4; ++i) P[i] = rq(f.coeff(i), f.lead());

  // f = (x^2 + u x + v)(x^2 + u' x + v') with u = u0 + u1 r, v = v0 + v1 r, r^2 = d
  // and ' the conjugation r -> -r.
  const BigRational u0 = P[3] / 2;
  struct Candidate {
    BigRational u1, v0, v1;
  };
  std::vector<Candidate> cands;
  {
    const BigRational v0 = (P[2] - u0 * u0) / 2;
    if (P[1] == 2 * u0 * v0)
      if (auto v1 = rational_sqrt((v0 * v0 - P[0]) / d); v1 && *v1 != 0) cands.push_back({0, v0, *v1});
  }
  {
    // u1 != 0: w = u1^2 solves d w (v0^2 - P0) = (u0 v0 - P1/2)^2 with v0 = c0 + (d/2) w.
    const BigRational c0 = (P[2] - u0 * u0) / 2, c1 = BigRational(d) / 2;
    const RatPoly v0({c0, c1});
    const RatPoly lhs = RatPoly({0, BigRational(d)}) * (v0 * v0 - RatPoly({P[0]}));
    const RatPoly m = scale(v0, u0) - RatPoly({P[1] / 2});
    const RatPoly cubic = lhs - m * m;
    if (!cubic.is_zero())
      for (const BigRational& w : rational_roots(to_primitive_int(cubic))) {
        if (w <= 0) continue;
        auto u1 = rational_sqrt(w);
        if (!u1) continue;
        const BigRational v0w = c0 + c1 * w;
        cands.push_back({*u1, v0w, (u0 * v0w - P[1] / 2) / (d * *u1)});
      }
  }

  const Quotient K(f);
  for (const auto& c : cands) {
    const bool factors = P[2] == u0 * u0 - d * c.u1 * c.u1 + 2 * c.v0 && P[1] == 2 * (u0 * c.v0 - d * c.u1 * c.v1) &&
                         P[0] == c.v0 * c.v0 - d * c.v1 * c.v1;
    if (!factors) continue;
    // alpha^2 + u alpha + v = 0 for one choice of r; solve for r.
    const RatPoly num({-c.v0, -u0, BigRational(-1)});
    const RatPoly den({c.v1, c.u1});
    RatPoly r = K.mul(num, K.inv(den));
    if (!(K.mul(r, r) == RatPoly({BigRational(d)}))) continue;
    FieldVec v = to_vec(r, 4);
    for (int i = 3; i >= 0; --i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      if (v[static_cast<std::size_t>(i)] < 0)
        for (auto& x : v) x = -x;
      break;
    }
    return v;
  }
  return std::nullopt;
}

std::vector<std::vector<BigRational>> multiplication_matrix(const NumberField& F, const FieldVec& x) {
  const int n = F.degree();
  const Quotient K(F.minpoly());
  std::vector<std::vector<BigRational>> M(static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n)));
  RatPoly power({BigRational(1)});
  const RatPoly alpha({0, BigRational(1)});
  for (int j = 0; j < n; ++j) {
    const FieldVec col = to_vec(K.mul(to_poly(x), power), n);
    for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
    power = K.mul(power, alpha);
  }
  return M;
}

RMTypeSet rm_types(const NumberField& E, const NumberField& F) {
  if (!E.totally_real() || !F.totally_real()) throw Error(ErrorKind::not_totally_real, "RM types need totally real E and F");
  if (F.degree() != 2 * E.degree()) throw Error(ErrorKind::invalid_input, "F must be quadratic over E");
  RMTypeSet out;
  const std::size_t m = E.embeddings().real_roots.size();
  std::vector<RealRoot> f_roots = F.embeddings().real_roots, e_roots = E.embeddings().real_roots;
  out.fibers.assign(m, {});
  if (E.degree() == 1) {
    out.e_generator = FieldVec(static_cast<std::size_t>(F.degree()));
    out.e_generator[0] = e_roots[0].lo;
    for (std::size_t i = 0; i < f_roots.size(); ++i) out.fibers[0].push_back(i);
  } else {
    const auto gamma = subfield_embed(E, F);
    if (!gamma) throw Error(ErrorKind::invalid_input, "F does not contain E");
    const IntPoly& e = E.minpoly();
    const BigInt disc = e.coeff(1) * e.coeff(1) - 4 * e.coeff(2) * e.coeff(0);
    const BigInt root = squarefree_split(disc).root;
    out.e_generator = FieldVec(4);
    for (std::size_t i = 0; i < 4; ++i) out.e_generator[i] = (*gamma)[i] * root / (2 * e.coeff(2));
    out.e_generator[0] += rq(-e.coeff(1), 2 * e.coeff(2));

    const RatPoly gen = to_poly(out.e_generator);
    std::vector<std::size_t> over(f_roots.size(), m);
    for (unsigned long bits = kStartBits;; bits *= 2) {
      if (bits > kMaxBits) throw Error(ErrorKind::budget_exceeded, "embeddings did not separate");
      const FixArith A(bits);
      std::vector<Fix> e_iv;
      for (auto& r : e_roots) e_iv.push_back(r.enclose(A));
      bool done = true;
      for (std::size_t i = 0; i < f_roots.size(); ++i) {
        const Fix v = eval_fix(A, gen, f_roots[i].enclose(A));
        std::size_t hits = 0, which = m;
        for (std::size_t j = 0; j < m; ++j)
          if (overlaps(v, e_iv[j])) {
            ++hits;
            which = j;
          }
        if (hits != 1) done = false;
        over[i] = which;
      }
      if (done) break;
    }
    for (std::size_t i = 0; i < f_roots.size(); ++i) out.fibers[over[i]].push_back(i);
  }
  for (const auto& fib : out.fibers)
    if (fib.size() != 2) throw std::logic_error("an embedding of E does not have two extensions to F");
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    RMType t;
    for (std::size_t j = 0; j < m; ++j) t.choice.push_back(out.fibers[j][(mask >> (m - 1 - j)) & 1]);
    out.types.push_back(std::move(t));
  }
  return out;
}

std::vector<RMType> enumerate_rm_types(const NumberField& E, const NumberField& F) { return rm_types(E, F).types; }

HilbertLilac hilbert_special_point(const NumberField& E, const NumberField& F, const RMType& t) {
  const RMTypeSet set = rm_types(E, F);
  if (std::find(set.types.begin(), set.types.end(), t) == set.types.end())
    throw Error(ErrorKind::invalid_input, "not an RM type for this pair of fields");
  const IntPoly& p = F.minpoly();
  const int n = F.degree();
  const auto un = static_cast<std::size_t>(n);
  HilbertLilac out;
  out.type = t;
  out.fx_roots = t.choice;
  std::sort(out.fx_roots.begin(), out.fx_roots.end());
  for (std::size_t i = 0; i < un; ++i)
    if (!std::binary_search(out.fx_roots.begin(), out.fx_roots.end(), i)) out.fy_roots.push_back(i);

  FieldVec gamma(un);
  if (E.degree() == 1)
    gamma[0] = 1;
  else
    gamma = *subfield_embed(E, F);
  out.e_action = multiplication_matrix(F, gamma);

  // Exact: M w(t) - gamma(t) w(t) vanishes mod p(t), so every eigenline,
  // and hence F_x and F_y, is stable under E.
  const std::vector<RatPoly> h = synthetic_rows(p);
  const Quotient K(p);
  const RatPoly g = to_poly(gamma);
  out.e_stable_exact = true;
  for (std::size_t i = 0; i < un; ++i) {
    RatPoly acc = scale(g * h[i], -1);
    for (std::size_t j = 0; j < un; ++j) acc = acc + scale(h[j], out.e_action[i][j]);
    if (!K.reduce(acc).is_zero()) out.e_stable_exact = false;
  }

  // Powers of the multiplication-by-alpha matrix for the projection P_x.
  FieldVec alpha(un);
  alpha[1] = 1;
  const auto Ma = multiplication_matrix(F, alpha);
  std::vector<std::vector<std::vector<BigRational>>> powers{std::vector<std::vector<BigRational>>(un, std::vector<BigRational>(un))};
  for (std::size_t i = 0; i < un; ++i) powers[0][i][i] = 1;
  for (std::size_t k = 1; k < un; ++k) {
    auto next = powers.back();
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        BigRational s = 0;
        for (std::size_t l = 0; l < un; ++l) s += powers.back()[i][l] * Ma[l][j];
        next[i][j] = s;
      }
    powers.push_back(std::move(next));
  }
  const RatPoly dp(derivative(p));

  std::vector<RealRoot> roots = F.embeddings().real_roots;
  for (unsigned long bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    const FixArith A(bits);
    std::vector<Fix> rf;
    for (auto& r : roots) rf.push_back(r.enclose(A));
    std::vector<std::vector<Fix>> W(un, std::vector<Fix>(un));
    for (std::size_t k = 0; k < un; ++k)
      for (std::size_t j = 0; j < un; ++j) W[j][k] = eval_fix(A, h[j], rf[k]);
    const Fix det = det_fix(A, W);
    if (det.contains_zero()) continue;

    // P_x = sum over chosen roots r of (p(x) / ((x - r) p'(r)))(M_alpha).
    std::vector<std::vector<Fix>> P(un, std::vector<Fix>(un, A.from_int(0)));
    for (std::size_t r : out.fx_roots) {
      const Fix inv_dp = A.div(A.from_int(1), eval_fix(A, dp, rf[r]));
      for (std::size_t j = 0; j < un; ++j) {
        const Fix c = A.mul(W[j][r], inv_dp);
        for (std::size_t a = 0; a < un; ++a)
          for (std::size_t b = 0; b < un; ++b)
            if (powers[j][a][b] != 0) P[a][b] = A.add(P[a][b], A.mul(c, A.from_rational(powers[j][a][b])));
      }
    }
    bool all_zero = true;
    BigInt worst = 0;
    for (std::size_t a = 0; a < un; ++a)
      for (std::size_t b = 0; b < un; ++b) {
        Fix c = A.from_int(0);
        for (std::size_t l = 0; l < un; ++l) {
          c = A.add(c, A.mul(A.from_rational(out.e_action[a][l]), P[l][b]));
          c = A.sub(c, A.mul(P[a][l], A.from_rational(out.e_action[l][b])));
        }
        all_zero = all_zero && c.contains_zero();
        worst = std::max(worst, max_abs(c));
      }
    const long log2_bound = static_cast<long>(mpz_sizeinbase(worst.get_mpz_t(), 2)) - static_cast<long>(bits);
    if (!all_zero) throw std::logic_error("projection does not commute with the E-action");
    if (log2_bound > -static_cast<long>(bits / 2)) continue;
    out.direct_sum_certified = true;
    out.commutator_certified = true;
    out.direct_sum_det_numeric = A.mid_decimal(det, 12);
    out.commutator_log2_bound = log2_bound;
    out.precision_bits = bits;
    break;
  }
  return out;
}

BigInt pfaffian(const Psi& s) { return s[0] * s[5] - s[1] * s[4] + s[2] * s[3]; }

SiegelPoint siegel_special_point(const NumberField& K) {
  if (K.degree() != 4 || K.signature() != std::pair<int, int>{2, 1}) {
    auto [r, c] = K.signature();
    throw Error(ErrorKind::wrong_signature,
                "expected a quartic of signature (2,1), got (" + std::to_string(r) + "," + std::to_string(c) + ")");
  }
  SiegelPoint pt;
  pt.poly = K.minpoly();
  pt.r1 = K.embeddings().real_roots[0];
  pt.r2 = K.embeddings().real_roots[1];
  for (unsigned long bits = kStartBits; bits <= kMaxBits; bits *= 2) {
    auto num = siegel_numerics(pt, bits);
    if (!num) continue;
    std::vector<std::vector<Fix>> m(4, std::vector<Fix>(4));
    for (std::size_t j = 0; j < 4; ++j) {
      m[j][0] = num->w1[j];
      m[j][1] = num->w2[j];
      m[j][2] = num->wz[j].re;
      m[j][3] = num->wz[j].im;
    }
    if (det_fix(num->A, m).contains_zero()) continue;
    pt.dims = {1, 1, 2};
    pt.dims_certified = true;
    break;
  }
  return pt;
}

int isotropy_gcd_degree(const IntPoly& p, const Psi& psi) {
  if (p.degree() != 4) throw Error(ErrorKind::invalid_input, "isotropy test needs a quartic");
  const Quotient K(p);
  const std::vector<RatPoly> h = synthetic_rows(p);  // h_j(s) as elements of K
  auto a = [&](int k) { return k <= 4 ? BigRational(p.coeff(k)) : BigRational(0); };
  using KPoly = std::vector<RatPoly>;
  auto trim = [](KPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
  };

  KPoly G(4), q(h.begin(), h.end());
  for (int m = 0; m < 4; ++m) {
    RatPoly c;
    for (std::size_t k = 0; k < 6; ++k) {
      if (psi[k] == 0) continue;
      auto [i, j] = kPairs[k];
      c = c + scale(scale(h[static_cast<std::size_t>(i)], a(j + 1 + m)) - scale(h[static_cast<std::size_t>(j)], a(i + 1 + m)),
                    BigRational(psi[k]));
    }
    G[static_cast<std::size_t>(m)] = K.reduce(c);
  }
  trim(G);
  trim(q);
  if (G.empty()) return static_cast<int>(q.size()) - 1;

  // Euclid in K[t].
  while (!G.empty()) {
    KPoly r = q;
    const RatPoly lead_inv = K.inv(G.back());
    while (r.size() >= G.size()) {
      const RatPoly f = K.mul(r.back(), lead_inv);
      const std::size_t shift = r.size() - G.size();
      for (std::size_t i = 0; i < G.size(); ++i) r[shift + i] = K.reduce(r[shift + i] - K.mul(f, G[i]));
      if (!r.back().is_zero()) throw std::logic_error("leading term survived the division step");
      trim(r);
    }
    q = std::move(G);
    G = std::move(r);
  }
  return static_cast<int>(q.size()) - 1;
}

PsiVerdict verify_symplectic(SiegelPoint& point, const Psi& psi) {
  PsiVerdict v;
  if (pfaffian(psi) == 0) {
    v.reason = "degenerate";
    v.witness = "pfaffian = 0";
    v.conjugation_symmetric = true;
    return v;
  }
  const SiegelNumerics num = siegel_numerics_at_least(point, 128);
  const FixArith& A = num.A;
  std::vector<CFix> wzbar;
  for (const auto& c : num.wz) wzbar.push_back(conj(A, c));
  const CFix fx_f = pair_value(A, plucker(A, num.w1, num.wz), psi);
  const CFix fx_fbar = pair_value(A, plucker(A, num.w1, wzbar), psi);
  const CFix fy_fbar = pair_value(A, plucker(A, num.w2, wzbar), psi);
  const CFix fy_f = pair_value(A, plucker(A, num.w2, num.wz), psi);
  auto mirrors = [&](const CFix& x, const CFix& y) {
    return overlaps(x.re, y.re) && overlaps(x.im, A.neg(y.im));
  };
  v.conjugation_symmetric = mirrors(fx_f, fx_fbar) && mirrors(fy_fbar, fy_f);

  const bool isotropic = isotropy_gcd_degree(point.poly, psi) >= 2;
  if (isotropic) {
    if (!fx_f.re.contains_zero() || !fx_f.im.contains_zero() || !fy_fbar.re.contains_zero() || !fy_fbar.im.contains_zero())
      throw std::logic_error("exact isotropy contradicts the enclosure");
    v.accepted = true;
    v.reason = "accepted";
    return v;
  }
  // Both conditions share one exact test, so a failure shows up on F_x + F.
  v.reason = "fx_f_not_isotropic";
  v.witness = "psi(w(r1), w(z)) = " + describe(A, fx_f) + "; psi(w(r2), w(zbar)) = " + describe(A, fy_fbar);
  return v;
}

PsiSearch find_compatible_symplectic(SiegelPoint& point, unsigned H) {
  PsiSearch out;
  const SiegelNumerics num = siegel_numerics_at_least(point, 128);
  const FixArith& A = num.A;
  const auto pl = plucker(A, num.w1, num.wz);
  StepCounter steps("symplectic search");
  for (unsigned h = 1; h <= H; ++h) {
    const long hl = static_cast<long>(h);
    std::array<long, 6> digits;
    digits.fill(-hl);
    for (;;) {
      bool top = false;
      for (long d : digits) top = top || d == hl || d == -hl;
      if (top) {
        steps.tick();
        ++out.examined;
        Psi psi;
        for (std::size_t k = 0; k < 6; ++k) psi[k] = digits[k];
        if (pfaffian(psi) != 0) {
          ++out.nondegenerate;
          const CFix val = pair_value(A, pl, psi);
          if (val.re.contains_zero() && val.im.contains_zero()) {
            ++out.exact_checks;
            if (verify_symplectic(point, psi).accepted) {
              out.psi = psi;
              return out;
            }
          }
        }
      }
      std::size_t k = 6;
      while (k > 0 && digits[k - 1] == hl) digits[--k] = -hl;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  return out;
}

std::string to_string(const Psi& s) {
  const BigInt m[4][4] = {{0, s[0], s[1], s[2]}, {-s[0], 0, s[3], s[4]}, {-s[1], -s[3], 0, s[5]}, {-s[2], -s[4], -s[5], 0}};
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < 4; ++j) out += (j ? "," : "") + m[i][j].get_str();
    out += "]";
  }
  return out + "]";
}

std::string to_string(const FieldVec& x, char var) {
  BigInt den = 1;
  for (const auto& c : x) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> ints;
  for (const auto& c : x) ints.push_back(BigInt(c * den));
  const std::string body = to_string(IntPoly(ints), var);
  if (den == 1) return body;
  const bool single = std::count_if(ints.begin(), ints.end(), [](const BigInt& v) { return v != 0; }) <= 1;
  return (single ? body : "(" + body + ")") + "/" + den.get_str();
}

}  // namespace rmgeo
