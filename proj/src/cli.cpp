#include "rmgeo/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <regex>

#include "rmgeo/cfrac.hpp"
#include "rmgeo/fields.hpp"
#include "rmgeo/geodesic.hpp"
#include "rmgeo/nct.hpp"
#include "rmgeo/qforms.hpp"

namespace rmgeo::cli {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
  int digits = 20;
};

// Integers that fit a machine word are JSON numbers, larger ones decimal strings.
json jint(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

json jform(const IndefForm& f) { return json::array({jint(f.a), jint(f.b), jint(f.c)}); }

BigInt parse_int(const std::string& s) {
  static const std::regex re(R"(\s*[+-]?[0-9]+\s*)");
  if (!std::regex_match(s, re)) throw Error(ErrorKind::parse_error, "not an integer: " + s);
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c) || c == '+'; }), t.end());
  return BigInt(t);
}

unsigned long env_ulong(const char* name, unsigned long fallback, unsigned long lo, unsigned long hi) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const BigInt n = parse_int(v);
  if (n < lo || n > hi) throw Error(ErrorKind::parse_error, std::string(name) + " out of range");
  return n.get_ui();
}

bool valid_discriminant(const BigInt& D) {
  if (D <= 0 || is_perfect_square(D)) return false;
  const BigInt r = D % 4;
  return r == 0 || r == 1;
}

// ---- text rendering -------------------------------------------------------

std::string flat(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + flat(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + flat(x);
    return s;
  }
  return v.dump();
}

void render_text(const json& j, std::ostream& out) {
  if (j.is_array()) {
    for (const auto& row : j) out << flat(row) << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << k << ":\n";
      for (const auto& row : v) out << "  " << flat(row) << '\n';
    } else if (v.is_object()) {
      out << k << ":\n";
      for (const auto& [k2, v2] : v.items()) out << "  " << k2 << ": " << flat(v2) << '\n';
    } else {
      out << k << ": " << flat(v) << '\n';
    }
  }
}

// ---- subcommands ----------------------------------------------------------

json classify_json(const GeodesicPoint& p) {
  const BMTClass b = classify_bmt(p);
  const MTClass m = mt_of(b);
  json r;
  r["bmt"] = to_string(b.kind);
  if (b.kind == BMTClass::Kind::rm_torus) r["d"] = jint(b.d);
  if (b.kind == BMTClass::Kind::split_torus_conj)
    r["conjugator"] = json::array({jint(b.conjugator.a), jint(b.conjugator.b), jint(b.conjugator.c), jint(b.conjugator.d)});
  if (b.kind == BMTClass::Kind::borel) r["rational_slope"] = b.rational_slope == 0 ? "x" : "y";
  r["mt"] = to_string(m.kind);
  r["dynamical"] = to_string(dynamical_type(m));
  return r;
}

GeodesicPoint matrix_point(const std::string& entries, const std::string& field) {
  std::vector<Number> e;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = entries.find(',', start);
    e.push_back(parse_number(entries.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (e.size() != 4) throw Error(ErrorKind::parse_error, "--matrix needs four comma-separated entries");
  if (!field.empty()) {
    const Number f = parse_number(field);
    if (f.is_rational()) throw Error(ErrorKind::invalid_radicand, "--field must be a quadratic irrationality");
    for (const Number& x : e)
      if (!x.is_rational() && *x.radicand() != *f.radicand())
        throw Error(ErrorKind::incompatible_fields, to_string(x) + " is not in the field of " + field);
  }
  return point_from_conjugator(NumMatrix2{e[0], e[1], e[2], e[3]});
}

json cf_json(const std::string& expr) {
  const Number x = parse_number(expr);
  const CFExpansion cf = cf_expand(x);
  json r;
  r["input"] = to_string(x);
  json pre = json::array(), per = json::array();
  for (const BigInt& a : cf.preperiod) pre.push_back(jint(a));
  for (const BigInt& a : cf.period) per.push_back(jint(a));
  r["preperiod"] = pre;
  r["period"] = per;
  r["expansion"] = to_string(cf);
  return r;
}

json classgroup_json(const BigInt& D) {
  const FormClassGroup G = class_group(D);
  const WideClassGroup W = wide_class_group(D);
  const OrderUnit u = order_unit(D);
  json r;
  r["D"] = jint(D);
  r["h_plus"] = G.order();
  r["h_wide"] = W.h;
  json inv = json::array();
  for (const BigInt& d : G.invariant_factors) inv.push_back(jint(d));
  r["invariant_factors"] = inv;
  r["unit"] = {{"epsilon", to_string(u.epsilon)}, {"norm", u.norm}};
  json cyc = json::array();
  for (const IndefForm& f : G.representatives) cyc.push_back(jform(f));
  r["cycles"] = cyc;
  return r;
}

json units_json(const BigInt& D, const Settings& s) {
  validate_discriminant(D);
  const OrderUnit u = order_unit(D);
  json r;
  r["D"] = jint(D);
  r["epsilon"] = to_string(u.epsilon);
  r["t"] = jint(u.t);
  r["u"] = jint(u.u);
  r["norm"] = u.norm;
  r["epsilon_plus"] = to_string(u.epsilon_plus);
  r["regulator_numeric"] = log_decimal(u.epsilon, s.digits);
  return r;
}

json geodesics_json(const BigInt& D, const Settings& s) {
  json rows = json::array();
  for (const auto& cycle : proper_classes(D)) {
    const ClosedGeodesic g = class_to_geodesic(D, cycle.front());
    json c = json::array();
    for (const IndefForm& f : g.cycle) c.push_back(jform(f));
    rows.push_back({{"cycle", c},
                    {"slopes", json::array({to_string(g.slope_pair[0]), to_string(g.slope_pair[1])})},
                    {"length_numeric", g.length_numeric(s.digits)}});
  }
  return rows;
}

json census_json(const BigInt& dmax, const Settings& s) {
  json rows = json::array();
  for (BigInt D = 5; D <= dmax; ++D) {
    if (!valid_discriminant(D)) continue;
    const auto cycles = proper_classes(D);
    const OrderUnit u = order_unit(D);
    std::string lo, hi;
    for (const auto& c : cycles) {
      const std::string len = class_to_geodesic(D, c.front()).length_numeric(s.digits);
      // every class of one order has the same length; keep the bookkeeping general anyway
      if (lo.empty() || std::stod(len) < std::stod(lo)) lo = len;
      if (hi.empty() || std::stod(len) > std::stod(hi)) hi = len;
    }
    rows.push_back({{"D", jint(D)},
                    {"h_plus", cycles.size()},
                    {"h", wide_class_group(D).h},
                    {"unit_norm", u.norm},
                    {"regulator_numeric", log_decimal(u.epsilon, s.digits)},
                    {"geodesics", cycles.size()},
                    {"min_length_numeric", lo},
                    {"max_length_numeric", hi}});
  }
  return rows;
}

json psi_matrix(const Psi& p) {
  const int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  json m = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) {
      const int k = idx[i][j];
      if (k < 0) row.push_back(0);
      else row.push_back(jint(i < j ? p[static_cast<std::size_t>(k)] : BigInt(-p[static_cast<std::size_t>(k)])));
    }
    m.push_back(row);
  }
  return m;
}

json hilbert_json(const std::string& e_text, const std::string& f_text, bool& all_valid) {
  const NumberField E = NumberField::parse(e_text), F = NumberField::parse(f_text);
  const RMTypeSet set = rm_types(E, F);
  json r;
  r["E"] = to_string(E.minpoly());
  r["F"] = to_string(F.minpoly());
  if (E.degree() == 2) {
    r["d_E"] = jint(quadratic_radicand(E));
    r["sqrt_d_E"] = to_string(*subfield_embed(E, F));
  }
  r["e_generator"] = to_string(set.e_generator);
  r["fibers"] = set.fibers;
  json types = json::array();
  all_valid = true;
  for (const RMType& t : set.types) {
    const HilbertLilac h = hilbert_special_point(E, F, t);
    all_valid = all_valid && h.valid();
    types.push_back({{"choice", t.choice},
                     {"fx_roots", h.fx_roots},
                     {"fy_roots", h.fy_roots},
                     {"direct_sum_certified", h.direct_sum_certified},
                     {"e_stable_exact", h.e_stable_exact},
                     {"commutator_certified", h.commutator_certified},
                     {"valid", h.valid()},
                     {"direct_sum_det_numeric", h.direct_sum_det_numeric},
                     {"commutator_log2_bound", h.commutator_log2_bound},
                     {"precision_bits", h.precision_bits}});
  }
  r["rm_types"] = types;
  return r;
}

json siegel_json(const std::string& k_text, unsigned H) {
  const NumberField K = NumberField::parse(k_text);
  SiegelPoint p = siegel_special_point(K);
  const PsiSearch s = find_compatible_symplectic(p, H);
  json r;
  r["K"] = to_string(K.minpoly());
  r["signature"] = json::array({K.signature().first, K.signature().second});
  r["dims"] = p.dims;
  r["dims_certified"] = p.dims_certified;
  r["psi_bound"] = H;
  json search;
  search["found"] = s.psi.has_value();
  search["psi"] = s.psi ? psi_matrix(*s.psi) : json(nullptr);
  search["examined"] = s.examined;
  search["nondegenerate"] = s.nondegenerate;
  search["exact_checks"] = s.exact_checks;
  if (s.psi) {
    const PsiVerdict v = verify_symplectic(p, *s.psi);
    search["verdict"] = v.reason;
    search["conjugation_symmetric"] = v.conjugation_symmetric;
  }
  r["psi_search"] = search;
  return r;
}

int domain_code(const Error& e) { return e.kind() == ErrorKind::parse_error ? usage : domain; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  try {
    settings.digits = static_cast<int>(env_ulong("RMGEO_PRECISION", 20, 1, 1000));
    set_step_budget(env_ulong("RMGEO_STEP_BUDGET", step_budget(), 0, ~0UL));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  CLI::App app{"Exact geodesic, class group and lilac computations", "rmgeo"};
  app.require_subcommand(1);
  bool as_json = false;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit one JSON document"); };

  std::string sx, sy, matrix, field;
  auto* classify = app.add_subcommand("classify", "Mumford-Tate classification of a geodesic point");
  auto* o_sx = classify->add_option("--sx", sx, "slope of F_x (expression, inf or generic:NAME)");
  auto* o_sy = classify->add_option("--sy", sy, "slope of F_y");
  auto* o_matrix = classify->add_option("--matrix", matrix, "conjugator a,b,c,d");
  classify->add_option("--field", field, "field of the matrix entries, e.g. sqrt(5)")->needs(o_matrix);
  o_sx->needs(o_sy)->excludes(o_matrix);
  o_sy->needs(o_sx)->excludes(o_matrix);
  json_flag(classify);

  std::string expr, expr2;
  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  cf->add_option("expr", expr)->required();
  json_flag(cf);

  auto* equiv = app.add_subcommand("equiv", "GL2(Z) equivalence of two slopes");
  equiv->add_option("x", expr)->required();
  equiv->add_option("y", expr2)->required();
  json_flag(equiv);

  std::string dtext;
  auto* classgroup = app.add_subcommand("classgroup", "proper class group of discriminant D");
  classgroup->add_option("D", dtext)->required();
  json_flag(classgroup);
  auto* units = app.add_subcommand("units", "fundamental units of the order of discriminant D");
  units->add_option("D", dtext)->required();
  json_flag(units);
  auto* geodesics = app.add_subcommand("geodesics", "closed geodesics of discriminant D");
  geodesics->add_option("D", dtext)->required();
  json_flag(geodesics);
  auto* census = app.add_subcommand("census", "class numbers and lengths for every discriminant up to a bound");
  census->add_option("--dmax", dtext)->required();
  json_flag(census);

  std::string theta;
  auto* nct = app.add_subcommand("nct", "noncommutative tori and lilacs");
  nct->require_subcommand(1);
  auto* nct_equiv = nct->add_subcommand("equiv", "Morita equivalence");
  nct_equiv->add_option("theta1", expr)->required();
  nct_equiv->add_option("theta2", expr2)->required();
  json_flag(nct_equiv);
  auto* nct_member = nct->add_subcommand("member", "membership in Z + Z theta");
  nct_member->add_option("x", expr)->required();
  nct_member->add_option("--theta", theta)->required();
  json_flag(nct_member);
  auto* nct_levels = nct->add_subcommand("levels", "number of level-N structures");
  nct_levels->add_option("N", dtext)->required();
  json_flag(nct_levels);
  json_flag(nct);

  std::string e_poly, f_poly, k_poly;
  unsigned psi_bound = 3;
  auto* hilbert = app.add_subcommand("hilbert", "RM types and Hilbert special points");
  hilbert->add_option("--E", e_poly)->required();
  hilbert->add_option("--F", f_poly)->required();
  json_flag(hilbert);
  auto* siegel = app.add_subcommand("siegel", "Siegel special point and symplectic form search");
  siegel->add_option("--K", k_poly)->required();
  siegel->add_option("--psi-bound", psi_bound, "height bound of the search")->check(CLI::Range(0u, 64u));
  json_flag(siegel);

  try {
    // A leading space keeps values such as "-sqrt(2)" from reading as options;
    // the expression parsers ignore whitespace.
    static const std::regex option_like(R"(--?[A-Za-z][A-Za-z0-9-]*(=.*)?|--)");
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it)
      rev.push_back(!it->empty() && it->front() == '-' && !std::regex_match(*it, option_like) ? " " + *it : *it);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    json result;
    int code = ok;
    std::string text;  // replaces the generic rendering when set

    if (classify->parsed()) {
      if (matrix.empty() && sx.empty()) throw Error(ErrorKind::parse_error, "give --sx/--sy or --matrix");
      result = classify_json(matrix.empty() ? GeodesicPoint(parse_slope(sx), parse_slope(sy)) : matrix_point(matrix, field));
    } else if (cf->parsed()) {
      result = cf_json(expr);
      text = result["expansion"].get<std::string>();
    } else if (equiv->parsed()) {
      const bool eq = gl2z_equivalent(parse_slope(expr), parse_slope(expr2));
      result = {{"x", to_string(parse_slope(expr))}, {"y", to_string(parse_slope(expr2))}, {"equivalent", eq}};
      text = eq ? "equivalent" : "inequivalent";
      code = eq ? ok : negative;
    } else if (classgroup->parsed()) {
      result = classgroup_json(parse_int(dtext));
    } else if (units->parsed()) {
      result = units_json(parse_int(dtext), settings);
    } else if (geodesics->parsed()) {
      result = geodesics_json(parse_int(dtext), settings);
    } else if (census->parsed()) {
      result = census_json(parse_int(dtext), settings);
      if (result.empty()) text = "no valid discriminants";
    } else if (nct_equiv->parsed()) {
      const Slope a = parse_slope(expr), b = parse_slope(expr2);
      const bool morita = morita_equivalent(a, b);
      result = {{"theta1", to_string(a)}, {"theta2", to_string(b)}, {"morita_equivalent", morita}, {"lilac_iso", lilac_iso({a}, {b})}};
      text = morita ? "equivalent" : "inequivalent";
      code = morita ? ok : negative;
    } else if (nct_member->parsed()) {
      const Number x = parse_number(expr);
      const Slope t = parse_slope(theta);
      const auto mn = pseudolattice_member(x, t);
      result = {{"x", to_string(x)}, {"theta", to_string(t)}, {"member", mn.has_value()}};
      if (mn) {
        result["m"] = jint(mn->first);
        result["n"] = jint(mn->second);
        text = to_string(x) + " = " + mn->first.get_str() + " + " + mn->second.get_str() + "*theta";
      } else {
        text = "none";
        code = negative;
      }
    } else if (nct_levels->parsed()) {
      const BigInt N = parse_int(dtext);
      result = {{"N", jint(N)}, {"count", jint(count_level_structures(N))}};
      if (N <= 8) result["count_by_enumeration"] = jint(count_level_structures_by_enumeration(N.get_ui()));
    } else if (hilbert->parsed()) {
      bool all_valid = false;
      result = hilbert_json(e_poly, f_poly, all_valid);
      code = all_valid ? ok : negative;
    } else if (siegel->parsed()) {
      result = siegel_json(k_poly, psi_bound);
    }

    if (as_json) out << result.dump() << '\n';
    else if (!text.empty()) out << text << '\n';
    else render_text(result, out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return domain_code(e);
  }
}

}  // namespace rmgeo::cli
