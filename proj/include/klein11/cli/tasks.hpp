#pragma once

// The tasks behind each subcommand.  Each returns a Suite; none of them
// prints or exits.

#include <complex>
#include <cctype>
#include <string>
#include <vector>

#include "klein11/cli/certificate.hpp"
#include "klein11/covers/census.hpp"
#include "klein11/covers/schreier_sims.hpp"
#include "klein11/group660/group_table.hpp"
#include "klein11/qmod/identities.hpp"
#include "klein11/qmod/spotcheck.hpp"

namespace klein11 {

struct TaskOptions {
  long order = 40;     // branch truncation
  long qorder = 1200;  // u-truncation
  bool conjugate = false;
  std::string chart = "I";
  std::string form = "z";
  std::string identity = "all";
  std::complex<double> omega{0.0, 1.5};
  double tolerance = 1e-8;
  unsigned digits = 40;
};

namespace task_detail {

inline json perm_json(const Perm11& p) { return p.one_line(); }

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

inline json census_json(const std::map<long, int>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

// x -> conjugate of x when the second system is selected.
inline Cyclotomic sign_system(const Cyclotomic& x, bool conjugate) { return conjugate ? galois_conj(x, 10) : x; }

inline ZPoly sign_system(const ZPoly& p, bool conjugate) {
  std::vector<Cyclotomic> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(sign_system(p.coefficient(i), conjugate));
  return ZPoly(c);
}

inline void compare(Suite& s, const std::string& name, const Cyclotomic& got, const Cyclotomic& want) {
  const bool ok = got == want;
  s.check(name, ok, pretty(got), ok ? json(nullptr) : json{{"derived", exact_value(got)}, {"expected", exact_value(want)}});
  s.results[name] = exact_value(got);
}

inline std::string order_text(long got, long need) {
  return "vanishes to u^" + std::to_string(got) + " (required " + std::to_string(need) + ")";
}

}  // namespace task_detail

// ---- covers ----

inline Suite task_covers_census() {
  return run_suite("covers census", json::object(), [](Suite& s) {
    using namespace task_detail;
    const auto census = enumerate_covers();
    int accepted = 0;
    bool agree = true;
    json classes = json::array();
    for (const auto& c : census.classes) {
      const auto order = monodromy_order(c);
      const auto v = period_criterion(c);
      if (order == 660) ++accepted;
      if ((order == 660) != v.accept) agree = false;
      classes.push_back({{"sigma_1", perm_json(c.sigma_1)},
                         {"sigma_0", perm_json(c.sigma_0)},
                         {"monodromy_order", order},
                         {"ts3", perm_json(v.ts3)},
                         {"ts3_cycle_type", v.witness_cycle_type},
                         {"ts3_order", v.witness_order},
                         {"accepted", v.accept}});
    }
    s.results["candidates"] = census.candidates;
    s.results["solutions"] = census.solutions;
    s.results["classes"] = classes;
    const auto n = census.classes.size();
    s.check("ten classes", n == 10, std::to_string(n) + " classes");
    s.check("two of order 660", accepted == 2, std::to_string(accepted) + " accepted");
    s.check("criterion agrees with monodromy order", agree);

    // A rejected diagram: T S^3 has cycle type 7, 2, 2.
    const Perm11 rejected = Perm11::from_images({5, 2, 4, 3, 1, 6, 11, 9, 8, 10, 7});
    const auto idx = find_class(census.classes, rejected);
    if (!idx) {
      s.check("rejected example is a class", false, "", json{{"sigma_1", perm_json(rejected)}});
    } else {
      const auto v = period_criterion(rejected, standard_eleven_cycle());
      const bool ok = !v.accept && v.witness_cycle_type == std::vector<int>{7, 2, 2} && v.witness_order == 14 &&
                      v.ts3.one_line() == "8,5,7,6,4,9,3,1,11,2,10";
      s.check("rejected example", ok,
              "TS^3 = " + v.ts3.one_line() + ", cycle type " + join(v.witness_cycle_type) + ", order " +
                  std::to_string(v.witness_order),
              ok ? json(nullptr) : json{{"ts3", perm_json(v.ts3)}});
    }
    s.text.push_back("classes=" + std::to_string(n) + " accepted=" + std::to_string(accepted));
  });
}

// ---- group and invariants ----

inline Suite task_group_verify(const TaskOptions& o) {
  return run_suite("group verify", json{{"conjugate", o.conjugate}}, [&](Suite& s) {
    using namespace task_detail;
    const auto& G = GroupTable::instance();
    s.check("660 elements", G.size() == 660, std::to_string(G.size()) + " elements");
    const std::map<long, int> want{{1, 1}, {2, 55}, {3, 110}, {5, 264}, {6, 110}, {11, 120}};
    const auto census = G.order_census();
    s.results["order_census"] = census_json(census);
    s.check("order census", census == want, census_json(census).dump(), census_json(census));

    auto proj_id = [](const std::string& w) { return ProjMatrix5(word_matrix(w)).is_identity(); };
    const bool s11 = matrix_power(generator_S(), 11) == identity5<Cyclotomic>();
    const bool t2 = generator_T() * generator_T() == identity5<Cyclotomic>();
    s.check("S^11 = 1", s11);
    s.check("T^2 = 1", t2);
    s.check("C = S6TS2TS6T", ProjMatrix5(word_matrix("S6TS2TS6T")) == ProjMatrix5(generator_C()));
    for (const std::string w : {"U5", "V2", "UVUVUV"}) s.check(w + " = 1", proj_id(w));

    const auto& nf = build_named_forms(o.conjugate);
    const std::vector<NamedMatrix> st{named("S"), named("T")};
    auto invariant_check = [&](const std::string& name, const SparsePoly& p, const std::vector<NamedMatrix>& els) {
      const auto r = is_invariant(p, els);
      s.check(name, r.invariant, r.invariant ? "" : "fails at " + r.witness, r.invariant ? json(nullptr) : json(r.witness));
    };
    invariant_check("nabla invariant under S, T", nf.nabla, st);
    invariant_check("C invariant under S, T", nf.Cform, st);
    invariant_check("H invariant under S, T, C", nf.H, {named("S"), named("T"), named("C")});
    const std::vector<NamedMatrix> sub{named("C"), named("S-1TS")};
    invariant_check("phi0 invariant under C, V", nf.phi[0], sub);
    invariant_check("f0 invariant under C, V", nf.f[0], sub);
    for (const auto& [name, p] : {std::pair<std::string, const SparsePoly*>{"phi0", &nf.phi[0]}, {"f0", &nf.f[0]}}) {
      const auto r = is_invariant(*p, {named("S")});
      s.check(name + " not invariant under S", !r.invariant, "witness " + r.witness);
      s.results[name + "_witness"] = r.witness;
    }
    SparsePoly sq;
    for (const auto& p : nf.p) sq += p * p;
    sq = o.conjugate ? galois_conj(sq, 10) : sq;
    const Cyclotomic ratio = sign_system((Cyclotomic(-1) + sqrt_m11()) / Cyclotomic(12), o.conjugate);
    const bool ok = nf.phi[0] == sq.scaled(ratio);
    s.check("phi0 = ratio * sum p^2", ok, pretty(ratio));
    s.results["phi0_ratio"] = exact_value(ratio);
    const bool hess = hessian_matrix(to_rational(nf.nabla)) == [&] {
      auto m = nf.hessian_matrix;
      for (auto& row : m)
        for (auto& e : row) e = e.scaled(Rational(2));
      return m;
    }();
    s.check("matrix is half the Hessian of nabla", hess);
    s.check("H = det, degree 5", nf.H.degree() == 5 && nf.H == to_cyclotomic(det5(nf.hessian_matrix)),
            "degree " + std::to_string(nf.H.degree()));
    s.results["C_terms"] = nf.Cform.size();
    s.results["C_scale"] = exact_value(nf.c_average.scale);
  });
}

// ---- curve ----

inline Suite task_curve_verify(const TaskOptions& o) {
  return run_suite("curve verify", json{{"order", o.order}}, [&](Suite& s) {
    const auto& nf = build_named_forms(o.conjugate);
    const auto cc = lift_charts(nf, o.order);
    long worst = LONG_MAX;
    for (const auto& r : cc.residual_orders)
      for (long x : r) worst = std::min(worst, x);
    s.check("15 minors vanish at all five points", minors_vanish(cc), task_detail::order_text(worst, o.order),
            json{{"lowest_residual_order", worst}});
    json leads = json::object();
    for (const auto& c : cc.charts) {
      json l = json::array();
      for (const auto& ser : c.series) l.push_back(ser.valuation() ? json(*ser.valuation()) : json(nullptr));
      leads[c.label] = l;
    }
    s.results["leading_orders"] = leads;
    std::array<long, 5> sums{};
    const long deg = curve_degree_certificate(cc.charts, &sums);
    s.results["degree"] = deg;
    s.results["hyperplane_sums"] = sums;
    s.check("degree 20", deg == 20, std::to_string(deg));
    const auto g = genus_certificate();
    s.check("genus 26", g.genus == Rational(26), g.genus.get_str());
    s.check("without a third period: -139", g.without_third == Rational(-139), g.without_third.get_str());
    s.check("third period 3: 81", g.with_third_three == Rational(81), g.with_third_three.get_str());
    s.results["genus"] = exact_value(g.genus);
    s.results["genus_without_third"] = exact_value(g.without_third);
    s.results["genus_third_three"] = exact_value(g.with_third_three);
  });
}

// ---- resolvents ----

inline Suite task_resolvent_z(const TaskOptions& o) {
  json params{{"form", "z"}, {"order", o.order}, {"chart", o.chart}, {"conjugate", o.conjugate}};
  return run_suite("resolvent derive", params, [&](Suite& s) {
    using namespace task_detail;
    const auto& nf = build_named_forms(o.conjugate);
    const auto chart = lift_chart(nf, o.chart, o.order);
    const auto r = derive_resolvent_z(nf, chart);
    const Cyclotomic one(1), g = sqrt_m11();
    auto half = [](const Cyclotomic& x) { return x / Cyclotomic(2); };
    auto sys = [&](const Cyclotomic& x) { return sign_system(x, o.conjugate); };
    const std::vector<std::tuple<std::string, Cyclotomic, Cyclotomic>> constants{
        {"A", r.A, Cyclotomic(-3)},
        {"B", r.B, sys(Cyclotomic(5) - g)},
        {"a", r.a, one},
        {"b", r.b, sys(Cyclotomic(-3) * half(one + g))},
        {"c", r.c, sys(half(Cyclotomic(7) - g))},
        {"A1", r.A1, Cyclotomic(4)},
        {"B1", r.B1, sys(half(Cyclotomic(7) - Cyclotomic(5) * g))},
        {"Gamma", r.Gamma, sys(Cyclotomic(4) - Cyclotomic(6) * g)},
        {"alpha", r.alpha, Cyclotomic(-2)},
        {"beta", r.beta, sys(Cyclotomic(3) * half(one - g))},
        {"gamma", r.gamma, sys(Cyclotomic(5) + g)},
        {"delta", r.delta, sys(Cyclotomic(-3) * half(Cyclotomic(5) + g))}};
    for (const auto& [name, got, want] : constants) {
      compare(s, name, got, want);
    }
    s.check("k", r.k == make_rational(-1, 1728), r.k.get_str());
    s.results["k"] = exact_value(r.k);
    s.check("two determinations of the constant agree", r.kappa_series == r.kappa_poly, pretty(r.kappa_poly));
    s.check("C^3/nabla^11 is the product form", r.P == r.numerator_J());
    s.results["matched_orders"] = r.matched_orders;
    const auto p = printed_resolvent_z();
    const auto diff = j_numerator_difference(sign_system(p.quad, o.conjugate), sign_system(p.cubic, o.conjugate),
                                      sign_system(p.cubic2, o.conjugate), sign_system(p.quartic, o.conjugate));
    const bool unit = diff == ZPoly(Cyclotomic(-1728));
    s.check("numerator(J) - numerator(J-1) = -1728", unit, "degree " + std::to_string(diff.degree()),
            unit ? json(nullptr) : json(pretty(diff.coefficient(0))));
  });
}

inline Suite task_resolvent_xi(const TaskOptions& o) {
  json params{{"form", "xi"}, {"order", o.order}, {"chart", o.chart}, {"conjugate", o.conjugate}};
  return run_suite("resolvent derive", params, [&](Suite& s) {
    using namespace task_detail;
    const auto& nf = build_named_forms(o.conjugate);
    const auto chart = lift_chart(nf, o.chart, o.order);
    const auto x = derive_resolvent_xi(nf, chart);
    const auto printed = printed_xi_constants();
    const std::array<std::pair<std::string, Cyclotomic>, 6> got{
        {{"alpha", x.alpha}, {"beta", x.beta}, {"gamma", x.gamma}, {"delta", x.delta}, {"epsilon", x.epsilon}, {"zeta", x.zeta}}};
    for (int i = 0; i < 6; ++i) {
      compare(s, got[i].first, got[i].second, sign_system(printed[i], o.conjugate));
    }
    s.results["equations"] = x.equations;
    s.results["residual_order"] = x.residual_order;
    compare(s, "xi^4 coefficient", x.xi4, Cyclotomic(-132));
    const auto p = printed_resolvent_z();
    const bool elim = xi_to_z_elimination(x, sign_system(p.quad, o.conjugate), sign_system(p.cubic, o.conjugate), p.k)
                          .is_zero();
    s.check("degree-22 relation reduces to the z-resolvent", elim);
    const auto b = verify_bridge(nf, chart);
    s.check("homogenized bridge vanishes", b.ok && b.homogeneous_residual >= o.order,
            "residual order " + std::to_string(b.homogeneous_residual) + ", printed inhomogeneous form " +
                std::to_string(b.inhomogeneous_residual),
            json{{"homogeneous", b.homogeneous_residual}, {"xi", b.xi_residual}});
    s.results["bridge"] = {{"homogeneous_residual", b.homogeneous_residual},
                           {"inhomogeneous_residual", b.inhomogeneous_residual},
                           {"xi_residual", b.xi_residual}};
  });
}

inline Suite task_resolvent(const TaskOptions& o) {
  if (o.form == "z") return task_resolvent_z(o);
  if (o.form == "xi") return task_resolvent_xi(o);
  throw ParseError("unknown resolvent form '" + o.form + "'");
}

// ---- q-series ----

inline const std::vector<std::string>& qmod_identities() {
  static const std::vector<std::string> ids{"33", "29", "28", "36", "hik", "J"};
  return ids;
}

inline Suite task_qmod_verify(const TaskOptions& o) {
  const std::string id = o.identity;
  if (std::find(qmod_identities().begin(), qmod_identities().end(), id) == qmod_identities().end())
    throw ParseError("unknown identity '" + id + "'");
  return run_suite("qmod verify " + id, json{{"identity", id}, {"qorder", o.qorder}}, [&](Suite& s) {
    using task_detail::order_text;
    const long N = o.qorder;
    // The q-series side always uses the unconjugated forms.
    const auto& nf = build_named_forms(false);
    if (id == "33") {
      const auto t = build_theta(N);
      const auto r = verify_brioschi(t, N);
      const auto r2 = verify_brioschi(2 * N);
      s.check("A0^5 + A1 A4 A5 A9 A3 = O(u^N)", true, order_text(r.residual_order, N));
      s.check("also at 2N", true, order_text(r2.residual_order, 2 * N));
      s.results["residual_order"] = r.residual_order;
      s.results["residual_order_2N"] = r2.residual_order;
      json d = json::array();
      for (const auto& x : t.discrepancies)
        d.push_back({{"index", x.index}, {"u_exponent", x.exponent}, {"printed", x.printed.get_str()},
                     {"closed_formula", x.general.get_str()}});
      s.results["printed_vs_closed_formula"] = d;
      json leads = json::array();
      for (const auto& l : theta_leads(t))
        leads.push_back({{"index", l.index}, {"relative_u_exponent", l.relative_exponent}, {"ds_power", l.ds_power},
                         {"ds_sign", l.ds_sign}});
      s.results["leading_terms"] = leads;
      const std::array<int, 6> signs{-1, 1, -1, -1, 1, 1};
      bool ok = true;
      for (int i = 0; i < 6; ++i) ok = ok && theta_leads(t)[i].ds_sign == signs[i];
      s.check("leading signs -,+,-,-,+,+ in ds", ok, "", leads);
    } else if (id == "29" || id == "28") {
      const auto r = verify_multiplier(N);
      const auto& orders = id == "29" ? r.squared_roots : r.degree12_equation;
      long worst = LONG_MAX;
      for (long x : orders) worst = std::min(worst, x);
      s.check(id == "29" ? "squared root formulas for all twelve roots" : "all twelve roots satisfy the degree-12 equation",
              worst >= N, order_text(worst, N));
      s.results["residual_orders"] = orders;
      if (id == "28") {
        s.check("sum of the roots vanishes", r.trace_order >= N, order_text(r.trace_order, N));
        s.results["trace_order"] = r.trace_order;
      }
    } else if (id == "36") {
      const auto c = reconstruct_y(N);
      s.check("cycle product of the ratios is 1", c.cycle_order >= N, order_text(c.cycle_order, N));
      s.check("closing ratio y4/y5 = -A0/A1", c.closing_order >= N, order_text(c.closing_order, N));
      const auto chart = lift_chart(nf, "III", 12);
      bool ok = true;
      json ds = json::array();
      for (int i = 0; i < 5; ++i) {
        ds.push_back(c.leading[i] % 24 == 0 ? json(c.leading[i] / 24) : json(nullptr));
        ok = ok && c.leading[i] % 24 == 0 && c.leading[i] / 24 == *chart.series[i].valuation();
      }
      s.results["leading_ds_exponents"] = ds;
      s.results["shift"] = c.shift;
      s.check("leading exponents are those of the branch at y3 = 1", ok, ds.dump(), ds);
    } else if (id == "hik") {
      const auto c = reconstruct_y(N);
      const auto r = verify_hik(c, nf);
      long worst = LONG_MAX;
      for (long x : r.residual_orders) worst = std::min(worst, x);
      s.check("all 15 H_ik(y(u)) vanish", worst >= N, order_text(worst, N));
      s.results["residual_orders"] = r.residual_orders;
    } else {
      const auto r = verify_J_identity(N, nf);
      s.check("J from C^3/nabla^11 matches the classical expansion", r.matched >= kMinJCoefficients,
              std::to_string(r.matched) + " coefficients under " + r.winner);
      json cands = json::array();
      for (const auto& c : r.candidates)
        cands.push_back({{"substitution", c.substitution},
                         {"matched", c.matched},
                         {"first_mismatch", c.first_mismatch ? json(*c.first_mismatch) : json(nullptr)}});
      s.results["candidates"] = cands;
      s.results["winner"] = r.winner;
      s.results["working_order"] = r.working_order;
      s.results["nabla_order"] = r.nabla_order;
      json co = json::array();
      for (const auto& q : r.coefficients) co.push_back(exact_value(q));
      s.results["coefficients"] = co;
    }
  });
}

inline std::string format_omega(std::complex<double> w) {
  json re = w.real(), im = w.imag();
  return re.dump() + (w.imag() < 0 ? "" : "+") + im.dump() + "i";
}

inline Suite task_qmod_spotcheck(const TaskOptions& o) {
  json params{{"omega", format_omega(o.omega)}, {"tolerance", o.tolerance}, {"digits", o.digits}};
  return run_suite("qmod spotcheck", params, [&](Suite& s) {
    const auto r = numeric_spotcheck(o.omega, o.tolerance, o.digits);
    json res = json::array();
    for (double x : r.residuals) res.push_back(x);
    s.check("|F(z_v) - J| below tolerance for all eleven v", r.max_residual < o.tolerance,
            "max " + json(r.max_residual).dump(), res);
    s.check("J along the curve equals the Eisenstein J", r.curve_vs_oracle < o.tolerance,
            json(r.curve_vs_oracle).dump());
    s.results["J"] = {r.J_oracle.real(), r.J_oracle.imag()};
    s.results["residuals"] = res;
    s.results["terms_order"] = r.terms_order;
    const auto ji = j_oracle(std::complex<double>(0.0, 1.0), o.digits);
    s.check("J(i) = 1", std::abs(ji - 1.0) < 1e-12, json(ji.real()).dump());
  });
}

namespace task_detail {

inline double read_double(const std::string& t, const std::string& whole) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != t.size()) throw ParseError("cannot read omega '" + whole + "' (expected a+bi)");
  return v;
}

}  // namespace task_detail

// Accepts "a+bi", "a-bi", "bi", "i" and "a".
inline std::complex<double> parse_omega(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty omega");
  if (t.back() != 'i') return {task_detail::read_double(t, text), 0.0};
  t.pop_back();
  // the sign that starts the imaginary part, skipping exponent signs
  std::size_t cut = 0;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  const std::string re = t.substr(0, cut), im = t.substr(cut);
  const double b = (im.empty() || im == "+") ? 1.0 : im == "-" ? -1.0 : task_detail::read_double(im, text);
  return {re.empty() ? 0.0 : task_detail::read_double(re, text), b};
}

// ---- everything ----

inline Certificate run_all(const TaskOptions& o) {
  Certificate c;
  c.parameters = {{"order", o.order}, {"qorder", o.qorder}, {"conjugate", o.conjugate}};
  c.suites.push_back(task_covers_census());
  c.suites.push_back(task_group_verify(o));
  c.suites.push_back(task_curve_verify(o));
  TaskOptions z = o, xi = o;
  z.form = "z";
  xi.form = "xi";
  c.suites.push_back(task_resolvent(z));
  c.suites.push_back(task_resolvent(xi));
  for (const auto& id : qmod_identities()) {
    TaskOptions q = o;
    q.identity = id;
    c.suites.push_back(task_qmod_verify(q));
  }
  TaskOptions sp = o;
  sp.omega = {0.0, 1.5};
  sp.tolerance = 1e-8;
  c.suites.push_back(task_qmod_spotcheck(sp));
  return c;
}

}  // namespace klein11
