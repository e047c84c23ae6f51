#pragma once

// Floating evaluation at a point omega of the upper half plane: the thetas
// give y, y gives the eleven z_v = f_v / nabla, and F(z_v) is compared with J
// from the Eisenstein series.

#include <array>
#include <cmath>

#include "klein11/exact/complex_mp.hpp"
#include "klein11/klein/resolvent.hpp"
#include "klein11/qmod/theta.hpp"

namespace klein11 {

using CBig = Complex<BigFloat>;

struct SpotcheckReport {
  double omega_re = 0, omega_im = 0;
  unsigned digits = 0;
  double tolerance = 0;
  long terms_order = 0;  // u-exponents kept in the theta sums
  std::complex<double> J_oracle, J_curve;
  double curve_vs_oracle = 0;  // |J_curve - J_oracle|
  double closing = 0;          // |y4/y5 + A0/A1|
  std::array<std::complex<double>, 11> z{};
  std::array<double, 11> residuals{};  // |F(z_v) - J_oracle|
  double max_residual = 0;
  bool ok = false;
};

namespace spot_detail {

inline std::complex<double> to_double(const CBig& z) {
  return {z.re.convert_to<double>(), z.im.convert_to<double>()};
}

inline CBig eval_poly(const SparsePoly& p, const std::array<CBig, 5>& y, const std::array<CBig, 11>& rho) {
  CBig s;
  for (const auto& [e, c] : p.terms()) {
    CBig t = evaluate(c, rho);
    for (int i = 0; i < 5; ++i)
      if (e[i]) t *= pow(y[i], e[i]);
    s += t;
  }
  return s;
}

inline CBig eval_upoly(const ZPoly& p, const CBig& z, const std::array<CBig, 11>& rho) {
  CBig acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + evaluate(p.coefficient(i), rho);
  return acc;
}

// sum of c u^e over the closed-formula terms.
inline CBig theta_value(const std::map<long, Integer>& terms, const CBig& u) {
  CBig s;
  for (const auto& [e, c] : terms) s += CBig(BigFloat(c.get_str())) * pow(u, e);
  return s;
}

}  // namespace spot_detail

// J(omega) = E4^3 / (E4^3 - E6^2) in x = exp(2 pi i omega).
inline CBig j_oracle(const CBig& omega, unsigned digits) {
  const BigFloat pi = pi_value<BigFloat>();
  const CBig x = cexp(CBig(-2 * pi * omega.im, 2 * pi * omega.re));
  const BigFloat eps = pow(BigFloat(10), -static_cast<int>(digits) - 5);
  CBig e4(BigFloat(1)), e6(BigFloat(1)), xn = x;
  for (long n = 1;; ++n) {
    const BigFloat s3(divisor_power_sum(n, 3).get_str()), s5(divisor_power_sum(n, 5).get_str());
    e4 += CBig(240 * s3) * xn;
    e6 -= CBig(504 * s5) * xn;
    if (xn.abs() * s5 < eps) break;
    xn *= x;
  }
  const CBig e43 = e4 * e4 * e4;
  return e43 / (e43 - e6 * e6);
}

inline std::complex<double> j_oracle(std::complex<double> omega, unsigned digits = 40) {
  PrecisionGuard guard(digits);
  return spot_detail::to_double(j_oracle(CBig(BigFloat(omega.real()), BigFloat(omega.imag())), digits));
}

inline SpotcheckReport numeric_spotcheck(std::complex<double> omega, double tolerance, unsigned digits = 40,
                                         const NamedForms& nf = build_named_forms()) {
  if (!(omega.imag() > 0)) throw MathError("spot check needs Im(omega) > 0");
  if (nf.conjugate) throw MathError("spot check is set up for the unconjugated forms");
  SpotcheckReport r;
  r.omega_re = omega.real();
  r.omega_im = omega.imag();
  r.digits = digits;
  r.tolerance = tolerance;
  PrecisionGuard guard(digits + 10);
  using namespace spot_detail;
  const auto rho = rho_powers<BigFloat>();
  const CBig om(BigFloat(omega.real()), BigFloat(omega.imag()));
  const BigFloat pi = pi_value<BigFloat>();
  // u = exp(i pi omega / 132); keep terms until |u|^e drops below 10^-(digits+10)
  const CBig u = cexp(CBig(-pi * om.im / kUPerQ, pi * om.re / kUPerQ));
  const double decay = M_PI * omega.imag() / kUPerQ;
  r.terms_order = static_cast<long>(std::ceil((digits + 10) * std::log(10.0) / decay)) + 1;
  std::array<CBig, 6> A;
  for (int s = 0; s < 6; ++s) A[s] = theta_value(general_theta_terms(kThetaIndices[s], r.terms_order), u);
  auto a = [&](int idx) -> const CBig& { return A[theta_slot(idx)]; };
  // y1 = 1 and the ratio chain
  std::array<CBig, 5> y;
  y[0] = CBig(BigFloat(1));
  y[1] = -a(3) / a(0);
  y[4] = -a(0) / a(9);
  y[3] = y[4] * (-a(0) / a(5));
  y[2] = y[3] * (-a(0) / a(4));
  r.closing = std::abs(to_double(y[1] / y[2] + a(0) / a(1)));
  const CBig n = eval_poly(nf.nabla, y, rho);
  const CBig C = eval_poly(nf.Cform, y, rho);
  const CBig Jc = -(C * C * C) / (CBig(BigFloat(1728)) * pow(n, 11));
  const CBig Jo = j_oracle(om, digits);
  r.J_curve = to_double(Jc);
  r.J_oracle = to_double(Jo);
  r.curve_vs_oracle = (Jc - Jo).abs().convert_to<double>();
  const auto F = printed_resolvent_z();
  const CBig k(to_real<BigFloat>(F.k));
  r.ok = r.curve_vs_oracle < tolerance;
  for (int v = 0; v < 11; ++v) {
    const CBig z = eval_poly(nf.f[v], y, rho) / n;
    const CBig fz = k * eval_upoly(F.quad, z, rho) * pow(eval_upoly(F.cubic, z, rho), 3);
    r.z[v] = to_double(z);
    r.residuals[v] = (fz - Jo).abs().convert_to<double>();
    r.max_residual = std::max(r.max_residual, r.residuals[v]);
  }
  r.ok = r.ok && r.max_residual < tolerance;
  return r;
}

}  // namespace klein11
