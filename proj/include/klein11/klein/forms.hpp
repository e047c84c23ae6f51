#pragma once

// The named forms in y1, y4, y5, y9, y3: the invariants nabla, H, C, the
// linear forms p, and the eleven-valued quadrics phi_v and cubics f_v.

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "klein11/algebra/poly_matrix.hpp"
#include "klein11/covers/perm.hpp"
#include "klein11/group660/invariants.hpp"

namespace klein11 {

// f0 = lambda * sum p^3 + mu * nabla
struct CubicDecomposition {
  Cyclotomic lambda;
  Cyclotomic mu;
};

struct NamedForms {
  bool conjugate = false;  // sqrt(-11) -> -sqrt(-11) in phi and f
  SparsePoly nabla;
  PolyMatrix<Rational> hessian_matrix;  // the symmetric matrix whose determinant is H
  SparsePoly H;
  std::vector<Minor<Rational>> H_ik;  // 15 first minors, rational
  SparsePoly Cform;
  ReynoldsResult c_average;  // Cform = c_average.normalized
  std::array<SparsePoly, 6> p;  // p_inf, p0, ..., p4
  std::array<SparsePoly, 11> phi;
  std::array<SparsePoly, 11> f;
  Cyclotomic phi_ratio;  // phi0 = phi_ratio * sum p^2
  CubicDecomposition f_split;
};

namespace forms {

inline SparsePoly orbit(Exponents e, const Cyclotomic& c = Cyclotomic(1)) {
  return cyclic_orbit_sum(SparsePoly::monomial(e, c));
}

inline SparsePoly nabla() { return orbit(mono({{1, 2}, {9, 1}})); }

inline PolyMatrix<Rational> hessian_matrix() {
  auto y = [](int s) { return yvar<Rational>(s); };
  const RationalPoly o;
  return {{y(9), o, y(5), y(1), o},
          {o, y(3), o, y(9), y(4)},
          {y(5), o, y(1), o, y(3)},
          {y(1), y(9), o, y(4), o},
          {o, y(4), y(3), o, y(5)}};
}

inline SparsePoly p_infinity() {
  SparsePoly s;
  for (int i = 0; i < kNumVars; ++i) s += SparsePoly::var(i);
  return s;
}

inline SparsePoly phi0() {
  const Cyclotomic g = sqrt_m11();
  return orbit(mono({{1, 2}})) - orbit(mono({{1, 1}, {9, 1}})) +
         orbit(mono({{1, 1}, {4, 1}}), (Cyclotomic(-1) + g) / Cyclotomic(2));
}

// The printed cubic lists y5y9y3 twice in one orbit; the orbit sum is used.
inline SparsePoly f0() {
  const Cyclotomic g = sqrt_m11();
  const Cyclotomic h = (Cyclotomic(1) + g) / Cyclotomic(2);
  return orbit(mono({{1, 3}})) + orbit(mono({{1, 2}, {3, 1}}), Cyclotomic(3)) -
         orbit(mono({{1, 1}, {4, 1}, {9, 1}}), Cyclotomic(3)) + orbit(mono({{1, 2}, {5, 1}}), h) -
         orbit(mono({{1, 1}, {4, 1}, {5, 1}}), h) - orbit(mono({{1, 2}, {4, 1}}), Cyclotomic(1) + g);
}

// phi_v = phi_0 o S^v
inline SparsePoly s_twist(const SparsePoly& p, int v) {
  return linear_substitute(p, matrix_power(generator_S(), v));
}

inline NamedForms build(bool conjugate) {
  NamedForms nf;
  nf.conjugate = conjugate;
  nf.nabla = nabla();
  nf.hessian_matrix = hessian_matrix();
  nf.H = to_cyclotomic(det5(nf.hessian_matrix));
  nf.H_ik = minors4(nf.hessian_matrix);
  nf.c_average = reynolds(SparsePoly::monomial(mono({{1, 11}}), Cyclotomic(1)));
  nf.Cform = nf.c_average.normalized;
  nf.p[0] = p_infinity();
  nf.p[1] = linear_substitute(nf.p[0], letter_matrix('V'));
  for (int v = 1; v < 5; ++v) nf.p[v + 1] = cycle_variables(nf.p[1], v);

  SparsePoly sq, cu;
  for (const auto& q : nf.p) {
    sq += q * q;
    cu += q * q * q;
  }
  SparsePoly ph = phi0(), fc = f0();
  const auto ratio = scalar_ratio(ph, sq);
  if (!ratio) throw VerificationFailure("phi0 is not a multiple of the sum of squares of p", 2);
  nf.phi_ratio = *ratio;
  const Exponents cube = mono({{1, 3}});
  const Cyclotomic lambda = fc.coefficient(cube) / cu.coefficient(cube);
  const auto mu = scalar_ratio(fc - cu.scaled(lambda), nf.nabla);
  if (!mu) throw VerificationFailure("f0 - lambda * sum p^3 is not a multiple of nabla", 3);
  nf.f_split = {lambda, *mu};

  if (conjugate) {
    ph = galois_conj(ph, 10);
    fc = galois_conj(fc, 10);
  }
  for (int v = 0; v < 11; ++v) {
    nf.phi[v] = s_twist(ph, v);
    nf.f[v] = s_twist(fc, v);
  }
  return nf;
}

}  // namespace forms

// Built once per sign of sqrt(-11).
inline const NamedForms& build_named_forms(bool conjugate = false) {
  static std::mutex mu;
  static std::map<bool, NamedForms> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conjugate);
  if (it == cache.end()) it = cache.emplace(conjugate, forms::build(conjugate)).first;
  return it->second;
}

inline std::vector<RationalPoly> minor_system(const NamedForms& nf) {
  std::vector<RationalPoly> out;
  for (const auto& m : nf.H_ik) out.push_back(m.value);
  return out;
}

// The permutation v -> w with f_v(M y) = f_w(y); sheet labels are v + 1.
inline std::optional<Perm11> value_permutation(const NamedForms& nf, const CycMatrix& m) {
  std::array<int, 11> img{};
  for (int v = 0; v < 11; ++v) {
    const SparsePoly moved = linear_substitute(nf.f[v], m);
    int hit = -1;
    for (int w = 0; w < 11 && hit < 0; ++w)
      if (moved == nf.f[w]) hit = w;
    if (hit < 0) return std::nullopt;
    img[v] = hit + 1;
  }
  return Perm11::from_images(img);
}

}  // namespace klein11
