#pragma once

// Shared helpers for the test suites: a seeded generator, random field data
// and algebras, and a multiplication oracle that contracts one generator at
// a time (independent of the closed forms used by gwa_mul).

#include <random>
#include <vector>

#include "qgwa/automorphism.hpp"
#include "qgwa/error.hpp"
#include "qgwa/gwa.hpp"

namespace qgwa::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational small_rational(int range = 5, bool nonzero = false) {
  for (;;) {
    Rational r(uniform(-range, range), uniform(1, range));
    r.canonicalize();
    if (!nonzero || r != 0) return r;
  }
}

inline FieldElement random_element(int conductor, int range = 3, bool nonzero = false) {
  for (;;) {
    const int degree = cyclotomic_context(conductor).degree;
    std::vector<Rational> coords;
    for (int i = 0; i < degree; ++i) coords.push_back(small_rational(range));
    FieldElement x = FieldElement::from_coords(conductor, coords);
    if (!nonzero || !x.is_zero()) return x;
  }
}

inline LaurentPoly random_poly(int conductor, int lo, int hi, int terms = 3) {
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) p.add_term(uniform(lo, hi), random_element(conductor, 3));
  return p;
}

inline GwaElement random_element_of(const GwaPtr& R, int grade_bound, int h_bound, int terms = 3) {
  GwaElement u(R);
  const int lo = R->kind() == BaseKind::Poly ? 0 : -h_bound;
  for (int t = 0; t < terms; ++t) {
    u += GwaElement::monomial(R, uniform(-grade_bound, grade_bound), uniform(lo, h_bound),
                              random_element(R->conductor(), 3, true));
  }
  return u;
}

/// Random nonzero roots, each with multiplicity 1 or 2.
inline FactoredPoly random_factored(int conductor, int count, int h_power = 0) {
  FactoredPoly f;
  f.unit = FieldElement::rational(1, conductor);
  f.h_power = h_power;
  for (int i = 0; i < count; ++i) {
    f.roots.push_back(Root{random_element(conductor, 3, true), uniform(0, 4) == 0 ? 2 : 1});
  }
  return f.canonical();
}

/// q from a mix of rational non-torsion values and roots of unity.
inline FieldElement random_q(int conductor) {
  std::vector<FieldElement> choices{FieldElement::rational(Rational(1, 2), conductor),
                                    FieldElement::rational(3, conductor),
                                    FieldElement::rational(Rational(-2, 3), conductor),
                                    FieldElement::rational(-1, conductor)};
  if (conductor > 2) {
    choices.push_back(FieldElement::zeta(conductor));
    choices.push_back(FieldElement::zeta(conductor) * FieldElement(2L));
  }
  return choices[static_cast<std::size_t>(uniform(0, static_cast<int>(choices.size()) - 1))];
}

inline GwaPtr random_algebra(int conductor, BaseKind kind) {
  const int h = kind == BaseKind::Poly ? uniform(0, 1) : 0;
  return QuantumGwa::create(kind, random_q(conductor), random_factored(conductor, uniform(1, 3), h));
}

// u * x, using d x = x sigma^{-1}(d) and y x = a.
inline GwaElement times_x(const GwaElement& u) {
  const GwaPtr& R = u.parent();
  GwaElement out(R);
  for (const auto& [k, d] : u.components()) {
    LaurentPoly moved = R->sigma(d, -1);
    if (k < 0) moved = R->a() * moved;
    out.add_component(k + 1, moved);
  }
  return out;
}

// u * y, using d y = y sigma(d) and x y = sigma(a).
inline GwaElement times_y(const GwaElement& u) {
  const GwaPtr& R = u.parent();
  GwaElement out(R);
  for (const auto& [k, d] : u.components()) {
    LaurentPoly moved = R->sigma(d, 1);
    if (k > 0) moved = R->sigma(R->a(), 1) * moved;
    out.add_component(k - 1, moved);
  }
  return out;
}

inline GwaElement times_base(const GwaElement& u, const LaurentPoly& d) {
  GwaElement out(u.parent());
  for (const auto& [k, c] : u.components()) out.add_component(k, c * d);
  return out;
}

/// Pairwise-contraction product.
inline GwaElement oracle_mul(const GwaElement& u, const GwaElement& v) {
  GwaElement out(u.parent());
  for (const auto& [k, d] : v.components()) {
    GwaElement w = u;
    for (int i = 0; i < std::abs(k); ++i) w = k > 0 ? times_x(w) : times_y(w);
    out += times_base(w, d);
  }
  return out;
}

}  // namespace qgwa::testing
