#include <algorithm>

#include "doctest.h"
#include "qgwa/fixed_ring.hpp"
#include "support.hpp"

using namespace qgwa;
namespace t = qgwa::testing;

namespace {

FactoredPoly roots_of(std::initializer_list<std::pair<FieldElement, int>> roots, int h_power = 0) {
  FactoredPoly f;
  f.h_power = h_power;
  for (const auto& [r, m] : roots) f.roots.push_back(Root{r, m});
  return f.canonical();
}

FactoredPoly rational_roots(std::initializer_list<std::pair<Rational, int>> roots, int h_power = 0) {
  FactoredPoly f;
  f.h_power = h_power;
  for (const auto& [r, m] : roots) f.roots.push_back(Root{FieldElement(r), m});
  return f.canonical();
}

LaurentPoly mono(const FieldElement& c, int e) { return LaurentPoly::monomial(c, e); }

bool contains(const std::vector<std::string>& names, const std::string& s) {
  return std::find(names.begin(), names.end(), s) != names.end();
}

}  // namespace

TEST_SUITE("fixed_ring") {

TEST_CASE("worked example, Laurent base") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Laurent, FieldElement::rational(Rational(1, 2), 3),
                                      rational_roots({{1, 1}, {-1, 1}, {2, 1}, {-2, 1}}));
  const auto phi = Automorphism::eta(FieldElement(-1L), FieldElement::zeta(3), 0);
  const auto pres = fixed_ring(R, phi);
  CHECK(pres.kind == PresentationKind::DiagonalGwa);
  CHECK(pres.n == 2);
  CHECK(pres.m == 3);
  CHECK(pres.fixed_algebra->q == FieldElement(Rational(1, 64)));
  const FactoredPoly expected = [] {
    FactoredPoly f = rational_roots({{1, 2}, {4, 1}, {Rational(1, 4), 2}, {Rational(1, 16), 1}});
    f.unit = FieldElement(4096L);
    return f;
  }();
  CHECK(pres.A == expand(expected));
  CHECK(pres.A_factored->to_string("H") == "4096*(H-1)^2*(H-4)*(H-1/4)^2*(H-1/16)");
  CHECK(pres.presentation == "k[H^{+-1}](sigma': H -> q'H, A), H = h^2, X = x^3, Y = y^3");
  for (const Relation& r : pres.relations) CHECK_MESSAGE(r.lhs == r.rhs, r.name);
  const auto rep = verify_fixed_ring(R, phi, pres, TruncationBounds{6, 8});
  CHECK(rep.passed());
}

TEST_CASE("worked example, a = h^2") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement(3L), rational_roots({}, 2));
  const auto pres = fixed_ring(R, Automorphism::eta(FieldElement(-1L), FieldElement(1L), 2));
  CHECK(pres.A == mono(FieldElement(1L), 1));
  CHECK(pres.m == 1);
  CHECK(verify_fixed_ring(R, pres.phi, pres, TruncationBounds{5, 10}).passed());
}

TEST_CASE("identity gives the algebra back") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement(Rational(2, 3)), rational_roots({{1, 1}, {5, 2}}));
  const auto pres = fixed_ring(R, Automorphism::identity(3));
  CHECK(pres.A == R->a());
  CHECK(pres.fixed_algebra->q == R->q());
  const auto rep = verify_fixed_ring(R, pres.phi, pres, TruncationBounds{4, 6});
  CHECK(rep.passed());
  for (const auto& [k, dims] : rep.block_dims) CHECK(dims.first == 7);
}

TEST_CASE("A = (h-1)(h-q)(h-q^2) up to a unit") {
  for (const FieldElement& q : {FieldElement::rational(Rational(1, 2), 3), FieldElement::rational(-1, 3)}) {
    const GwaPtr R = QuantumGwa::create(BaseKind::Laurent, q, rational_roots({{1, 1}}));
    const auto pres = fixed_ring(R, Automorphism::eta(FieldElement(1L), FieldElement::zeta(3), 0));
    const LaurentPoly shape = LaurentPoly::linear(FieldElement(1L)) * LaurentPoly::linear(q) *
                              LaurentPoly::linear(q * q);
    CHECK(pres.A == shape * pres.A.leading_coeff());
    CHECK(pres.A_factored->unit == pres.A.leading_coeff());
  }
}

TEST_CASE("hypothesis violations") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement::rational(Rational(1, 2), 12),
                                      roots_of({{FieldElement(1L), 1}, {FieldElement(-1L), 1}}));
  auto expect = [&](const Automorphism& phi, ErrorCode code, const std::string& prefix) {
    try {
      fixed_ring(R, phi);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
      CHECK(std::string(e.what()).find(prefix) != std::string::npos);
    }
  };
  expect(Automorphism::eta(FieldElement(-1L), FieldElement(-1L), 2), ErrorCode::HypothesisViolated, "gcd:");
  expect(Automorphism::eta(FieldElement(-1L), FieldElement(Rational(1, 2)), 2), ErrorCode::InfiniteOrder, "");

  const GwaPtr S = QuantumGwa::create(BaseKind::Poly, FieldElement::rational(Rational(1, 2), 12), roots_of({}, 3));
  try {
    fixed_ring(S, Automorphism::eta(FieldElement(-1L), FieldElement(1L), 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("i0:") != std::string::npos);
  }
  const GwaPtr T = QuantumGwa::create(BaseKind::Laurent, FieldElement(Rational(1, 2)), rational_roots({{2, 1}, {3, 1}}, 0));
  CHECK_THROWS_AS(fixed_ring(T, Automorphism::omega_map(0)), Error);
}

TEST_CASE("corrupted A is caught") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Laurent, FieldElement::rational(Rational(1, 2), 3),
                                      rational_roots({{1, 1}, {-1, 1}, {2, 1}, {-2, 1}}));
  auto pres = fixed_ring(R, Automorphism::eta(FieldElement(-1L), FieldElement::zeta(3), 0));
  pres.fixed_algebra->a.unit = pres.fixed_algebra->a.unit * FieldElement(2L);
  const auto rep = check_fixed_ring(R, pres.phi, pres, TruncationBounds{4, 6});
  CHECK_FALSE(rep.passed());
  CHECK(rep.first_failure.find("YX = A(H)") != std::string::npos);
  try {
    verify_fixed_ring(R, pres.phi, pres, TruncationBounds{4, 6});
    FAIL("expected VerificationFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VerificationFailed);
    CHECK(std::string(e.what()).find("YX = A(H)") != std::string::npos);
  }
}

TEST_CASE("Omega cases") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement(-1L), rational_roots({{1, 1}}));
  const auto plus = fixed_ring(R, Automorphism::omega_map(1));
  CHECK(plus.kind == PresentationKind::OmegaPlusOne);
  CHECK(plus.A == mono(FieldElement(-4L), 1));
  CHECK(plus.B == LaurentPoly(FieldElement(-4L)));
  for (const Relation& r : plus.relations) CHECK_MESSAGE(r.lhs == r.rhs, r.name);
  CHECK(verify_fixed_ring(R, plus.phi, plus, TruncationBounds{4, 6}).passed());

  const GwaPtr E = QuantumGwa::create(BaseKind::Laurent, FieldElement(-1L), rational_roots({{3, 1}, {-3, 1}}));
  const auto even = fixed_ring(E, Automorphism::omega_map(0));
  CHECK(even.A.is_zero());

  auto minus_phi = Automorphism::omega_map(0);
  minus_phi.gamma = FieldElement(-1L);
  const auto minus = fixed_ring(E, minus_phi);
  CHECK(minus.kind == PresentationKind::OmegaMinusOne);
  CHECK(minus.presentation == "k_{-1}[u, v^{+-1}]");
  for (const Relation& r : minus.relations) CHECK_MESSAGE(r.lhs == r.rhs, r.name);
  CHECK(verify_fixed_ring(E, minus.phi, minus, TruncationBounds{4, 6}).passed());

  const GwaPtr P = QuantumGwa::create(BaseKind::Poly, FieldElement(-1L), rational_roots({{3, 1}, {-3, 1}}));
  const auto pminus = fixed_ring(P, Automorphism{true, FieldElement(-1L), FieldElement(1L), 0, 2});
  CHECK(pminus.presentation == "k_{-1}[u, v]");

  const GwaPtr Q = QuantumGwa::create(BaseKind::Poly, FieldElement(Rational(1, 2)), rational_roots({{1, 1}}));
  CHECK_THROWS_AS(fixed_ring_omega(Q, Automorphism::omega_map(1)), Error);
}

TEST_CASE("Omega identities on random a") {
  for (int trial = 0; trial < 10; ++trial) {
    const int N = trial % 2 ? 1 : 3;
    const BaseKind kind = trial % 3 ? BaseKind::Poly : BaseKind::Laurent;
    const GwaPtr R = QuantumGwa::create(kind, FieldElement::rational(-1, N), t::random_factored(N, t::uniform(1, 4)));
    auto phi = Automorphism::omega_map(default_i0(*R));
    phi.mu_scalar = t::random_element(N, 2, true);
    const auto pres = fixed_ring(R, phi);
    for (const Relation& r : pres.relations) CHECK_MESSAGE(r.lhs == r.rhs, r.name);
    // A(H) H and B(H) lie in k[H^2]
    CHECK(is_in_h_power_subring(pres.A.shifted(1), 2));
    CHECK(is_in_h_power_subring(pres.B, 2));
  }
}

TEST_CASE("probe") {
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement::rational(Rational(1, 2), 12), roots_of({}, 6));
  const auto phi = Automorphism::eta(FieldElement::zeta(12, 2), FieldElement::zeta(12, 3), 6);
  const auto rep = probe_gcd_failure(R, phi, TruncationBounds{8, 12});
  CHECK(rep.exceeds_three);
  CHECK(rep.generator_count > 3);
  for (const char* g : {"x^2*h^3", "y^2*h^3", "x^4", "y^4", "h^6"}) CHECK_MESSAGE(contains(rep.generator_names, g), g);

  const auto coprime = probe_gcd_failure(R, Automorphism::eta(FieldElement::zeta(12, 4), FieldElement(-1L), 6),
                                         TruncationBounds{6, 12});
  CHECK(coprime.generator_count == 3);
  CHECK_FALSE(coprime.exceeds_three);

  const GwaPtr S = QuantumGwa::create(BaseKind::Laurent, FieldElement(Rational(1, 2)), rational_roots({{2, 1}, {3, 1}}));
  const auto trivial = probe_gcd_failure(S, Automorphism::identity(0), TruncationBounds{4, 4});
  CHECK(trivial.generator_count == 3);
  CHECK(contains(trivial.generator_names, "x"));
  CHECK(contains(trivial.generator_names, "y"));
  CHECK(contains(trivial.generator_names, "h"));
}

TEST_CASE("root formula agrees with the product on random inputs") {
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 12;
    const int n = std::vector<int>{1, 2, 3}[static_cast<std::size_t>(trial % 3)];
    const FieldElement w = *primitive_root_of_unity(N, n);
    FactoredPoly a;
    a.h_power = trial % 4 == 0 ? n : 0;
    for (int o = 0; o < t::uniform(1, 2); ++o) {
      const FieldElement c = t::random_element(N, 2, true);
      const int mult = t::uniform(1, 2);
      for (int j = 0; j < n; ++j) a.roots.push_back(Root{c * w.pow(j), mult});
    }
    const GwaPtr R = QuantumGwa::create(a.h_power > 0 ? BaseKind::Poly : BaseKind::Laurent, t::random_q(N), a.canonical());
    for (int m = 1; m <= 4; ++m) {
      CHECK(expand(fixed_A_from_roots(*R, n, m)) == R->yx_product(m).deflate(n));
    }
  }
}

}
