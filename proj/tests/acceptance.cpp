// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "qgwa/fixed_ring.hpp"
#include "qgwa/report.hpp"
#include "qgwa/request.hpp"
#include "qgwa/roots.hpp"
#include "support.hpp"

using namespace qgwa;
namespace t = qgwa::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

FactoredPoly roots_of(std::initializer_list<std::pair<FieldElement, int>> roots, int h_power = 0) {
  FactoredPoly f;
  f.h_power = h_power;
  for (const auto& [r, m] : roots) f.roots.push_back(Root{r, m});
  return f.canonical();
}

FieldElement fe(Rational r) { return FieldElement(r); }

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  const AnalysisReport rep = run_analysis(parse_request(R"toml([algebra]
conductor = 3
base = "laurent"
q = "1/2"
a = "(h^2-1)*(h^2-4)"
[automorphism]
gamma = "-1"
mu = "z"
)toml"));
  FactoredPoly expected = roots_of({{fe(1), 2}, {fe(4), 1}, {fe(Rational(1, 4)), 2}, {fe(Rational(1, 16)), 1}});
  expected.unit = FieldElement(4096L);
  require(o, rep.fixed_ring && rep.fixed_ring->A == expand(expected), "A(H) differs");
  require(o, rep.gldim_algebra && rep.gldim_algebra->value == GlDim::Two, "gldim R != 2");
  require(o, rep.gldim_fixed && rep.gldim_fixed->via_theorem.value == GlDim::Infinite &&
                 rep.gldim_fixed->direct.value == GlDim::Infinite,
          "gldim of the fixed ring is not infinite");
  require(o, rep.rigidity && rep.rigidity->non_isomorphic, "rigidity");
  const double s = seconds_since(start);
  require(o, s < 1.0, "runtime " + std::to_string(s) + " s");
  o.detail = o.pass ? "A(H) = " + rep.fixed_ring->A_factored->to_string("H") + ", gldim 2 / infinite, not isomorphic"
                    : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  const AnalysisReport rep = run_analysis(parse_request(R"toml([algebra]
base = "poly"
q = "3"
a = "h^2"
[automorphism]
gamma = "-1"
mu = "1"
)toml"));
  require(o, rep.fixed_ring && rep.fixed_ring->A == LaurentPoly::monomial(FieldElement(1L), 1), "A(H) != H");
  require(o, rep.gldim_algebra && rep.gldim_algebra->value == GlDim::Infinite, "gldim R != infinite");
  require(o, rep.gldim_fixed && rep.gldim_fixed->via_theorem.value == GlDim::Two &&
                 rep.gldim_fixed->direct.value == GlDim::Two,
          "gldim of the fixed ring != 2");
  require(o, seconds_since(start) < 1.0, "runtime");
  if (o.pass) o.detail = "A(H) = H, gldim infinite / 2";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto start = Clock::now();
  for (const FieldElement& q : {FieldElement::rational(Rational(1, 2), 3), FieldElement::rational(-1, 3)}) {
    const GwaPtr R = QuantumGwa::create(BaseKind::Laurent, q, roots_of({{fe(1), 1}}));
    const auto phi = Automorphism::eta(FieldElement(1L), FieldElement::zeta(3), 0);
    const auto pres = fixed_ring(R, phi);
    const LaurentPoly shape = LaurentPoly::linear(FieldElement(1L)) * LaurentPoly::linear(q) * LaurentPoly::linear(q * q);
    require(o, pres.A == shape * pres.A.leading_coeff(), "A(H) shape at q = " + q.to_string());
    const auto cls = classify_A_multiplicity(analyze_roots(GwaData::of(*R), 1, 3));
    if (q == FieldElement(-1L)) require(o, cls.multiple, "q = -1 should give multiple roots");
    else require(o, !cls.multiple, "q = 1/2 should give simple roots");
  }
  require(o, seconds_since(start) < 1.0, "runtime");
  if (o.pass) o.detail = "A = c(h-1)(h-q)(h-q^2) for q = 1/2 and q = -1; multiple roots at q = -1";
  return o;
}

// Random diagonal configurations satisfying the hypothesis.
struct Config {
  GwaPtr algebra;
  Automorphism phi;
  int n, m;
};

std::vector<Config> random_configs(int count) {
  std::vector<Config> out;
  const std::vector<std::pair<int, int>> nm{{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}, {3, 4},
                                            {4, 3}, {1, 4}, {2, 5}, {5, 2}, {1, 6}, {6, 1}, {5, 6}, {6, 5}};
  int attempt = 0;
  while (static_cast<int>(out.size()) < count) {
    ++attempt;
    const auto [n, m] = nm[static_cast<std::size_t>(attempt) % nm.size()];
    const int N = std::lcm(std::lcm(n, m), 2) == 2 ? 1 : std::lcm(n, m);
    const FieldElement w = *primitive_root_of_unity(N, n);
    const BaseKind kind = attempt % 2 ? BaseKind::Poly : BaseKind::Laurent;
    FactoredPoly a;
    a.h_power = kind == BaseKind::Poly && attempt % 3 == 0 ? n : 0;
    const int orbits = std::max(1, std::min(8 / n, t::uniform(1, 2)));
    const FieldElement q = (attempt % 4 == 0) ? t::random_q(N) : FieldElement::rational(t::uniform(0, 1) ? Rational(1, 2) : Rational(-3), N);
    for (int o = 0; o < orbits; ++o) {
      FieldElement c = t::random_element(N, 2, true);
      if (!a.roots.empty() && t::uniform(0, 2) == 0) c = a.roots.front().value * q.pow(n * t::uniform(1, 2));
      for (int j = 0; j < n; ++j) a.roots.push_back(Root{c * w.pow(j), 1});
    }
    a = a.canonical();
    if (a.root_count() > 8 || a.root_count() == 0) continue;
    if (q.is_one() || q.is_zero()) continue;
    const GwaPtr R = QuantumGwa::create(kind, q, a);
    const int i0 = default_i0(*R);
    if (i0 % n != 0) continue;
    const FieldElement gamma = *primitive_root_of_unity(N, n);
    const FieldElement mu = *primitive_root_of_unity(N, m);
    out.push_back({R, Automorphism::eta(gamma, mu, i0), n, m});
  }
  return out;
}

const std::vector<Config>& suite() {
  static const std::vector<Config> configs = random_configs(30);
  return configs;
}

Outcome criterion4() {
  Outcome o;
  const auto start = Clock::now();
  int torsion = 0, laurent = 0;
  for (const Config& c : suite()) {
    try {
      const auto pres = fixed_ring(c.algebra, c.phi);
      const auto rep = check_fixed_ring(c.algebra, c.phi, pres, TruncationBounds{12, 24});
      require(o, rep.passed(), c.algebra->to_string() + ": " + rep.first_failure);
    } catch (const Error& e) {
      require(o, false, c.algebra->to_string() + ": " + e.what());
    }
    torsion += torsion_order(c.algebra->q()).has_value();
    laurent += c.algebra->kind() == BaseKind::Laurent;
  }
  require(o, torsion > 0 && torsion < static_cast<int>(suite().size()), "suite lacks torsion or non-torsion q");
  require(o, laurent > 0 && laurent < static_cast<int>(suite().size()), "suite lacks a base kind");
  const double s = seconds_since(start);
  require(o, s < 60.0, "runtime " + std::to_string(s) + " s");
  if (o.pass) {
    std::ostringstream msg;
    msg << suite().size() << " configurations verified at bounds (12, 24) in " << s << " s";
    o.detail = msg.str();
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  for (const Config& c : suite()) {
    try {
      const auto g = gldim_fixed(c.algebra, c.phi);
      require(o, g.via_theorem.complete && g.direct.complete, "incomplete search on " + c.algebra->to_string());
      require(o, g.via_theorem.value == g.direct.value, "gldim mismatch on " + c.algebra->to_string());
      if (c.algebra->kind() == BaseKind::Laurent) {
        const auto s = simplicity_transfer(c.algebra, c.phi);
        require(o, s.algebra.complete && s.fixed_ring.complete, "incomplete simplicity search");
        require(o, s.algebra.simple == s.fixed_ring.simple, "simplicity mismatch");
      }
      ++checked;
    } catch (const Error& e) {
      require(o, false, e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " configurations: theorem and presentation agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int checks = 0;
  auto agrees = [](const GwaPtr& R, const Automorphism& outer, const Automorphism& inner) {
    const AutomorphismAction ao(outer, R), ai(inner, R), ac(compose(*R, outer, inner), R);
    for (const auto& u : {GwaElement::x(R), GwaElement::y(R), GwaElement::h(R)}) {
      if (ac.apply(u) != ao.apply(ai.apply(u))) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 160; ++trial) {
    const int N = trial % 3 == 0 ? 4 : 6;
    const bool minus_one = trial % 2 == 0;
    const BaseKind kind = trial % 4 < 2 ? BaseKind::Laurent : BaseKind::Poly;
    const FieldElement q = minus_one ? FieldElement::rational(-1, N) : t::random_q(N);
    FactoredPoly a = t::random_factored(N, t::uniform(1, 3));
    if (trial % 5 == 0) a = roots_of({{FieldElement::rational(2, N), 1}, {FieldElement::rational(-2, N), 1}});
    if (kind == BaseKind::Laurent && detect_symmetric(a, kind) && minus_one) continue;
    const GwaPtr R = QuantumGwa::create(kind, q, a);
    const CongruenceGap gap = congruence_gap(R->a());
    std::vector<FieldElement> gammas;
    for (const auto& z : torsion_elements(N))
      if (gap.monomial || z.pow(gap.g).is_one()) gammas.push_back(z);
    const int i0 = default_i0(*R);
    auto random_phi = [&] {
      auto phi = Automorphism::eta(gammas[static_cast<std::size_t>(t::uniform(0, static_cast<int>(gammas.size()) - 1))],
                                   trial % 3 ? torsion_elements(N)[0] * t::random_element(N, 2, true)
                                             : torsion_elements(N)[static_cast<std::size_t>(t::uniform(0, static_cast<int>(torsion_elements(N).size()) - 1))],
                                   i0, kind == BaseKind::Laurent ? t::uniform(-2, 2) : 0);
      phi.omega = minus_one && t::uniform(0, 1) == 1;
      return phi;
    };
    const auto f = random_phi(), g = random_phi(), h = random_phi();
    require(o, agrees(R, f, g), "compose disagrees with action: " + f.to_string() + " o " + g.to_string());
    require(o, same_action(compose(*R, compose(*R, f, g), h), compose(*R, f, compose(*R, g, h))), "associativity");
    require(o, compose(*R, f, inverse(*R, f)).is_identity() && compose(*R, inverse(*R, f), f).is_identity(),
            "inverse of " + f.to_string());
    if (auto e = order_of(*R, f)) {
      require(o, power(*R, f, *e).is_identity(), "phi^ord != id");
      for (long d = 1; d < *e; ++d) require(o, !power(*R, f, d).is_identity(), "order not minimal");
    } else {
      require(o, f.mu_hpower != 0 || !torsion_order(f.gamma) || !torsion_order(f.mu_scalar), "finite order missed");
    }
    if (minus_one) {
      const auto omega = Automorphism::omega_map(i0);
      require(o, compose(*R, omega, omega).is_identity(), "Omega^2 != id");
      const AutomorphismAction a2(compose(*R, omega, omega), R);
      require(o, a2.image_x() == GwaElement::x(R) && a2.image_y() == GwaElement::y(R), "Omega^2 on generators");
    }
    ++checks;
  }
  require(o, checks >= 100, "only " + std::to_string(checks) + " checks");
  if (o.pass) o.detail = std::to_string(checks) + " random triples checked pointwise";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int count = 0;
  for (int trial = 0; count < 12; ++trial) {
    const int N = trial % 2 ? 1 : 3;
    const BaseKind kind = trial % 3 ? BaseKind::Poly : BaseKind::Laurent;
    const GwaPtr R = QuantumGwa::create(kind, FieldElement::rational(-1, N), t::random_factored(N, t::uniform(1, 4)));
    const FieldElement mu = t::random_element(N, 2, true);
    const GwaElement x = GwaElement::x(R), y = GwaElement::y(R);
    const GwaElement X = x * mu + y, Y = x * mu - y;
    const LaurentPoly a = R->a(), a_neg = a.scaled(FieldElement(-1L));
    const GwaElement A = GwaElement::base(R, (a_neg - a) * (mu * FieldElement(2L)));
    const GwaElement B = GwaElement::base(R, (a + a_neg) * (mu * FieldElement(2L)));
    require(o, Y * X - X * Y == A, "eq. YX - XY");
    require(o, X * X - Y * Y == B, "eq. X^2 - Y^2");
    auto phi = Automorphism::omega_map(default_i0(*R));
    phi.mu_scalar = mu;
    const auto pres = fixed_ring(R, phi);
    for (const Relation& r : pres.relations) require(o, r.lhs == r.rhs, "relation " + r.name);
    require(o, is_in_h_power_subring(pres.A.shifted(1), 2) && is_in_h_power_subring(pres.B, 2), "k[H^2]");
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " random a at q = -1";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const GwaPtr R = QuantumGwa::create(BaseKind::Poly, FieldElement::rational(Rational(1, 2), 12), roots_of({}, 6));
  const auto phi = Automorphism::eta(FieldElement::zeta(12, 2), FieldElement::zeta(12, 3), 6);
  const ProbeReport rep = probe_gcd_failure(R, phi, TruncationBounds{8, 12});
  auto has = [&](const std::string& s) {
    return std::find(rep.generator_names.begin(), rep.generator_names.end(), s) != rep.generator_names.end();
  };
  require(o, rep.generator_count > 3, "only " + std::to_string(rep.generator_count) + " generators");
  require(o, has("x^2*h^3") && has("y^2*h^3"), "x^2 h^3 or y^2 h^3 missing");
  if (o.pass) {
    std::string names;
    for (const auto& s : rep.generator_names) names += (names.empty() ? "" : ", ") + s;
    o.detail = std::to_string(rep.generator_count) + " generators: " + names;
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  int count = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const int N = std::vector<int>{1, 3, 4, 6}[static_cast<std::size_t>(trial % 4)];
    const GwaPtr R = t::random_algebra(N, trial % 2 ? BaseKind::Laurent : BaseKind::Poly);
    const GwaElement x = GwaElement::x(R), y = GwaElement::y(R);
    for (int m = 1; m <= 6; ++m) {
      // literal powers, contracted one generator at a time
      GwaElement xm = x, ym = y;
      for (int i = 1; i < m; ++i) {
        xm = t::oracle_mul(xm, x);
        ym = t::oracle_mul(ym, y);
      }
      require(o, t::oracle_mul(ym, xm) == GwaElement::base(R, power_product_identity(*R, m, ProductSide::YX)), "y^m x^m");
      require(o, t::oracle_mul(xm, ym) == GwaElement::base(R, power_product_identity(*R, m, ProductSide::XY)), "x^m y^m");
      require(o, gwa_mul(ym, xm) == t::oracle_mul(ym, xm) && gwa_mul(xm, ym) == t::oracle_mul(xm, ym), "gwa_mul");
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " (algebra, m) pairs, m <= 6";
  return o;
}

Outcome criterion10() {
  Outcome o;
  int count = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const int N = trial % 2 ? 1 : 5;
    FactoredPoly a;
    a.h_power = trial % 3 == 0 ? 1 : 0;
    for (int i = 0; i < t::uniform(1, 3); ++i) a.roots.push_back(Root{t::random_element(N, 3, true), 1});
    a = a.canonical();
    bool simple = a.h_power <= 1;
    for (const Root& r : a.roots) simple = simple && r.multiplicity == 1;
    if (!simple) continue;
    const GwaPtr R = QuantumGwa::create(BaseKind::Poly, t::random_q(N), a);
    const FieldElement q = R->q();
    // nu(x) = qx, nu(y) = q^{-1}y, nu(h) = h, extended to elements by substitution.
    const GwaElement nx = GwaElement::x(R) * q, ny = GwaElement::y(R) * q.inverse(), nh = GwaElement::h(R);
    GwaElement a_img(R), sa_img(R);
    for (const auto& [e, c] : R->a().terms()) a_img += nh.pow(e) * c;
    const LaurentPoly sa = R->sigma(R->a(), 1);
    for (const auto& [e, c] : sa.terms()) sa_img += nh.pow(e) * c;
    require(o, ny * nx == a_img, "nu(y)nu(x) != nu(a)");
    require(o, nx * ny == sa_img, "nu(x)nu(y) != nu(sigma(a))");
    require(o, nx * nh == nh * nx * q && ny * nh * q == nh * ny, "nu on commutation relations");
    const auto cy = twisted_calabi_yau(R);
    require(o, cy.twisted_cy && cy.nakayama_verified, "library Nakayama check");
    const AutomorphismAction act(*cy.nakayama, R);
    require(o, act.image_x() == nx && act.image_y() == ny && act.image_h() == nh, "library nu differs");
    ++count;
  }
  require(o, count >= 5, "only " + std::to_string(count) + " algebras");
  if (o.pass) o.detail = std::to_string(count) + " Poly-base algebras with simple roots";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
