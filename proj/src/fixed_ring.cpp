#include "qgwa/fixed_ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "qgwa/error.hpp"

namespace qgwa {

std::string to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::DiagonalGwa:
      return "diagonal_gwa";
    case PresentationKind::OmegaMinusOne:
      return "omega_minus_one";
    case PresentationKind::OmegaPlusOne:
      return "omega_plus_one";
  }
  return "?";
}

namespace {

const GwaElement& generator(const FixedRingPresentation& pres, const std::string& name) {
  for (const auto& [key, value] : pres.generators) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::InvalidParameter, "presentation has no generator " + name);
}

GwaElement zero(const GwaPtr& algebra) { return GwaElement(algebra); }

// Relations of the presentation, evaluated from its data (q', A, B and the
// generator map) so that a tampered presentation is caught.
std::vector<Relation> build_relations(const FixedRingPresentation& pres) {
  const GwaPtr& R = pres.algebra;
  std::vector<Relation> rel;
  const bool laurent = R->kind() == BaseKind::Laurent;
  if (pres.kind == PresentationKind::DiagonalGwa) {
    const GwaElement& X = generator(pres, "X");
    const GwaElement& Y = generator(pres, "Y");
    const GwaElement& H = generator(pres, "H");
    const FieldElement& qp = pres.fixed_algebra->q;
    const LaurentPoly A = expand(pres.fixed_algebra->a);
    rel.push_back({"XH = q'HX", X * H, H * X * qp});
    rel.push_back({"YH = q'^-1 HY", Y * H, H * Y * qp.inverse()});
    rel.push_back({"YX = A(H)", Y * X, GwaElement::base(R, A.inflate(pres.n))});
    rel.push_back({"XY = A(q'H)", X * Y, GwaElement::base(R, A.scaled(qp).inflate(pres.n))});
    if (laurent) rel.push_back({"H H^-1 = 1", H * generator(pres, "H^-1"), GwaElement::scalar(R, 1L)});
    return rel;
  }
  const GwaElement Ab = GwaElement::base(R, pres.A);
  const GwaElement Bb = GwaElement::base(R, pres.B);
  if (pres.kind == PresentationKind::OmegaMinusOne) {
    const GwaElement& u = generator(pres, "u");
    const GwaElement& v = generator(pres, "v");
    const GwaElement& Y = generator(pres, "Y");
    rel.push_back({"uv + vu = 0", u * v + v * u, zero(R)});
    rel.push_back({"YX - XY = A(H)", Y * u - u * Y, Ab});
    rel.push_back({"X^2 - Y^2 = B(H)", u * u - Y * Y, Bb});
    if (laurent) rel.push_back({"v v^-1 = 1", v * generator(pres, "v^-1"), GwaElement::scalar(R, 1L)});
    return rel;
  }
  const GwaElement& X = generator(pres, "X");
  const GwaElement& Y2 = generator(pres, "Y^2");
  const GwaElement& YH = generator(pres, "YH");
  const GwaElement& H2 = generator(pres, "H^2");
  const GwaElement Y = GwaElement::x(R) * pres.phi.mu_scalar - GwaElement::y(R);
  const GwaElement H = GwaElement::h(R);
  rel.push_back({"YX - XY = A(H)", Y * X - X * Y, Ab});
  rel.push_back({"X^2 - Y^2 = B(H)", X * X - Y2, Bb});
  rel.push_back({"Y(YH) + (YH)Y = 0", Y * YH + YH * Y, zero(R)});
  rel.push_back({"Y^2 X - X Y^2 = 0", Y2 * X - X * Y2, zero(R)});
  rel.push_back({"X(YH) + (YH)X + A(H)H = 0", X * YH + YH * X + Ab * H, zero(R)});
  rel.push_back({"H^2 X = X H^2", H2 * X, X * H2});
  rel.push_back({"H^2 Y^2 = Y^2 H^2", H2 * Y2, Y2 * H2});
  rel.push_back({"H^2 (YH) = (YH) H^2", H2 * YH, YH * H2});
  if (laurent) rel.push_back({"H^2 H^-2 = 1", H2 * generator(pres, "H^-2"), GwaElement::scalar(R, 1L)});
  return rel;
}

void warn_if_symmetric(FixedRingPresentation& pres) {
  if (pres.algebra->kind() != BaseKind::Laurent) return;
  if (auto w = detect_symmetric(pres.algebra->a_factored(), BaseKind::Laurent)) {
    pres.warnings.push_back("a(h) is symmetric (lambda = " + w->lambda.to_string() +
                            "); Aut(R) is larger than the maps considered here");
  }
}

}  // namespace

FactoredPoly fixed_A_from_roots(const QuantumGwa& algebra, int n, int m) {
  const FactoredPoly b = descend_to_b(algebra.a_factored(), n);
  const FieldElement qn = algebra.q().pow(n);
  FactoredPoly A;
  long count = b.h_power;
  for (const Root& d : b.roots) count += d.multiplicity;
  A.unit = b.unit.pow(m) * qn.pow(-count * m * (m - 1) / 2);
  A.h_power = m * b.h_power;
  for (int i = 0; i < m; ++i) {
    for (const Root& d : b.roots) A.roots.push_back(Root{qn.pow(i) * d.value, d.multiplicity});
  }
  return A.canonical();
}

FixedRingPresentation fixed_ring_diagonal(const GwaPtr& algebra, const Automorphism& phi_in) {
  if (phi_in.omega) throw Error(ErrorCode::HypothesisViolated, "diagonal: the automorphism involves Omega");
  const Automorphism phi = validate(phi_in, *algebra);
  if (phi.mu_hpower != 0) throw Error(ErrorCode::InfiniteOrder, "mu is not a scalar, so eta has infinite order");
  const auto n = torsion_order(phi.gamma);
  const auto m = torsion_order(phi.mu_scalar);
  if (!n || !m) throw Error(ErrorCode::InfiniteOrder, phi.to_string() + " has infinite order");
  if (std::gcd(*n, *m) != 1) {
    throw Error(ErrorCode::HypothesisViolated,
                "gcd: gcd(m, n) = gcd(" + std::to_string(*m) + ", " + std::to_string(*n) + ") != 1");
  }
  if (phi.i0 % *n != 0) {
    throw Error(ErrorCode::HypothesisViolated,
                "i0: n = " + std::to_string(*n) + " does not divide i0 = " + std::to_string(phi.i0));
  }
  if (!is_in_h_power_subring(algebra->a(), static_cast<int>(*n))) {
    throw Error(ErrorCode::HypothesisViolated, "subring: a(h) is not in k[h^" + std::to_string(*n) + "]");
  }

  FixedRingPresentation pres;
  pres.kind = PresentationKind::DiagonalGwa;
  pres.algebra = algebra;
  pres.phi = phi;
  pres.n = static_cast<int>(*n);
  pres.m = static_cast<int>(*m);

  pres.A = algebra->yx_product(pres.m).deflate(pres.n);
  const FactoredPoly A = fixed_A_from_roots(*algebra, pres.n, pres.m);
  if (expand(A) != pres.A) {
    throw Error(ErrorCode::CrossCheckMismatch, "root formula " + A.to_string("H") + " differs from the product " +
                                                   pres.A.to_string("H"));
  }
  pres.A_factored = A;
  const FieldElement qp = algebra->q().pow(static_cast<long>(pres.n) * pres.m);
  pres.fixed_algebra = GwaData{algebra->kind(), qp, A};

  const std::string base = algebra->kind() == BaseKind::Poly ? "k[H]" : "k[H^{+-1}]";
  auto power = [](const std::string& v, int e) { return e == 1 ? v : v + "^" + std::to_string(e); };
  pres.presentation = base + "(sigma': H -> q'H, A), H = " + power("h", pres.n) + ", X = " + power("x", pres.m) +
                      ", Y = " + power("y", pres.m);
  pres.generators.emplace_back("X", GwaElement::monomial(algebra, pres.m, 0));
  pres.generators.emplace_back("Y", GwaElement::monomial(algebra, -pres.m, 0));
  pres.generators.emplace_back("H", GwaElement::monomial(algebra, 0, pres.n));
  if (algebra->kind() == BaseKind::Laurent) pres.generators.emplace_back("H^-1", GwaElement::monomial(algebra, 0, -pres.n));
  pres.relations = build_relations(pres);

  if (qp.is_one()) pres.warnings.push_back("q' = q^{mn} = 1: the fixed ring has a trivial twist");
  warn_if_symmetric(pres);
  return pres;
}

FixedRingPresentation fixed_ring_omega(const GwaPtr& algebra, const Automorphism& phi_in) {
  if (algebra->q() != FieldElement(-1L)) throw Error(ErrorCode::RequiresQMinusOne, "Omega needs q = -1");
  if (!phi_in.omega) throw Error(ErrorCode::HypothesisViolated, "omega: the automorphism does not involve Omega");
  const Automorphism phi = validate(phi_in, *algebra);
  const bool gamma_minus = phi.gamma == FieldElement(-1L);
  if (!gamma_minus && !phi.gamma.is_one()) {
    throw Error(ErrorCode::InvalidGamma, "gamma = " + phi.gamma.to_string() + " is not +-1");
  }
  if (phi.mu_hpower != 0) throw Error(ErrorCode::HypothesisViolated, "mu: mu must be a scalar");
  if (!phi.gamma.pow(phi.i0).is_one()) throw Error(ErrorCode::HypothesisViolated, "i0: gamma^i0 != 1");

  FixedRingPresentation pres;
  pres.kind = gamma_minus ? PresentationKind::OmegaMinusOne : PresentationKind::OmegaPlusOne;
  pres.algebra = algebra;
  pres.phi = phi;
  pres.n = gamma_minus ? 2 : 1;
  pres.m = static_cast<int>(torsion_order(phi.mu_scalar).value_or(0));

  const FieldElement& mu = phi.mu_scalar;
  const LaurentPoly& a = algebra->a();
  const LaurentPoly a_neg = a.scaled(FieldElement(-1L));
  pres.A = (a_neg - a) * (mu * FieldElement(2L));
  pres.B = (a + a_neg) * (mu * FieldElement(2L));

  const GwaElement X = GwaElement::x(algebra) * mu + GwaElement::y(algebra);
  const GwaElement Y = GwaElement::x(algebra) * mu - GwaElement::y(algebra);
  const GwaElement H = GwaElement::h(algebra);
  const bool laurent = algebra->kind() == BaseKind::Laurent;
  if (gamma_minus) {
    pres.presentation = laurent ? "k_{-1}[u, v^{+-1}]" : "k_{-1}[u, v]";
    pres.generators.emplace_back("u", X);
    pres.generators.emplace_back("v", H);
    if (laurent) pres.generators.emplace_back("v^-1", GwaElement::monomial(algebra, 0, -1));
    pres.generators.emplace_back("Y", Y);  // eliminated by X^2 - Y^2 = B(H)
  } else {
    pres.presentation = "k<X, Y^2, YH, H^2>";
    pres.generators.emplace_back("X", X);
    pres.generators.emplace_back("Y^2", Y * Y);
    pres.generators.emplace_back("YH", Y * H);
    pres.generators.emplace_back("H^2", GwaElement::monomial(algebra, 0, 2));
    if (laurent) pres.generators.emplace_back("H^-2", GwaElement::monomial(algebra, 0, -2));
  }
  pres.relations = build_relations(pres);
  warn_if_symmetric(pres);
  return pres;
}

FixedRingPresentation fixed_ring(const GwaPtr& algebra, const Automorphism& phi) {
  return phi.omega ? fixed_ring_omega(algebra, phi) : fixed_ring_diagonal(algebra, phi);
}

namespace {

void fail(VerificationReport& rep, bool& flag, const std::string& what) {
  flag = false;
  if (rep.first_failure.empty()) rep.first_failure = what;
}

void check_diagonal_span(const GwaPtr& algebra, const FixedRingPresentation& pres, const FixedSpace& fs,
                         VerificationReport& rep) {
  const TruncatedBasis box(algebra, rep.bounds);
  const auto width = static_cast<std::size_t>(box.h_count());
  std::map<int, Subspace> brute;
  for (int k = -rep.bounds.grade_bound; k <= rep.bounds.grade_bound; ++k) brute.emplace(k, Subspace(width));
  for (const GwaElement& v : fs.basis) {
    if (v.components().size() != 1) {
      fail(rep, rep.span_ok, "fixed vector " + v.to_string() + " is not homogeneous");
      return;
    }
    const int k = v.components().begin()->first;
    brute.at(k).insert(box.grade_coordinates(v, k));
  }
  for (auto& [k, space] : brute) {
    Subspace presented(width);
    if (k % pres.m == 0) {
      for (int j = box.h_min(); j <= box.h_max(); ++j) {
        if (j % pres.n != 0) continue;
        presented.insert(box.grade_coordinates(GwaElement::monomial(algebra, k, j), k));
      }
    }
    rep.block_dims[k] = {static_cast<int>(space.rank()), static_cast<int>(presented.rank())};
    if (!(space == presented)) {
      fail(rep, rep.span_ok, "grade " + std::to_string(k) + ": fixed space has dimension " +
                                 std::to_string(space.rank()) + ", presentation spans " +
                                 std::to_string(presented.rank()));
    }
  }
}

// Leading-grade division of a fixed element by X^K H^j (and X^{K-1} Y H^j when
// gamma = 1); succeeds when f lies in the presented subalgebra.
bool omega_reduces(GwaElement f, bool gamma_minus, const std::vector<GwaElement>& x_powers,
                   const std::vector<GwaElement>& x_powers_y) {
  const GwaPtr& R = f.parent();
  while (!f.is_zero()) {
    int K = 0;
    for (const auto& [k, d] : f.components()) K = std::max(K, std::abs(k));
    if (K == 0) {
      if (gamma_minus) return true;
      const LaurentPoly base = f.component(0);
      for (const auto& [e, c] : base.terms()) {
        if (e % 2 != 0) return false;
      }
      return true;
    }
    const LaurentPoly top = f.component(K);
    const LaurentPoly bottom = f.component(-K);
    const GwaElement& T1 = x_powers[static_cast<std::size_t>(K)];
    const FieldElement a1 = T1.component(K).coeff(0);
    const FieldElement b1 = T1.component(-K).coeff(0);
    std::set<int> exps;
    for (const auto& [e, c] : top.terms()) exps.insert(e);
    for (const auto& [e, c] : bottom.terms()) exps.insert(e);
    LaurentPoly P, Q;
    if (gamma_minus) {
      for (int e : exps) {
        const FieldElement p = top.coeff(e) / a1;
        if (p * b1 != bottom.coeff(e)) return false;
        P.add_term(e, p);
      }
      f -= T1 * GwaElement::base(R, P);
    } else {
      const GwaElement& T2 = x_powers_y[static_cast<std::size_t>(K)];
      const FieldElement a2 = T2.component(K).coeff(0);
      const FieldElement b2 = T2.component(-K).coeff(0);
      const FieldElement det = a1 * b2 - a2 * b1;
      for (int e : exps) {
        const FieldElement d = top.coeff(e);
        const FieldElement c = bottom.coeff(e);
        const FieldElement p = (d * b2 - a2 * c) / det;
        const FieldElement r = (a1 * c - b1 * d) / det;
        if ((!p.is_zero() && e % 2 != 0) || (!r.is_zero() && e % 2 == 0)) return false;
        P.add_term(e, p);
        Q.add_term(e, r);
      }
      f -= T1 * GwaElement::base(R, P) + T2 * GwaElement::base(R, Q);
    }
    if (!f.component(K).is_zero() || !f.component(-K).is_zero()) return false;
  }
  return true;
}

GwaElement shifted(const GwaElement& u, int s) {
  GwaElement out(u.parent());
  for (const auto& [k, d] : u.components()) out.add_component(k, d.shifted(s));
  return out;
}

int lowest_exponent(const GwaElement& u) {
  int e = std::numeric_limits<int>::max();
  for (const auto& [k, d] : u.components()) e = std::min(e, d.min_exponent());
  return e;
}

void check_omega_span(const GwaPtr& algebra, const FixedRingPresentation& pres, const FixedSpace& fs,
                      VerificationReport& rep) {
  const bool gamma_minus = pres.kind == PresentationKind::OmegaMinusOne;
  const AutomorphismAction act(pres.phi, algebra);
  for (const auto& [name, g] : pres.generators) {
    if (name == "Y") continue;  // Y is anti-fixed; only Y^2 is in the fixed ring
    if (act.apply(g) != g) fail(rep, rep.span_ok, "generator " + name + " is not fixed");
  }

  const int G = rep.bounds.grade_bound;
  const GwaElement X = gamma_minus ? generator(pres, "u") : generator(pres, "X");
  const GwaElement Y = GwaElement::x(algebra) * pres.phi.mu_scalar - GwaElement::y(algebra);
  std::vector<GwaElement> xp{GwaElement::scalar(algebra, 1L)};
  for (int K = 1; K <= G; ++K) xp.push_back(xp.back() * X);
  std::vector<GwaElement> xpy{GwaElement(algebra)};
  for (int K = 1; K <= G; ++K) xpy.push_back(xp[static_cast<std::size_t>(K - 1)] * Y);

  // Reductions commute with multiplication by h^2 on the right, so one
  // reduction per (block, parity of the lowest exponent) covers the rest.
  std::map<std::pair<int, int>, GwaElement> reduced;
  for (const GwaElement& v : fs.basis) {
    int K = 0;
    for (const auto& [k, d] : v.components()) K = std::max(K, std::abs(k));
    const int low = lowest_exponent(v);
    const std::pair<int, int> key{K, ((low % 2) + 2) % 2};
    auto it = reduced.find(key);
    if (it != reduced.end()) {
      const int shift = low - lowest_exponent(it->second);
      if (shifted(it->second, shift) == v) continue;
    }
    if (!omega_reduces(v, gamma_minus, xp, xpy)) {
      fail(rep, rep.span_ok, "fixed element " + v.to_string() + " is not in the presented subalgebra");
      return;
    }
    if (it == reduced.end()) reduced.emplace(key, v);
  }

  const TruncatedBasis box(algebra, rep.bounds);
  for (const auto& [K, dim] : fs.block_dims) {
    int presented = 0;
    for (int j = box.h_min(); j <= box.h_max(); ++j) {
      if (K == 0 && !gamma_minus && j % 2 != 0) continue;
      ++presented;
    }
    rep.block_dims[K] = {dim, presented};
    if (dim != presented) {
      fail(rep, rep.span_ok, "block |k| = " + std::to_string(K) + ": fixed space has dimension " +
                                 std::to_string(dim) + ", presentation has " + std::to_string(presented));
    }
  }
}

}  // namespace

VerificationReport check_fixed_ring(const GwaPtr& algebra, const Automorphism& phi, const FixedRingPresentation& pres,
                                    TruncationBounds bounds) {
  VerificationReport rep;
  rep.bounds = bounds;
  for (const Relation& r : build_relations(pres)) {
    const bool holds = r.lhs == r.rhs;
    rep.relations.push_back({r.name, holds});
    if (!holds) fail(rep, rep.relations_ok, "relation " + r.name + " fails: lhs - rhs = " + (r.lhs - r.rhs).to_string());
  }
  const FixedSpace fs = fixed_space(phi, algebra, bounds);
  if (pres.kind == PresentationKind::DiagonalGwa) {
    check_diagonal_span(algebra, pres, fs, rep);
  } else {
    check_omega_span(algebra, pres, fs, rep);
  }
  return rep;
}

VerificationReport verify_fixed_ring(const GwaPtr& algebra, const Automorphism& phi,
                                     const FixedRingPresentation& pres, TruncationBounds bounds) {
  VerificationReport rep = check_fixed_ring(algebra, phi, pres, bounds);
  if (!rep.passed()) throw Error(ErrorCode::VerificationFailed, rep.first_failure);
  return rep;
}

namespace {

std::string monomial_name(int k, int j) {
  std::string s;
  if (k != 0) s = (k > 0 ? "x" : "y") + (std::abs(k) == 1 ? std::string() : "^" + std::to_string(std::abs(k)));
  if (j != 0) {
    if (!s.empty()) s += "*";
    s += "h" + (j == 1 ? std::string() : "^" + std::to_string(j));
  }
  return s.empty() ? "1" : s;
}

}  // namespace

ProbeReport probe_gcd_failure(const GwaPtr& algebra, const Automorphism& phi_in, TruncationBounds bounds) {
  if (phi_in.omega) throw Error(ErrorCode::InvalidParameter, "the probe takes diagonal automorphisms");
  const Automorphism phi = validate(phi_in, *algebra);
  const FixedSpace fs = fixed_space(phi, algebra, bounds);
  const TruncatedBasis box(algebra, bounds);
  const auto width = static_cast<std::size_t>(box.h_count());

  // Fixed monomials (k, j); a diagonal map fixes a basis of monomials.
  std::vector<std::pair<int, int>> fixed;
  for (const GwaElement& v : fs.basis) {
    const auto& [k, d] = *v.components().begin();
    if (v.components().size() != 1 || !d.is_monomial()) {
      throw Error(ErrorCode::InvalidParameter, "fixed space is not spanned by monomials");
    }
    if (k == 0 && d.min_exponent() == 0) continue;
    fixed.emplace_back(k, d.min_exponent());
  }
  auto weight = [](const std::pair<int, int>& p) {
    return std::make_tuple(std::abs(p.first) + std::abs(p.second), std::abs(p.first), p.first < 0, p.second < 0);
  };
  std::sort(fixed.begin(), fixed.end(), [&](const auto& l, const auto& r) { return weight(l) < weight(r); });

  std::map<int, Subspace> span;
  for (int k = -bounds.grade_bound; k <= bounds.grade_bound; ++k) span.emplace(k, Subspace(width));
  std::vector<GwaElement> gens;
  std::vector<GwaElement> elements;  // inserted spanning elements
  std::vector<std::size_t> processed;  // generators already multiplied into elements[i]

  auto insert = [&](const GwaElement& u) {
    if (u.is_zero() || !box.fits(u) || u.components().size() != 1) return;
    const int k = u.components().begin()->first;
    if (span.at(k).insert(box.grade_coordinates(u, k))) {
      elements.push_back(u);
      processed.push_back(0);
    }
  };
  auto close = [&]() {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      while (processed[i] < gens.size()) {
        const GwaElement e = elements[i];
        const GwaElement& g = gens[processed[i]++];
        insert(e * g);
        insert(g * e);
      }
    }
  };
  insert(GwaElement::scalar(algebra, 1L));

  ProbeReport out;
  out.bounds = bounds;
  for (const auto& [k, j] : fixed) {
    const GwaElement u = GwaElement::monomial(algebra, k, j);
    if (span.at(k).contains(box.grade_coordinates(u, k))) continue;
    gens.push_back(u);
    out.generators.emplace_back(k, j);
    out.generator_names.push_back(monomial_name(k, j));
    insert(u);
    // Revisit every element against the new generator.
    close();
  }
  int count = 0;
  for (const auto& [k, j] : out.generators) {
    const bool inverse_pair = k == 0 && j < 0 &&
                              std::find(out.generators.begin(), out.generators.end(), std::make_pair(0, -j)) !=
                                  out.generators.end();
    if (!inverse_pair) ++count;
  }
  out.generator_count = count;
  out.exceeds_three = count > 3;
  return out;
}

}  // namespace qgwa
