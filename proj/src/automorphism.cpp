#include "qgwa/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "qgwa/error.hpp"

namespace qgwa {

namespace {

FieldElement in_field(const FieldElement& c, int conductor) {
  return c.is_rational() ? c.promoted(conductor) : c;
}

bool is_minus_one(const FieldElement& q) { return q == FieldElement(-1L); }

std::string mu_string(const Automorphism& phi) {
  std::string s = phi.mu_scalar.to_string();
  if (!phi.mu_scalar.is_rational()) s = "(" + s + ")";
  if (phi.mu_hpower != 0) s += "*h^" + std::to_string(phi.mu_hpower);
  return s;
}

}  // namespace

Automorphism Automorphism::eta(const FieldElement& gamma, const FieldElement& mu, int i0, int mu_hpower) {
  Automorphism phi;
  phi.gamma = gamma;
  phi.mu_scalar = mu;
  phi.mu_hpower = mu_hpower;
  phi.i0 = i0;
  return phi;
}

Automorphism Automorphism::identity(int i0) { return eta(FieldElement(1L), FieldElement(1L), i0); }

Automorphism Automorphism::omega_map(int i0) {
  Automorphism phi = identity(i0);
  phi.omega = true;
  return phi;
}

LaurentPoly Automorphism::mu() const { return LaurentPoly::monomial(mu_scalar, mu_hpower); }

bool Automorphism::is_identity() const {
  return !omega && gamma.is_one() && mu_scalar.is_one() && mu_hpower == 0;
}

std::string Automorphism::to_string() const {
  std::string s = "eta[gamma=" + gamma.to_string() + ", mu=" + mu_string(*this) + "]";
  return omega ? "Omega o " + s : s;
}

bool same_action(const Automorphism& lhs, const Automorphism& rhs) {
  return lhs.omega == rhs.omega && lhs.gamma == rhs.gamma && lhs.mu_scalar == rhs.mu_scalar &&
         lhs.mu_hpower == rhs.mu_hpower;
}

CongruenceGap congruence_gap(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "congruence gap of zero");
  CongruenceGap out;
  if (a.is_monomial()) {
    out.monomial = true;
    return out;
  }
  const int first = a.min_exponent();
  int g = 0;
  for (const auto& [e, c] : a.terms()) g = std::gcd(g, e - first);
  out.g = g;
  return out;
}

int default_i0(const QuantumGwa& algebra) {
  return algebra.kind() == BaseKind::Poly ? algebra.a().max_exponent() : algebra.a().min_exponent();
}

Automorphism validate(const Automorphism& phi, const QuantumGwa& algebra) {
  const int n = algebra.conductor();
  Automorphism out = phi;
  out.gamma = in_field(phi.gamma, n);
  out.mu_scalar = in_field(phi.mu_scalar, n);
  if (out.gamma.is_zero()) throw Error(ErrorCode::InvalidAutomorphism, "gamma must be nonzero");
  if (out.mu_scalar.is_zero()) throw Error(ErrorCode::InvalidAutomorphism, "mu must be nonzero");
  if (out.omega && !is_minus_one(algebra.q())) {
    throw Error(ErrorCode::OmegaRequiresQMinusOne, "Omega exists only when q = -1");
  }
  if (algebra.kind() == BaseKind::Poly && out.mu_hpower != 0) {
    throw Error(ErrorCode::LaurentMuInPolyBase, "mu must be a scalar over k[h]");
  }
  const LaurentPoly& a = algebra.a();
  if (a.coeff(out.i0).is_zero()) {
    throw Error(ErrorCode::InvalidI0, "a has no h^" + std::to_string(out.i0) + " term");
  }
  const CongruenceGap gap = congruence_gap(a);
  if (!gap.monomial && !out.gamma.pow(gap.g).is_one()) {
    throw Error(ErrorCode::GammaNotInCg,
                "gamma = " + out.gamma.to_string() + " is not a " + std::to_string(gap.g) + "-th root of unity");
  }
  const FieldElement reference = out.gamma.pow(out.i0);
  for (const auto& [j0, c] : a.terms()) {
    if (out.gamma.pow(j0) != reference) {
      throw Error(ErrorCode::GammaNotInCg, "gamma^i0 depends on the choice of i0");
    }
  }
  return out;
}

namespace {

// eta_{g2,m2} o eta_{g1,m1} = eta_{g2 g1, g2^{deg m1} m2 m1}.
Automorphism compose_eta(const Automorphism& outer, const Automorphism& inner) {
  Automorphism out;
  out.gamma = outer.gamma * inner.gamma;
  out.mu_scalar = outer.gamma.pow(inner.mu_hpower) * outer.mu_scalar * inner.mu_scalar;
  out.mu_hpower = outer.mu_hpower + inner.mu_hpower;
  out.i0 = outer.i0;
  return out;
}

// eta_{g,nu} o Omega = Omega o eta_{g, g^{i0} nu^{-1}}.
Automorphism push_through_omega(const Automorphism& eta) {
  Automorphism out = eta;
  out.omega = false;
  out.mu_scalar = eta.gamma.pow(eta.i0) * eta.mu_scalar.inverse();
  out.mu_hpower = -eta.mu_hpower;
  return out;
}

}  // namespace

Automorphism compose(const QuantumGwa& algebra, const Automorphism& outer_in, const Automorphism& inner_in) {
  const Automorphism outer = validate(outer_in, algebra);
  const Automorphism inner = validate(inner_in, algebra);
  Automorphism outer_eta = outer;
  outer_eta.omega = false;
  Automorphism inner_eta = inner;
  inner_eta.omega = false;
  bool omega = outer.omega;
  if (inner.omega) {
    outer_eta = push_through_omega(outer_eta);
    omega = !omega;
  }
  Automorphism out = compose_eta(outer_eta, inner_eta);
  out.omega = omega;
  return out;
}

Automorphism inverse(const QuantumGwa& algebra, const Automorphism& phi_in) {
  const Automorphism phi = validate(phi_in, algebra);
  // eta_{g,mu}^{-1} = eta_{g^{-1}, (g^{-deg mu} mu)^{-1}}.
  Automorphism eta_inv;
  eta_inv.gamma = phi.gamma.inverse();
  eta_inv.mu_scalar = phi.gamma.pow(phi.mu_hpower) * phi.mu_scalar.inverse();
  eta_inv.mu_hpower = -phi.mu_hpower;
  eta_inv.i0 = phi.i0;
  if (!phi.omega) return eta_inv;
  // (Omega o eta)^{-1} = eta^{-1} o Omega.
  return compose(algebra, eta_inv, Automorphism::omega_map(phi.i0));
}

Automorphism power(const QuantumGwa& algebra, const Automorphism& phi, long exponent) {
  if (exponent < 0) return power(algebra, inverse(algebra, phi), -exponent);
  Automorphism result = Automorphism::identity(phi.i0);
  Automorphism base = phi;
  while (exponent > 0) {
    if (exponent & 1) result = compose(algebra, result, base);
    exponent >>= 1;
    if (exponent > 0) base = compose(algebra, base, base);
  }
  return result;
}

std::optional<long> order_of(const QuantumGwa& algebra, const Automorphism& phi_in) {
  const Automorphism phi = validate(phi_in, algebra);
  if (phi.omega) {
    // Odd powers keep an Omega factor, so the order is twice that of phi^2.
    auto half = order_of(algebra, compose(algebra, phi, phi));
    if (!half) return std::nullopt;
    return 2 * *half;
  }
  if (phi.mu_hpower != 0) return std::nullopt;
  auto og = torsion_order(phi.gamma);
  auto om = torsion_order(phi.mu_scalar);
  if (!og || !om) return std::nullopt;
  return std::lcm(*og, *om);
}

SubgroupClassification classify_subgroup(const QuantumGwa& algebra, const std::vector<Automorphism>& generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidParameter, "no generators");
  std::vector<Automorphism> gens;
  for (const Automorphism& g : generators) {
    Automorphism v = validate(g, algebra);
    if (!order_of(algebra, v)) {
      throw Error(ErrorCode::InfiniteOrderGenerator, v.to_string() + " has infinite order");
    }
    gens.push_back(v);
  }
  if (detect_symmetric(algebra.a_factored(), algebra.kind())) {
    throw Error(ErrorCode::SymmetricDefiningPolynomial, "a(h) is symmetric; the classification does not apply");
  }

  constexpr std::size_t kMaxGroup = 20000;
  std::vector<Automorphism> elements{Automorphism::identity(gens.front().i0)};
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    for (const Automorphism& g : gens) {
      Automorphism next = compose(algebra, g, elements[idx]);
      auto it = std::find_if(elements.begin(), elements.end(),
                             [&](const Automorphism& e) { return same_action(e, next); });
      if (it == elements.end()) {
        elements.push_back(next);
        if (elements.size() > kMaxGroup) throw Error(ErrorCode::InvalidParameter, "group too large to enumerate");
      }
    }
  }

  SubgroupClassification out;
  out.order = static_cast<long>(elements.size());
  auto element_of_order = [&](long target, bool want_omega) -> std::optional<Automorphism> {
    for (const Automorphism& e : elements) {
      if (e.omega != want_omega) continue;
      if (order_of(algebra, e) == target) return e;
    }
    return std::nullopt;
  };
  const bool has_omega =
      std::any_of(elements.begin(), elements.end(), [](const Automorphism& e) { return e.omega; });
  if (!has_omega) {
    out.case_number = 1;
    if (auto g = element_of_order(out.order, false)) {
      out.generators = {*g};
    } else {
      out.cyclic = false;
      out.generators = gens;
    }
  } else if (auto g = element_of_order(out.order, true)) {
    out.case_number = 2;
    out.generators = {*g};
  } else {
    out.case_number = 3;
    out.cyclic = false;
    const Automorphism omega_part =
        *std::find_if(elements.begin(), elements.end(), [](const Automorphism& e) { return e.omega; });
    out.generators = {omega_part};
    // The Omega-free part has index 2.
    if (auto k = element_of_order(out.order / 2, false)) {
      out.generators.push_back(*k);
    } else {
      for (const Automorphism& g : gens) {
        if (!g.omega) out.generators.push_back(g);
      }
    }
  }
  out.elements = std::move(elements);
  return out;
}

std::optional<SymmetryWitness> detect_symmetric(const FactoredPoly& input, BaseKind kind) {
  if (kind == BaseKind::Poly) return std::nullopt;
  const FactoredPoly a = input.canonical();
  const LaurentPoly expanded = expand(a);
  const int conductor = expanded.leading_coeff().conductor();

  auto verify = [&](const FieldElement& lambda, int l, const FieldElement& delta) {
    // delta h^l a(lambda / h)
    LaurentPoly reflected;
    for (const auto& [e, c] : expanded.terms()) reflected.add_term(l - e, delta * c * lambda.pow(e));
    return reflected == expanded;
  };

  std::vector<FieldElement> candidates;
  if (a.roots.empty()) {
    candidates.push_back(FieldElement::rational(1, conductor));
  }
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    for (std::size_t j = i; j < a.roots.size(); ++j) {
      FieldElement lambda = a.roots[i].value * a.roots[j].value;
      if (std::find(candidates.begin(), candidates.end(), lambda) == candidates.end()) candidates.push_back(lambda);
    }
  }
  for (const FieldElement& lambda : candidates) {
    bool permutes = true;
    for (const Root& r : a.roots) {
      const FieldElement image = lambda / r.value;
      auto it = std::find_if(a.roots.begin(), a.roots.end(), [&](const Root& s) { return s.value == image; });
      if (it == a.roots.end() || it->multiplicity != r.multiplicity) {
        permutes = false;
        break;
      }
    }
    if (!permutes) continue;
    // a(lambda/h) = u lambda^k prod(-c)^m h^{-2k-N'} a(h).
    FieldElement factor = lambda.pow(a.h_power);
    for (const Root& r : a.roots) factor *= (-r.value).pow(r.multiplicity);
    SymmetryWitness w;
    w.lambda = lambda;
    w.delta = factor.inverse();
    w.l = 2 * a.h_power + a.nonzero_root_count();
    if (verify(w.lambda, w.l, w.delta)) return w;
  }
  return std::nullopt;
}

AutomorphismAction::AutomorphismAction(const Automorphism& phi, GwaPtr algebra)
    : phi_(validate(phi, *algebra)),
      algebra_(std::move(algebra)),
      eta_x_(algebra_),
      eta_y_(algebra_),
      image_x_(algebra_),
      image_y_(algebra_) {
  const LaurentPoly mu = phi_.mu();
  const LaurentPoly mu_inv = LaurentPoly::monomial(phi_.mu_scalar.inverse(), -phi_.mu_hpower);
  eta_x_ = GwaElement::base(algebra_, mu_inv * phi_.gamma.pow(phi_.i0)) * GwaElement::x(algebra_);
  eta_y_ = GwaElement::y(algebra_) * GwaElement::base(algebra_, mu);
  image_x_ = apply(GwaElement::x(algebra_));
  image_y_ = apply(GwaElement::y(algebra_));
}

GwaElement AutomorphismAction::image_h() const { return apply(GwaElement::h(algebra_)); }

const GwaElement& AutomorphismAction::power_of(int grade) const {
  auto it = powers_.find(grade);
  if (it != powers_.end()) return it->second;
  GwaElement value = grade > 0 ? eta_x_.pow(grade) : eta_y_.pow(-grade);
  return powers_.emplace(grade, std::move(value)).first->second;
}

GwaElement AutomorphismAction::eta_apply(const GwaElement& u) const {
  GwaElement out(algebra_);
  for (const auto& [k, d] : u.components()) {
    GwaElement image_d = GwaElement::base(algebra_, d.scaled(phi_.gamma));
    out += k == 0 ? image_d : power_of(k) * image_d;
  }
  return out;
}

GwaElement AutomorphismAction::apply(const GwaElement& u) const {
  if (u.parent() != algebra_) throw Error(ErrorCode::MismatchedAlgebra, "element of another algebra");
  GwaElement v = eta_apply(u);
  if (!phi_.omega) return v;
  GwaElement out(algebra_);
  const FieldElement minus_one = FieldElement::rational(-1, algebra_->conductor());
  for (const auto& [k, d] : v.components()) out.add_component(-k, d.scaled(minus_one));
  return out;
}

GwaElement apply_automorphism(const Automorphism& phi, const GwaElement& u) {
  return AutomorphismAction(phi, u.parent()).apply(u);
}

}  // namespace qgwa
