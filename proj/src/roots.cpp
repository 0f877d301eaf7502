#include "qgwa/roots.hpp"

#include <cmath>
#include <numeric>

#include "qgwa/error.hpp"
#include "qgwa/fixed_ring.hpp"

namespace qgwa {

GwaData GwaData::of(const QuantumGwa& algebra) { return GwaData{algebra.kind(), algebra.q(), algebra.a_factored()}; }

PowerSearch find_power_of_q(const FieldElement& ratio, const FieldElement& q, long k_bound) {
  if (ratio.is_zero()) throw Error(ErrorCode::InvalidParameter, "ratio must be nonzero");
  if (q.is_zero() || q.is_one()) throw Error(ErrorCode::InvalidParameter, "q must not be 0 or 1");
  if (auto e = torsion_order(q)) {
    FieldElement power = FieldElement::rational(1, q.conductor());
    for (long k = 0; k < *e; ++k) {
      if (power == ratio) return {k, true};
      power *= q;
    }
    return {std::nullopt, true};
  }

  const int conductor = std::max(q.conductor(), ratio.conductor());
  for (int g : galois_indices(conductor)) {
    const ComplexEstimate eq = embed_complex(q.is_rational() ? q.promoted(conductor) : q, g);
    const double abs_q = std::abs(eq.value);
    if (std::abs(abs_q - 1.0) <= 4 * eq.radius + 1e-9) continue;
    const ComplexEstimate er = embed_complex(ratio.is_rational() ? ratio.promoted(conductor) : ratio, g);
    const double t = std::log(std::abs(er.value)) / std::log(abs_q);
    if (!std::isfinite(t) || std::abs(t) > 1e6) return {std::nullopt, false};
    const long k0 = std::lround(t);
    for (long k = k0 - 1; k <= k0 + 1; ++k) {
      if (q.pow(k) == ratio) return {k, true};
    }
    return {std::nullopt, true};
  }

  // Every embedding of q lies on the unit circle: bounded search only.
  for (long k = 0; k <= k_bound; ++k) {
    if (q.pow(k) == ratio) return {k, true};
    if (k > 0 && q.pow(-k) == ratio) return {-k, true};
  }
  return {std::nullopt, false};
}

int RootAnalysis::n_a() const {
  int total = zero_mult;
  for (const Root& r : roots_a) total += r.multiplicity;
  return total;
}

namespace {

FactoredPoly stripped(const GwaData& data) {
  FactoredPoly f = data.a.canonical();
  if (data.kind == BaseKind::Laurent) f.h_power = 0;
  return f;
}

bool has_multiple(const std::vector<Root>& roots) {
  return std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.multiplicity > 1; });
}

// Congruences c_i = param^k c_j among the given roots, see congruent_pairs.
CongruenceResult congruences(const std::vector<Root>& roots, const FieldElement& param, std::optional<long> max_k,
                             long k_bound) {
  CongruenceResult out;
  if (!max_k) {
    for (const Root& r : roots) {
      if (r.multiplicity > 1) out.pairs.push_back({r.value, r.value, 0});
    }
  }
  if (param.is_one()) return out;  // distinct roots are never congruent under the identity
  const auto order = torsion_order(param);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      const PowerSearch s = find_power_of_q(roots[i].value / roots[j].value, param, k_bound);
      out.complete = out.complete && s.complete;
      if (!s.k) continue;
      long k = *s.k;
      if (order) {
        k = ((k % *order) + *order) % *order;
      } else if (k <= 0) {
        continue;  // the reversed pair carries the positive exponent
      }
      if (k == 0) continue;
      if (max_k && k > *max_k) continue;
      out.pairs.push_back({roots[i].value, roots[j].value, k});
    }
  }
  return out;
}

}  // namespace

RootAnalysis analyze_roots(const GwaData& data, int n, int m, long k_bound) {
  if (n <= 0 || m <= 0) throw Error(ErrorCode::InvalidParameter, "n and m must be positive");
  RootAnalysis out;
  out.kind = data.kind;
  out.q = data.q;
  out.n = n;
  out.m = m;
  out.k_bound = k_bound;
  out.ord_q = torsion_order(data.q);
  const FactoredPoly f = stripped(data);
  out.roots_a = f.roots;
  out.zero_mult = f.h_power;
  const FactoredPoly b = descend_to_b(f, n);
  out.roots_b = b.roots;
  out.zero_mult_b = b.h_power;
  FactoredPoly A;
  const FieldElement qn = data.q.pow(n);
  for (int i = 0; i < m; ++i) {
    const FieldElement shift = qn.pow(i);
    for (const Root& d : b.roots) A.roots.push_back(Root{shift * d.value, d.multiplicity});
  }
  A = A.canonical();
  out.roots_A = A.roots;
  out.zero_mult_A = m * b.h_power;
  return out;
}

CongruenceResult congruent_pairs(const RootAnalysis& analysis, RootSet which, std::optional<long> max_k) {
  switch (which) {
    case RootSet::A_roots:
      return congruences(analysis.roots_a, analysis.q, max_k, analysis.k_bound);
    case RootSet::B_roots:
      return congruences(analysis.roots_b, analysis.q.pow(analysis.n), max_k, analysis.k_bound);
    case RootSet::CapitalA_roots:
      return congruences(analysis.roots_A, analysis.q.pow(static_cast<long>(analysis.n) * analysis.m), max_k,
                         analysis.k_bound);
  }
  return {};
}

MultiplicityClass classify_A_multiplicity(const RootAnalysis& an) {
  MultiplicityClass out;
  const bool zero_root = an.kind == BaseKind::Poly && an.zero_mult > 0;
  if (zero_root) {
    out.lemma = "zero_root";
    if (an.m > 1) out.causes.push_back("zero_root_m_gt_1");
    if (an.zero_mult > an.n) out.causes.push_back("zero_root_k_gt_n");
  } else {
    out.lemma = an.ord_q ? "root_of_unity" : "nonroot_of_unity";
  }

  // Conditions on the nonzero part p(h) of a.
  if (has_multiple(an.roots_a)) out.causes.push_back("multiple_roots");
  if (an.m > 1) {
    const CongruenceResult small = congruences(an.roots_a, an.q, an.m - 1, an.k_bound);
    out.complete = small.complete;
    if (!small.pairs.empty()) out.causes.push_back("congruent_roots_k_le_m_minus_1");
    if (an.ord_q && !an.roots_b.empty()) {
      for (long k = 1; k <= an.m - 1; ++k) {
        if ((static_cast<long>(an.n) * k) % *an.ord_q == 0) {
          out.causes.push_back("order_divides_nk");
          break;
        }
      }
    }
  }
  out.multiple = !out.causes.empty();

  const bool direct = has_multiple(an.roots_A) || an.zero_mult_A > 1;
  if (out.complete && direct != out.multiple) {
    throw Error(ErrorCode::CrossCheckMismatch, std::string("root lemmas say A(H) has ") +
                                                   (out.multiple ? "" : "no ") +
                                                   "multiple roots, direct count disagrees");
  }
  if (!out.complete) out.multiple = direct;
  return out;
}

std::string to_string(GlDim d) {
  switch (d) {
    case GlDim::One:
      return "1";
    case GlDim::Two:
      return "2";
    case GlDim::Infinite:
      return "infinite";
  }
  return "?";
}

GlDimResult gldim(const GwaData& data, long k_bound) {
  const FactoredPoly f = stripped(data);
  if (has_multiple(f.roots) || (data.kind == BaseKind::Poly && f.h_power > 1)) {
    return {GlDim::Infinite, "a has multiple roots", true};
  }
  if (data.kind == BaseKind::Poly) return {GlDim::Two, "D = k[h]", true};
  if (torsion_order(data.q)) return {GlDim::Two, "q is a root of unity", true};
  const CongruenceResult c = congruences(f.roots, data.q, std::nullopt, k_bound);
  if (!c.pairs.empty()) return {GlDim::Two, "a has congruent roots", true};
  return {GlDim::One, "Laurent base, q not a root of unity, no multiple or congruent roots", c.complete};
}

GlDimFixedResult gldim_fixed(const GwaPtr& algebra, const Automorphism& phi, long k_bound) {
  const FixedRingPresentation pres = fixed_ring_diagonal(algebra, phi);
  const GwaData data = GwaData::of(*algebra);
  GlDimFixedResult out;
  out.of_algebra = gldim(data, k_bound);
  const RootAnalysis an = analyze_roots(data, pres.n, pres.m, k_bound);
  const MultiplicityClass cls = classify_A_multiplicity(an);
  const bool torsion = an.ord_q.has_value();
  GlDimResult& t = out.via_theorem;
  t.complete = out.of_algebra.complete && cls.complete;

  if (an.kind == BaseKind::Poly && an.zero_mult > 0) {
    // Zero root: the lemma for a = h^k p(h) decides, whatever gldim R is.
    out.theorem_case = out.of_algebra.value == GlDim::Infinite ? 4 : (torsion ? 3 : 2);
    t.value = cls.multiple ? GlDim::Infinite : GlDim::Two;
    t.reason = cls.multiple ? "zero-root lemma: A(H) has multiple roots" : "zero-root lemma: A(H) has simple roots";
  } else if (out.of_algebra.value == GlDim::One) {
    out.theorem_case = 1;
    t.value = GlDim::One;
    t.reason = "gldim R = 1";
  } else if (out.of_algebra.value == GlDim::Two) {
    out.theorem_case = torsion ? 3 : 2;
    t.value = cls.multiple ? GlDim::Infinite : GlDim::Two;
    t.reason = cls.multiple ? "A(H) has multiple roots (" + cls.causes.front() + ")" : "A(H) has no multiple roots";
  } else {
    out.theorem_case = 4;
    const bool exception = pres.m == 1 && an.zero_mult == pres.n && !has_multiple(an.roots_a);
    t.value = exception ? GlDim::Two : GlDim::Infinite;
    t.reason = exception ? "m = 1 and 0 is a root of multiplicity n" : "a has multiple roots";
  }

  out.direct = gldim(*pres.fixed_algebra, k_bound);
  if (t.complete && out.direct.complete && out.direct.value != t.value) {
    throw Error(ErrorCode::CrossCheckMismatch, "theorem gives gldim " + to_string(t.value) +
                                                   ", the presentation gives " + to_string(out.direct.value));
  }
  return out;
}

bool twisted_calabi_yau(const GwaData& data) {
  if (data.kind != BaseKind::Poly) {
    throw Error(ErrorCode::LaurentBaseUnsupported, "the Calabi-Yau criterion is stated for k[h] only");
  }
  const FactoredPoly f = data.a.canonical();
  return !has_multiple(f.roots) && f.h_power <= 1;
}

CalabiYauResult twisted_calabi_yau(const GwaPtr& algebra) {
  CalabiYauResult out;
  out.twisted_cy = twisted_calabi_yau(GwaData::of(*algebra));
  if (!out.twisted_cy) return out;
  const Automorphism nu =
      validate(Automorphism::eta(FieldElement(1L), algebra->q().inverse(), default_i0(*algebra)), *algebra);
  const AutomorphismAction act(nu, algebra);
  const GwaElement x = act.image_x();
  const GwaElement y = act.image_y();
  const GwaElement h = act.image_h();
  const FieldElement& q = algebra->q();
  const GwaElement a = GwaElement::base(algebra, algebra->a());
  const GwaElement sa = GwaElement::base(algebra, algebra->sigma(algebra->a(), 1));
  out.nakayama_verified = x == GwaElement::x(algebra) * q && y == GwaElement::y(algebra) * q.inverse() &&
                          h == GwaElement::h(algebra) && y * x == act.apply(a) && x * y == act.apply(sa) &&
                          x * h == h * x * q && y * h * q == h * y;
  out.nakayama = nu;
  return out;
}

SimplicityResult is_simple(const GwaData& data, long k_bound) {
  SimplicityResult out;
  if (data.kind == BaseKind::Poly) out.reasons.push_back("D = k[h] has the sigma-stable ideal (h)");
  if (torsion_order(data.q)) out.reasons.push_back("q is a root of unity");
  if (out.reasons.empty()) {
    const CongruenceResult c = congruences(stripped(data).roots, data.q, std::nullopt, k_bound);
    out.complete = c.complete;
    const bool distinct = std::any_of(c.pairs.begin(), c.pairs.end(), [](const CongruencePair& p) { return p.k != 0; });
    if (distinct) out.reasons.push_back("a has distinct congruent roots");
  }
  out.simple = out.reasons.empty();
  return out;
}

SimplicityResult is_simple(const QuantumGwa& algebra, long k_bound) { return is_simple(GwaData::of(algebra), k_bound); }

SimplicityTransfer simplicity_transfer(const GwaPtr& algebra, const Automorphism& phi, long k_bound) {
  const FixedRingPresentation pres = fixed_ring_diagonal(algebra, phi);
  SimplicityTransfer out{is_simple(*algebra, k_bound), is_simple(*pres.fixed_algebra, k_bound)};
  if (out.algebra.complete && out.fixed_ring.complete && out.algebra.simple != out.fixed_ring.simple) {
    throw Error(ErrorCode::CrossCheckMismatch, "R and its fixed ring disagree on simplicity");
  }
  return out;
}

RigidityResult rigidity(const GwaPtr& algebra, const Automorphism& phi) {
  const FixedRingPresentation pres = fixed_ring_diagonal(algebra, phi);
  const GwaData data = GwaData::of(*algebra);
  const FactoredPoly a = stripped(data);
  RigidityResult out;
  out.n_a = a.root_count();
  out.predicted_deg_A = Rational(out.n_a * pres.m, pres.n);
  out.predicted_deg_A.canonicalize();
  const FactoredPoly A = pres.fixed_algebra->a.canonical();
  out.deg_A = algebra->kind() == BaseKind::Poly ? A.root_count() : A.nonzero_root_count();
  if (Rational(out.deg_A) != out.predicted_deg_A) {
    throw Error(ErrorCode::CrossCheckMismatch, "deg A(H) differs from N_a m / n");
  }
  out.non_isomorphic = !pres.phi.is_identity();
  return out;
}

}  // namespace qgwa
