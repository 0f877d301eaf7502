#pragma once

// Automorphisms Omega^e o eta_{gamma,mu} of a quantum GWA, where
//   eta(h) = gamma h,  eta(y) = y mu,  eta(x) = mu^{-1} gamma^{i0} x,
//   Omega(h) = -h, Omega(x) = y, Omega(y) = x   (q = -1 only),
// with mu = mu_scalar * h^{mu_hpower}.

#include <optional>
#include <string>
#include <vector>

#include "qgwa/gwa.hpp"

namespace qgwa {

struct Automorphism {
  bool omega = false;
  FieldElement gamma{1L};
  FieldElement mu_scalar{1L};
  int mu_hpower = 0;
  int i0 = 0;

  static Automorphism eta(const FieldElement& gamma, const FieldElement& mu, int i0, int mu_hpower = 0);
  static Automorphism identity(int i0 = 0);
  static Automorphism omega_map(int i0 = 0);

  LaurentPoly mu() const;
  bool is_identity() const;
  std::string to_string() const;
};

/// Same map on x, y, h. The index i0 is not compared: any admissible i0
/// gives the same map.
bool same_action(const Automorphism& lhs, const Automorphism& rhs);

struct CongruenceGap {
  bool monomial = false;
  int g = 0;  // gcd of exponent differences; 0 when monomial
};

CongruenceGap congruence_gap(const LaurentPoly& a);

/// Poly base: largest exponent of a; Laurent base: smallest.
int default_i0(const QuantumGwa& algebra);

/// Checks gamma in C_g, a_{i0} != 0, Omega => q = -1, Poly => scalar mu, and
/// that gamma^{i0} = gamma^{j0} for every alternative index j0. Returns phi
/// with its scalars moved to the algebra's field.
Automorphism validate(const Automorphism& phi, const QuantumGwa& algebra);

/// outer o inner, in the canonical form Omega^e o eta.
Automorphism compose(const QuantumGwa& algebra, const Automorphism& outer, const Automorphism& inner);
Automorphism inverse(const QuantumGwa& algebra, const Automorphism& phi);
Automorphism power(const QuantumGwa& algebra, const Automorphism& phi, long exponent);
std::optional<long> order_of(const QuantumGwa& algebra, const Automorphism& phi);

struct SubgroupClassification {
  int case_number = 1;  // 1: <eta>, 2: <Omega o eta>, 3: <Omega o eta, eta'>
  long order = 1;
  bool cyclic = true;
  std::vector<Automorphism> generators;  // canonical generators
  std::vector<Automorphism> elements;
};

SubgroupClassification classify_subgroup(const QuantumGwa& algebra, const std::vector<Automorphism>& generators);

struct SymmetryWitness {
  int l = 0;
  FieldElement delta{1L};
  FieldElement lambda{1L};
};

/// Searches lambda among products of two roots such that c -> lambda / c
/// permutes the nonzero roots; the witness is checked by exact expansion of
/// a(h) = delta h^l a(lambda / h). Returns nothing for the Poly base.
std::optional<SymmetryWitness> detect_symmetric(const FactoredPoly& a, BaseKind kind);

/// Precomputed images of the generators; apply() maps normal forms.
class AutomorphismAction {
 public:
  AutomorphismAction(const Automorphism& phi, GwaPtr algebra);

  const Automorphism& automorphism() const { return phi_; }
  GwaElement apply(const GwaElement& u) const;
  GwaElement image_x() const { return image_x_; }
  GwaElement image_y() const { return image_y_; }
  GwaElement image_h() const;

 private:
  GwaElement eta_apply(const GwaElement& u) const;
  const GwaElement& power_of(int grade) const;

  Automorphism phi_;
  GwaPtr algebra_;
  GwaElement eta_x_;
  GwaElement eta_y_;
  GwaElement image_x_;
  GwaElement image_y_;
  mutable std::map<int, GwaElement> powers_;
};

GwaElement apply_automorphism(const Automorphism& phi, const GwaElement& u);

}  // namespace qgwa
