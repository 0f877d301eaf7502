#pragma once

// Fixed rings R^<phi> of quantum GWAs in closed form, with a brute-force
// check against the truncated fixed space.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgwa/fixed_space.hpp"
#include "qgwa/roots.hpp"

namespace qgwa {

enum class PresentationKind { DiagonalGwa, OmegaMinusOne, OmegaPlusOne };
std::string to_string(PresentationKind kind);

/// lhs = rhs in R after substituting the generator map.
struct Relation {
  std::string name;
  GwaElement lhs;
  GwaElement rhs;
};

struct FixedRingPresentation {
  PresentationKind kind = PresentationKind::DiagonalGwa;
  GwaPtr algebra;
  Automorphism phi;
  int n = 1;  // ord(gamma)
  int m = 1;  // ord(mu)

  // DiagonalGwa: the fixed ring D^<phi>(sigma^m, A) over H = h^n.
  std::optional<GwaData> fixed_algebra;
  LaurentPoly A;  // in H (diagonal) or h (Omega cases)
  LaurentPoly B;  // Omega cases only
  std::optional<FactoredPoly> A_factored;

  std::string presentation;
  std::vector<std::pair<std::string, GwaElement>> generators;
  std::vector<Relation> relations;
  std::vector<std::string> warnings;
};

FixedRingPresentation fixed_ring_diagonal(const GwaPtr& algebra, const Automorphism& phi);
FixedRingPresentation fixed_ring_omega(const GwaPtr& algebra, const Automorphism& phi);
/// Dispatches on phi.omega.
FixedRingPresentation fixed_ring(const GwaPtr& algebra, const Automorphism& phi);

/// Root formula: A(H) = unit^m q^{-n N m(m-1)/2} H^{m e} prod (H - q^{in} d_j)
/// with b(H) = unit H^e prod (H - d_j), N = e + #roots of b.
FactoredPoly fixed_A_from_roots(const QuantumGwa& algebra, int n, int m);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

struct VerificationReport {
  TruncationBounds bounds;
  std::vector<RelationCheck> relations;
  bool relations_ok = true;
  bool span_ok = true;
  /// grade (diagonal) or |grade| (Omega): {brute-force dim, presented dim}
  std::map<int, std::pair<int, int>> block_dims;
  std::string first_failure;
  bool passed() const { return relations_ok && span_ok; }
};

/// Builds the report without throwing on a failed check.
VerificationReport check_fixed_ring(const GwaPtr& algebra, const Automorphism& phi,
                                    const FixedRingPresentation& pres, TruncationBounds bounds = {});
/// As check_fixed_ring, but throws VerificationFailed with the first counterexample.
VerificationReport verify_fixed_ring(const GwaPtr& algebra, const Automorphism& phi,
                                     const FixedRingPresentation& pres, TruncationBounds bounds = {});

struct ProbeReport {
  TruncationBounds bounds;
  std::vector<std::pair<int, int>> generators;  // (grade, h-exponent)
  std::vector<std::string> generator_names;
  int generator_count = 0;  // h^n and h^{-n} counted once
  bool exceeds_three = false;
};

/// Greedy minimal generating set of the fixed monomials inside the truncation.
/// Experimental: says nothing about generators beyond the bounds.
ProbeReport probe_gcd_failure(const GwaPtr& algebra, const Automorphism& phi, TruncationBounds bounds = {});

}  // namespace qgwa
