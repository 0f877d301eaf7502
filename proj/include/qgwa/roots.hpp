#pragma once

// Root-congruence analysis of a(h), b(h^n) and A(H), and the classifiers
// built on it: global dimension, twisted Calabi-Yau, simplicity, rigidity.

#include <optional>
#include <string>
#include <vector>

#include "qgwa/automorphism.hpp"

namespace qgwa {

/// The data a classifier needs: base kind, q and the factored a. Unlike
/// QuantumGwa this allows q = 1, which occurs for fixed rings (q' = q^{mn}).
struct GwaData {
  BaseKind kind = BaseKind::Poly;
  FieldElement q{2L};
  FactoredPoly a;

  static GwaData of(const QuantumGwa& algebra);
};

struct PowerSearch {
  std::optional<long> k;
  bool complete = true;
};

/// k with ratio = q^k. Torsion q: exhaustive over one period, smallest k >= 0.
/// Otherwise the candidate log|ratio| / log|q| from an embedding with |q| != 1
/// is checked exactly; failing such an embedding, |k| <= k_bound is scanned
/// and the answer is marked incomplete.
PowerSearch find_power_of_q(const FieldElement& ratio, const FieldElement& q, long k_bound = 128);

struct CongruencePair {
  FieldElement root_i;
  FieldElement root_j;
  long k = 0;  // root_i = q^k root_j; 0 marks a multiple root
};

struct RootAnalysis {
  BaseKind kind = BaseKind::Poly;
  FieldElement q{2L};
  int n = 1;
  int m = 1;
  std::optional<long> ord_q;
  std::vector<Root> roots_a;  // nonzero roots
  int zero_mult = 0;          // Poly base only
  std::vector<Root> roots_b;  // nonzero roots of b, b(h^n) = a(h)
  int zero_mult_b = 0;
  std::vector<Root> roots_A;  // nonzero roots q^{in} d_j, merged
  int zero_mult_A = 0;
  long k_bound = 128;

  int n_a() const;
};

/// Throws NotInSubring / IncompleteOrbit when a is not a polynomial in h^n.
RootAnalysis analyze_roots(const GwaData& data, int n, int m, long k_bound = 128);

enum class RootSet { A_roots, B_roots, CapitalA_roots };

struct CongruenceResult {
  std::vector<CongruencePair> pairs;
  bool complete = true;
};

/// Congruences among the nonzero roots of the chosen polynomial, measured
/// with q for a, q^n for b and q' = q^{mn} for A. Multiple roots give k = 0
/// pairs. With max_k set, only 0 < k <= max_k pairs (and no
/// multiplicity pairs) are kept.
CongruenceResult congruent_pairs(const RootAnalysis& analysis, RootSet which = RootSet::A_roots,
                                 std::optional<long> max_k = std::nullopt);

struct MultiplicityClass {
  bool multiple = false;
  std::vector<std::string> causes;  // every triggered condition
  std::string lemma;                // which lemma was applied
  bool complete = true;
};

/// Decides whether A(H) has multiple roots via the root lemmas and checks the
/// answer against a direct count in roots_A (CrossCheckMismatch otherwise).
MultiplicityClass classify_A_multiplicity(const RootAnalysis& analysis);

enum class GlDim { One = 1, Two = 2, Infinite = 0 };
std::string to_string(GlDim d);

struct GlDimResult {
  GlDim value = GlDim::Two;
  std::string reason;
  bool complete = true;
};

GlDimResult gldim(const GwaData& data, long k_bound = 128);

struct GlDimFixedResult {
  GlDimResult of_algebra;
  GlDimResult via_theorem;
  GlDimResult direct;  // gldim of the presented fixed ring
  int theorem_case = 0;
};

/// Four-case dispatch for a diagonal automorphism satisfying the Hypothesis,
/// cross-checked against gldim of the presentation (q', A).
GlDimFixedResult gldim_fixed(const GwaPtr& algebra, const Automorphism& phi, long k_bound = 128);

struct CalabiYauResult {
  bool twisted_cy = false;
  std::optional<Automorphism> nakayama;
  bool nakayama_verified = false;
};

/// Poly base only (LaurentBaseUnsupported otherwise).
CalabiYauResult twisted_calabi_yau(const GwaPtr& algebra);
/// The same criterion on a presentation given as data; q may be 1.
bool twisted_calabi_yau(const GwaData& data);

struct SimplicityResult {
  bool simple = false;
  std::vector<std::string> reasons;  // failed conditions
  bool complete = true;
};

SimplicityResult is_simple(const GwaData& data, long k_bound = 128);
SimplicityResult is_simple(const QuantumGwa& algebra, long k_bound = 128);

struct SimplicityTransfer {
  SimplicityResult algebra;
  SimplicityResult fixed_ring;
};

SimplicityTransfer simplicity_transfer(const GwaPtr& algebra, const Automorphism& phi, long k_bound = 128);

struct RigidityResult {
  bool non_isomorphic = false;
  int n_a = 0;
  Rational predicted_deg_A;  // N_a * m / n
  int deg_A = 0;             // root count of the computed A(H)
};

RigidityResult rigidity(const GwaPtr& algebra, const Automorphism& phi);

}  // namespace qgwa
