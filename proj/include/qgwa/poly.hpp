#pragma once

// Univariate polynomials and Laurent polynomials over Q(zeta_N), in expanded
// (sparse exponent map) and root-factored form.

#include <map>
#include <string>
#include <vector>

#include "qgwa/field.hpp"

namespace qgwa {

enum class BaseKind { Poly, Laurent };

std::string to_string(BaseKind kind);

/// Sparse element of k[h] or k[h^{+-1}]; zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<int, FieldElement>;

  LaurentPoly() = default;
  explicit LaurentPoly(const FieldElement& constant);

  static LaurentPoly monomial(const FieldElement& coeff, int exponent);
  /// h - c
  static LaurentPoly linear(const FieldElement& root);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return is_zero() || terms_.begin()->first >= 0; }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  FieldElement coeff(int exponent) const;
  FieldElement leading_coeff() const;

  void add_term(int exponent, const FieldElement& coeff);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const FieldElement& scalar);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) { return !(lhs == rhs); }

  LaurentPoly pow(int exponent) const;
  /// h -> s*h.
  LaurentPoly scaled(const FieldElement& s) const;
  /// Multiplies by h^k.
  LaurentPoly shifted(int k) const;
  /// H -> h^n: the exponent of every term is multiplied by n.
  LaurentPoly inflate(int n) const;
  /// h^n -> H; requires every exponent divisible by n.
  LaurentPoly deflate(int n) const;

  /// Exact division by (h - root); throws InvalidParameter if not a factor.
  LaurentPoly divide_linear(const FieldElement& root) const;

  /// e.g. "4*h^2 - 1"; coefficients that are sums get parentheses.
  std::string to_string(const std::string& var = "h") const;

 private:
  TermMap terms_;
};

/// A nonzero root with its multiplicity.
struct Root {
  FieldElement value;
  int multiplicity = 1;
};

/// unit * h^{h_power} * prod (h - c_i)^{m_i}, every c_i nonzero and distinct
/// once canonicalized.
struct FactoredPoly {
  FieldElement unit{1L};
  int h_power = 0;
  std::vector<Root> roots;

  /// Merges repeated roots (first-occurrence order) and drops zero
  /// multiplicities; throws ZeroPolynomial on a zero unit.
  FactoredPoly canonical() const;
  /// Number of roots counted with multiplicity, zero root included.
  int root_count() const;
  int nonzero_root_count() const;
  std::string to_string(const std::string& var = "h") const;
};

LaurentPoly expand(const FactoredPoly& f);

/// h -> q^power * h. Throws InvalidParameter when q is 0 or 1.
LaurentPoly sigma_apply(const LaurentPoly& f, const FieldElement& q, int power);

bool is_in_h_power_subring(const LaurentPoly& f, int n);

/// Rewrites f in k[h^n] as b(H), H = h^n, grouping the nonzero roots into
/// complete orbits under multiplication by a primitive n-th root of unity.
/// Each orbit {w^j c} contributes the root c^n of b.
FactoredPoly descend_to_b(const FactoredPoly& f, int n);

struct Normalization {
  FactoredPoly poly;
  FieldElement unit_removed{1L};  // original unit
  int h_shift_removed = 0;        // h-power stripped (Laurent base only)
};

/// Monic form; the Laurent base also drops the h-power since
/// D(sigma, a) and D(sigma, h^k a) are isomorphic there.
Normalization normalize(const FactoredPoly& f, BaseKind kind);

}  // namespace qgwa
