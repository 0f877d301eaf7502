#pragma once

// Quantum generalized Weyl algebras D(sigma, a), D = k[h] or k[h^{+-1}],
// sigma(h) = q h, with Z-graded normal-form elements
//   sum_{k>0} x^k d_k + d_0 + sum_{k<0} y^{-k} d_k.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qgwa/poly.hpp"

namespace qgwa {

class QuantumGwa;
using GwaPtr = std::shared_ptr<const QuantumGwa>;

class QuantumGwa {
 public:
  /// Throws InvalidParameter if q is 0 or 1, or if a is a unit of D.
  static GwaPtr create(BaseKind kind, const FieldElement& q, const FactoredPoly& a);

  BaseKind kind() const { return kind_; }
  const FieldElement& q() const { return q_; }
  const FactoredPoly& a_factored() const { return a_factored_; }
  const LaurentPoly& a() const { return a_; }
  int conductor() const { return q_.conductor(); }

  /// sigma^power(d): h -> q^power h.
  LaurentPoly sigma(const LaurentPoly& d, int power) const;

  /// y^m x^m = prod_{i=0}^{m-1} sigma^{-i}(a).
  const LaurentPoly& yx_product(int m) const;
  /// x^m y^m = prod_{i=1}^{m} sigma^{i}(a).
  const LaurentPoly& xy_product(int m) const;

  std::string to_string() const;

 private:
  QuantumGwa(BaseKind kind, FieldElement q, FactoredPoly a);

  BaseKind kind_;
  FieldElement q_;
  FactoredPoly a_factored_;
  LaurentPoly a_;

  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unique_ptr<LaurentPoly>> yx_cache_;
  mutable std::vector<std::unique_ptr<LaurentPoly>> xy_cache_;
};

enum class ProductSide { YX, XY };

/// Closed form of y^m x^m (YX) or x^m y^m (XY).
LaurentPoly power_product_identity(const QuantumGwa& algebra, int m, ProductSide side);

class GwaElement {
 public:
  using ComponentMap = std::map<int, LaurentPoly>;

  explicit GwaElement(GwaPtr parent);

  static GwaElement x(GwaPtr parent);
  static GwaElement y(GwaPtr parent);
  static GwaElement h(GwaPtr parent);
  static GwaElement scalar(GwaPtr parent, const FieldElement& c);
  /// Grade-0 element d.
  static GwaElement base(GwaPtr parent, const LaurentPoly& d);
  /// X_grade * d, where X_k = x^k (k > 0), 1, y^{-k} (k < 0).
  static GwaElement homogeneous(GwaPtr parent, int grade, const LaurentPoly& d);
  /// coeff * X_grade * h^j.
  static GwaElement monomial(GwaPtr parent, int grade, int h_exponent, const FieldElement& coeff = FieldElement(1L));

  const GwaPtr& parent() const { return parent_; }
  const ComponentMap& components() const { return components_; }
  LaurentPoly component(int grade) const;
  bool is_zero() const { return components_.empty(); }

  void add_component(int grade, const LaurentPoly& d);

  GwaElement& operator+=(const GwaElement& rhs);
  GwaElement& operator-=(const GwaElement& rhs);
  GwaElement& operator*=(const FieldElement& scalar);
  friend GwaElement operator+(GwaElement lhs, const GwaElement& rhs) { return lhs += rhs; }
  friend GwaElement operator-(GwaElement lhs, const GwaElement& rhs) { return lhs -= rhs; }
  friend GwaElement operator*(GwaElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend GwaElement operator*(const GwaElement& lhs, const GwaElement& rhs);
  GwaElement operator-() const;
  friend bool operator==(const GwaElement& lhs, const GwaElement& rhs);
  friend bool operator!=(const GwaElement& lhs, const GwaElement& rhs) { return !(lhs == rhs); }

  GwaElement pow(int exponent) const;

  /// e.g. "x^2*(h - 1) + y*h".
  std::string to_string() const;

 private:
  GwaPtr parent_;
  ComponentMap components_;
};

/// Normal form of u * v via d X_j = X_j sigma^{-j}(d) and the closed forms
/// for x^i y^j and y^i x^j. Throws MismatchedAlgebra for different parents.
GwaElement gwa_mul(const GwaElement& u, const GwaElement& v);

}  // namespace qgwa
