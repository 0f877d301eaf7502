#pragma once

// Brute-force fixed spaces on the truncated monomial basis
//   { X_k h^j : |k| <= grade_bound, |j| <= h_degree_bound }  (j >= 0 over k[h]).

#include <map>
#include <optional>
#include <vector>

#include "qgwa/automorphism.hpp"
#include "qgwa/linalg.hpp"

namespace qgwa {

struct TruncationBounds {
  int grade_bound = 12;
  int h_degree_bound = 24;
};

class TruncatedBasis {
 public:
  TruncatedBasis(GwaPtr algebra, TruncationBounds bounds);

  const TruncationBounds& bounds() const { return bounds_; }
  int h_min() const { return h_min_; }
  int h_max() const { return bounds_.h_degree_bound; }
  int h_count() const { return h_max() - h_min_ + 1; }
  bool in_box(int grade, int h_exponent) const;
  bool fits(const GwaElement& u) const;
  /// Coordinates of the grade-k component over h^{h_min}, ..., h^{h_max}.
  Vector grade_coordinates(const GwaElement& u, int grade) const;
  LaurentPoly poly_from(const Vector& coords) const;

 private:
  GwaPtr algebra_;
  TruncationBounds bounds_;
  int h_min_;
};

struct FixedSpace {
  TruncationBounds bounds;
  std::vector<GwaElement> basis;
  /// Diagonal maps: keyed by grade. Omega maps: keyed by |grade| (paired blocks).
  std::map<int, int> block_dims;
};

/// Exact kernel of (phi - id) on the truncation, block by block. Throws
/// InfiniteOrder when phi has infinite order.
FixedSpace fixed_space(const Automorphism& phi, const GwaPtr& algebra, TruncationBounds bounds = {});

}  // namespace qgwa
