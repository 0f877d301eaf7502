#pragma once

// Exact linear algebra over Q(zeta_N): incremental reduced row echelon form.

#include <cstddef>
#include <vector>

#include "qgwa/field.hpp"

namespace qgwa {

using Vector = std::vector<FieldElement>;

class Subspace {
 public:
  explicit Subspace(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  /// Rows of the reduced echelon basis, ordered by pivot column.
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(Vector v);
  bool contains(Vector v) const;
  /// v minus its projection along the pivot columns.
  Vector reduce(Vector v) const;

  friend bool operator==(const Subspace& lhs, const Subspace& rhs);

 private:
  std::size_t dimension_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {v : M v = 0} for M given by rows of length ncols.
std::vector<Vector> kernel(const std::vector<Vector>& rows, std::size_t ncols);

}  // namespace qgwa
