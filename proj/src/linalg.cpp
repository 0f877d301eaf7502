#include "qgwa/linalg.hpp"

#include <algorithm>

#include "qgwa/error.hpp"

namespace qgwa {

namespace {

void axpy(Vector& v, const FieldElement& factor, const Vector& row) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!row[i].is_zero()) v[i] -= factor * row[i];
  }
}

}  // namespace

Vector Subspace::reduce(Vector v) const {
  if (v.size() != dimension_) throw Error(ErrorCode::InvalidParameter, "vector length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElement factor = v[pivots_[r]];
    if (factor.is_zero()) continue;
    axpy(v, factor, rows_[r]);
  }
  return v;
}

bool Subspace::insert(Vector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const FieldElement& c) { return !c.is_zero(); });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const FieldElement scale = v[pivot].inverse();
  for (auto& c : v) {
    if (!c.is_zero()) c *= scale;
  }
  for (auto& row : rows_) {
    const FieldElement factor = row[pivot];
    if (!factor.is_zero()) axpy(row, factor, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

bool Subspace::contains(Vector v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const FieldElement& c) { return c.is_zero(); });
}

bool operator==(const Subspace& lhs, const Subspace& rhs) {
  return lhs.dimension_ == rhs.dimension_ && lhs.pivots_ == rhs.pivots_ && lhs.rows_ == rhs.rows_;
}

std::vector<Vector> kernel(const std::vector<Vector>& rows, std::size_t ncols) {
  Subspace echelon(ncols);
  for (const Vector& row : rows) echelon.insert(row);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : echelon.pivots()) is_pivot[p] = true;
  const int conductor = rows.empty() || rows.front().empty() ? 1 : rows.front().front().conductor();
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(ncols, FieldElement::rational(0, conductor));
    v[f] = FieldElement::rational(1, conductor);
    for (std::size_t r = 0; r < echelon.rank(); ++r) v[echelon.pivots()[r]] = -echelon.rows()[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qgwa
