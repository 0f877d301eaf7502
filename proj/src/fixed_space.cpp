#include "qgwa/fixed_space.hpp"

#include "qgwa/error.hpp"

namespace qgwa {

TruncatedBasis::TruncatedBasis(GwaPtr algebra, TruncationBounds bounds)
    : algebra_(std::move(algebra)),
      bounds_(bounds),
      h_min_(algebra_->kind() == BaseKind::Poly ? 0 : -bounds.h_degree_bound) {
  if (bounds.grade_bound < 0 || bounds.h_degree_bound < 0) {
    throw Error(ErrorCode::InvalidParameter, "truncation bounds must be nonnegative");
  }
}

bool TruncatedBasis::in_box(int grade, int h_exponent) const {
  return grade >= -bounds_.grade_bound && grade <= bounds_.grade_bound && h_exponent >= h_min_ &&
         h_exponent <= h_max();
}

bool TruncatedBasis::fits(const GwaElement& u) const {
  for (const auto& [k, d] : u.components()) {
    if (!in_box(k, d.min_exponent()) || !in_box(k, d.max_exponent())) return false;
  }
  return true;
}

Vector TruncatedBasis::grade_coordinates(const GwaElement& u, int grade) const {
  Vector v(static_cast<std::size_t>(h_count()), FieldElement::rational(0, algebra_->conductor()));
  auto it = u.components().find(grade);
  if (it == u.components().end()) return v;
  for (const auto& [e, c] : it->second.terms()) {
    if (!in_box(grade, e)) throw Error(ErrorCode::InvalidParameter, "component leaves the truncation");
    v[static_cast<std::size_t>(e - h_min_)] = c;
  }
  return v;
}

LaurentPoly TruncatedBasis::poly_from(const Vector& coords) const {
  LaurentPoly p;
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(h_min_ + static_cast<int>(i), coords[i]);
  return p;
}

FixedSpace fixed_space(const Automorphism& phi_in, const GwaPtr& algebra, TruncationBounds bounds) {
  const Automorphism phi = validate(phi_in, *algebra);
  if (!order_of(*algebra, phi)) throw Error(ErrorCode::InfiniteOrder, phi.to_string() + " has infinite order");
  const AutomorphismAction action(phi, algebra);
  const TruncatedBasis box(algebra, bounds);
  const auto width = static_cast<std::size_t>(box.h_count());

  FixedSpace out;
  out.bounds = bounds;

  // A block is a list of grades whose span is phi-stable.
  std::vector<std::vector<int>> blocks;
  if (phi.omega) {
    blocks.push_back({0});
    for (int k = 1; k <= bounds.grade_bound; ++k) blocks.push_back({k, -k});
  } else {
    for (int k = -bounds.grade_bound; k <= bounds.grade_bound; ++k) blocks.push_back({k});
  }

  for (const auto& grades : blocks) {
    const std::size_t ncols = grades.size() * width;
    // Column c holds (phi - id)(basis_c); rows index the same block basis.
    std::vector<Vector> rows(ncols, Vector(ncols, FieldElement::rational(0, algebra->conductor())));
    for (std::size_t g = 0; g < grades.size(); ++g) {
      for (std::size_t t = 0; t < width; ++t) {
        const int j = box.h_min() + static_cast<int>(t);
        GwaElement b = GwaElement::monomial(algebra, grades[g], j);
        GwaElement image = action.apply(b) - b;
        for (const auto& [k, d] : image.components()) {
          if (std::find(grades.begin(), grades.end(), k) == grades.end()) {
            throw Error(ErrorCode::InvalidParameter, "automorphism does not preserve the block structure");
          }
        }
        for (std::size_t g2 = 0; g2 < grades.size(); ++g2) {
          const Vector coords = box.grade_coordinates(image, grades[g2]);
          for (std::size_t t2 = 0; t2 < width; ++t2) rows[g2 * width + t2][g * width + t] = coords[t2];
        }
      }
    }
    const std::vector<Vector> null_basis = kernel(rows, ncols);
    for (const Vector& v : null_basis) {
      GwaElement u(algebra);
      for (std::size_t g = 0; g < grades.size(); ++g) {
        Vector part(v.begin() + static_cast<long>(g * width), v.begin() + static_cast<long>((g + 1) * width));
        u.add_component(grades[g], box.poly_from(part));
      }
      out.basis.push_back(std::move(u));
    }
    const int key = phi.omega ? grades.front() : grades.front();
    out.block_dims[key] = static_cast<int>(null_basis.size());
  }
  return out;
}

}  // namespace qgwa
