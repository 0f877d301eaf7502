#include "qgwa/gwa.hpp"

#include "qgwa/error.hpp"

namespace qgwa {

QuantumGwa::QuantumGwa(BaseKind kind, FieldElement q, FactoredPoly a)
    : kind_(kind), q_(std::move(q)), a_factored_(std::move(a)), a_(expand(a_factored_)) {}

GwaPtr QuantumGwa::create(BaseKind kind, const FieldElement& q, const FactoredPoly& a) {
  if (q.is_zero() || q.is_one()) throw Error(ErrorCode::InvalidParameter, "q must not be 0 or 1");
  FactoredPoly canon = a.canonical();
  if (kind == BaseKind::Poly && canon.h_power < 0) {
    throw Error(ErrorCode::InvalidParameter, "negative h-power in a polynomial base ring");
  }
  const int non_unit_roots = kind == BaseKind::Poly ? canon.root_count() : canon.nonzero_root_count();
  if (non_unit_roots == 0) throw Error(ErrorCode::InvalidParameter, "a(h) = " + canon.to_string() + " is a unit");
  int conductor = q.conductor();
  auto absorb = [&](const FieldElement& c) {
    if (c.is_rational()) return;
    if (conductor == 1) conductor = c.conductor();
    if (c.conductor() != conductor) throw Error(ErrorCode::MismatchedConductor, "a(h) and q live in different fields");
  };
  absorb(canon.unit);
  for (const Root& r : canon.roots) absorb(r.value);
  // One conductor for the whole algebra.
  FieldElement qq = q.is_rational() ? q.promoted(conductor) : q;
  canon.unit = canon.unit.is_rational() ? canon.unit.promoted(conductor) : canon.unit;
  for (Root& r : canon.roots) r.value = r.value.is_rational() ? r.value.promoted(conductor) : r.value;
  return GwaPtr(new QuantumGwa(kind, std::move(qq), std::move(canon)));
}

LaurentPoly QuantumGwa::sigma(const LaurentPoly& d, int power) const { return sigma_apply(d, q_, power); }

const LaurentPoly& QuantumGwa::yx_product(int m) const {
  if (m < 0) throw Error(ErrorCode::InvalidParameter, "negative power");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (yx_cache_.empty()) yx_cache_.push_back(std::make_unique<LaurentPoly>(FieldElement(1L)));
  while (static_cast<int>(yx_cache_.size()) <= m) {
    const int i = static_cast<int>(yx_cache_.size()) - 1;  // next factor sigma^{-i}(a)
    yx_cache_.push_back(std::make_unique<LaurentPoly>(*yx_cache_.back() * sigma(a_, -i)));
  }
  return *yx_cache_[static_cast<std::size_t>(m)];
}

const LaurentPoly& QuantumGwa::xy_product(int m) const {
  if (m < 0) throw Error(ErrorCode::InvalidParameter, "negative power");
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (xy_cache_.empty()) xy_cache_.push_back(std::make_unique<LaurentPoly>(FieldElement(1L)));
  while (static_cast<int>(xy_cache_.size()) <= m) {
    const int i = static_cast<int>(xy_cache_.size());  // next factor sigma^{i}(a)
    xy_cache_.push_back(std::make_unique<LaurentPoly>(*xy_cache_.back() * sigma(a_, i)));
  }
  return *xy_cache_[static_cast<std::size_t>(m)];
}

std::string QuantumGwa::to_string() const {
  return (kind_ == BaseKind::Poly ? "k[h]" : "k[h^{+-1}]") + std::string("(sigma: h -> (") + q_.to_string() +
         ")*h, a = " + a_factored_.to_string() + ")";
}

LaurentPoly power_product_identity(const QuantumGwa& algebra, int m, ProductSide side) {
  return side == ProductSide::YX ? algebra.yx_product(m) : algebra.xy_product(m);
}

GwaElement::GwaElement(GwaPtr parent) : parent_(std::move(parent)) {
  if (!parent_) throw Error(ErrorCode::MismatchedAlgebra, "element without an algebra");
}

GwaElement GwaElement::homogeneous(GwaPtr parent, int grade, const LaurentPoly& d) {
  GwaElement out(std::move(parent));
  out.add_component(grade, d);
  return out;
}

GwaElement GwaElement::monomial(GwaPtr parent, int grade, int h_exponent, const FieldElement& coeff) {
  return homogeneous(std::move(parent), grade, LaurentPoly::monomial(coeff, h_exponent));
}

GwaElement GwaElement::x(GwaPtr parent) { return monomial(std::move(parent), 1, 0); }
GwaElement GwaElement::y(GwaPtr parent) { return monomial(std::move(parent), -1, 0); }
GwaElement GwaElement::h(GwaPtr parent) { return monomial(std::move(parent), 0, 1); }

GwaElement GwaElement::scalar(GwaPtr parent, const FieldElement& c) {
  return homogeneous(std::move(parent), 0, LaurentPoly(c));
}

GwaElement GwaElement::base(GwaPtr parent, const LaurentPoly& d) { return homogeneous(std::move(parent), 0, d); }

LaurentPoly GwaElement::component(int grade) const {
  auto it = components_.find(grade);
  return it == components_.end() ? LaurentPoly() : it->second;
}

void GwaElement::add_component(int grade, const LaurentPoly& d) {
  if (d.is_zero()) return;
  if (parent_->kind() == BaseKind::Poly && !d.is_polynomial()) {
    throw Error(ErrorCode::InvalidParameter, "negative powers of h in a polynomial base ring");
  }
  auto [it, inserted] = components_.emplace(grade, d);
  if (inserted) return;
  it->second += d;
  if (it->second.is_zero()) components_.erase(it);
}

namespace {

void check_same(const GwaElement& u, const GwaElement& v) {
  if (u.parent() != v.parent()) throw Error(ErrorCode::MismatchedAlgebra, "elements of different algebras");
}

}  // namespace

GwaElement& GwaElement::operator+=(const GwaElement& rhs) {
  check_same(*this, rhs);
  for (const auto& [k, d] : rhs.components_) add_component(k, d);
  return *this;
}

GwaElement& GwaElement::operator-=(const GwaElement& rhs) {
  check_same(*this, rhs);
  for (const auto& [k, d] : rhs.components_) add_component(k, -d);
  return *this;
}

GwaElement& GwaElement::operator*=(const FieldElement& scalar) {
  if (scalar.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [k, d] : components_) d *= scalar;
  return *this;
}

GwaElement GwaElement::operator-() const {
  GwaElement out = *this;
  for (auto& [k, d] : out.components_) d = -d;
  return out;
}

bool operator==(const GwaElement& lhs, const GwaElement& rhs) {
  check_same(lhs, rhs);
  return lhs.components_ == rhs.components_;
}

GwaElement operator*(const GwaElement& lhs, const GwaElement& rhs) { return gwa_mul(lhs, rhs); }

GwaElement GwaElement::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::InvalidParameter, "negative power of an algebra element");
  GwaElement result = scalar(parent_, FieldElement(1L));
  GwaElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string GwaElement::to_string() const {
  if (components_.empty()) return "0";
  std::string out;
  for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
    const auto& [k, d] = *it;
    std::string gen;
    if (k > 0) gen = k == 1 ? "x" : "x^" + std::to_string(k);
    if (k < 0) gen = k == -1 ? "y" : "y^" + std::to_string(-k);
    std::string coeff = d.to_string();
    const bool compound = coeff.find(' ') != std::string::npos || coeff.front() == '-';
    std::string term;
    if (gen.empty()) {
      term = compound && components_.size() > 1 ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = gen;
    } else {
      term = gen + "*" + (compound ? "(" + coeff + ")" : coeff);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

GwaElement gwa_mul(const GwaElement& u, const GwaElement& v) {
  check_same(u, v);
  const QuantumGwa& alg = *u.parent();
  GwaElement out(u.parent());
  for (const auto& [i, d] : u.components()) {
    for (const auto& [j, e] : v.components()) {
      // X_i d X_j e = X_i X_j sigma^{-j}(d) e, and X_i X_j = X_g P.
      int g = i + j;
      LaurentPoly contraction;
      bool trivial = true;
      if (i > 0 && j < 0) {
        const int s = -j;
        trivial = false;
        contraction = i >= s ? alg.xy_product(s) : alg.sigma(alg.xy_product(i), s - i);
      } else if (i < 0 && j > 0) {
        const int r = -i;
        trivial = false;
        contraction = r >= j ? alg.yx_product(j) : alg.sigma(alg.yx_product(r), -(j - r));
      }
      LaurentPoly term = alg.sigma(d, -j) * e;
      if (!trivial) term = contraction * term;
      out.add_component(g, term);
    }
  }
  return out;
}

}  // namespace qgwa
