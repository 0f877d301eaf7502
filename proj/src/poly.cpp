#include "qgwa/poly.hpp"

#include <algorithm>

#include "qgwa/error.hpp"

namespace qgwa {

std::string to_string(BaseKind kind) { return kind == BaseKind::Poly ? "poly" : "laurent"; }

LaurentPoly::LaurentPoly(const FieldElement& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const FieldElement& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::linear(const FieldElement& root) {
  LaurentPoly p;
  p.add_term(1, FieldElement::rational(1, root.conductor()));
  p.add_term(0, -root);
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "min exponent of zero");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "max exponent of zero");
  return terms_.rbegin()->first;
}

FieldElement LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? FieldElement() : it->second;
}

FieldElement LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.rbegin()->second;
}

void LaurentPoly::add_term(int exponent, const FieldElement& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const FieldElement& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [e, c] : lhs.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_monomial()) throw Error(ErrorCode::InvalidParameter, "negative power of a non-unit");
    const auto& [e, c] = *terms_.begin();
    return monomial(c.pow(exponent), e * exponent);
  }
  LaurentPoly result = monomial(FieldElement(1L), 0);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::scaled(const FieldElement& s) const {
  LaurentPoly out;
  if (terms_.empty()) return out;
  // Walk powers of s incrementally across the sorted exponents.
  int prev = terms_.begin()->first;
  FieldElement sp = s.pow(prev);
  for (const auto& [e, c] : terms_) {
    if (e != prev) {
      sp *= s.pow(e - prev);
      prev = e;
    }
    out.terms_.emplace_hint(out.terms_.end(), e, c * sp);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::inflate(int n) const {
  if (n <= 0) throw Error(ErrorCode::InvalidParameter, "inflate needs n > 0");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * n, c);
  return out;
}

LaurentPoly LaurentPoly::deflate(int n) const {
  if (!is_in_h_power_subring(*this, n)) {
    throw Error(ErrorCode::NotInSubring, to_string() + " is not in k[h^" + std::to_string(n) + "]");
  }
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e / n, c);
  return out;
}

LaurentPoly LaurentPoly::divide_linear(const FieldElement& root) const {
  if (terms_.empty()) return {};
  // Synthetic division from the top: f = (h - r) g.
  const int hi = max_exponent();
  const int lo = min_exponent();
  LaurentPoly out;
  FieldElement carry;
  for (int e = hi; e > lo; --e) {
    carry = coeff(e) + carry * root;
    if (!carry.is_zero()) out.terms_.emplace(e - 1, carry);
  }
  FieldElement remainder = coeff(lo) + carry * root;
  if (!remainder.is_zero()) {
    throw Error(ErrorCode::InvalidParameter, "h - (" + root.to_string() + ") does not divide " + to_string());
  }
  return out;
}

namespace {

bool needs_parens(const FieldElement& c) { return !c.is_rational(); }

std::string power_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = false;
    std::string coeff;
    if (needs_parens(c)) {
      coeff = "(" + c.to_string() + ")";
    } else {
      Rational r = c.as_rational();
      negative = r < 0;
      Rational mag = abs(r);
      if (!(mag == 1 && e != 0)) coeff = mag.get_str();
    }
    std::string term = coeff;
    const std::string p = power_str(var, e);
    if (!p.empty()) term = term.empty() ? p : term + "*" + p;
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

FactoredPoly FactoredPoly::canonical() const {
  if (unit.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero unit");
  FactoredPoly out;
  out.unit = unit;
  out.h_power = h_power;
  for (const Root& r : roots) {
    if (r.multiplicity == 0) continue;
    if (r.multiplicity < 0) throw Error(ErrorCode::InvalidParameter, "negative root multiplicity");
    if (r.value.is_zero()) {
      out.h_power += r.multiplicity;
      continue;
    }
    auto it = std::find_if(out.roots.begin(), out.roots.end(),
                           [&](const Root& x) { return x.value == r.value; });
    if (it == out.roots.end()) {
      out.roots.push_back(r);
    } else {
      it->multiplicity += r.multiplicity;
    }
  }
  return out;
}

int FactoredPoly::nonzero_root_count() const {
  int n = 0;
  for (const Root& r : roots) n += r.multiplicity;
  return n;
}

int FactoredPoly::root_count() const { return h_power + nonzero_root_count(); }

std::string FactoredPoly::to_string(const std::string& var) const {
  std::vector<std::string> factors;
  if (h_power != 0) factors.push_back(power_str(var, h_power));
  for (const Root& r : roots) {
    std::string f;
    if (r.value.is_rational()) {
      Rational v = r.value.as_rational();
      f = "(" + var + (v < 0 ? "+" : "-") + Rational(abs(v)).get_str() + ")";
    } else {
      f = "(" + var + "-(" + r.value.to_string() + "))";
    }
    if (r.multiplicity != 1) f += "^" + std::to_string(r.multiplicity);
    factors.push_back(f);
  }
  std::string out;
  if (factors.empty()) return unit.to_string();
  if (unit.is_one()) {
    out = "";
  } else if (unit == FieldElement(-1L)) {
    out = "-";
  } else if (unit.is_rational()) {
    out = unit.to_string() + "*";
  } else {
    out = "(" + unit.to_string() + ")*";
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "*";
    out += factors[i];
  }
  return out;
}

LaurentPoly expand(const FactoredPoly& f) {
  LaurentPoly out = LaurentPoly::monomial(f.unit, f.h_power);
  for (const Root& r : f.roots) out = out * LaurentPoly::linear(r.value).pow(r.multiplicity);
  return out;
}

LaurentPoly sigma_apply(const LaurentPoly& f, const FieldElement& q, int power) {
  if (q.is_zero() || q.is_one()) throw Error(ErrorCode::InvalidParameter, "q must not be 0 or 1");
  if (power == 0) return f;
  return f.scaled(q.pow(power));
}

bool is_in_h_power_subring(const LaurentPoly& f, int n) {
  if (n <= 0) throw Error(ErrorCode::InvalidParameter, "n must be positive");
  return std::all_of(f.terms().begin(), f.terms().end(), [n](const auto& t) { return t.first % n == 0; });
}

FactoredPoly descend_to_b(const FactoredPoly& input, int n) {
  if (n <= 0) throw Error(ErrorCode::InvalidParameter, "n must be positive");
  FactoredPoly f = input.canonical();
  if (n == 1) return f;
  if (!is_in_h_power_subring(expand(f), n)) {
    throw Error(ErrorCode::NotInSubring, f.to_string() + " is not in k[h^" + std::to_string(n) + "]");
  }
  if (f.h_power % n != 0) {
    throw Error(ErrorCode::NotInSubring, "h-power " + std::to_string(f.h_power) + " not divisible by n");
  }
  FactoredPoly b;
  b.unit = f.unit;
  b.h_power = f.h_power / n;
  if (f.roots.empty()) return b;

  const int conductor = f.roots.front().value.conductor();
  auto w = primitive_root_of_unity(conductor, n);
  if (!w) {
    throw Error(ErrorCode::IncompleteOrbit, "field has no primitive " + std::to_string(n) + "-th root of unity");
  }
  std::vector<Root> remaining = f.roots;
  while (!remaining.empty()) {
    const Root seed = remaining.front();
    std::vector<std::size_t> members{0};
    FieldElement member = seed.value;
    for (int j = 1; j < n; ++j) {
      member *= *w;
      auto it = std::find_if(remaining.begin(), remaining.end(),
                             [&](const Root& r) { return r.value == member; });
      if (it == remaining.end() || it->multiplicity != seed.multiplicity) {
        throw Error(ErrorCode::IncompleteOrbit,
                    "root " + seed.value.to_string() + " has no complete orbit under the " + std::to_string(n) +
                        "-th roots of unity");
      }
      members.push_back(static_cast<std::size_t>(it - remaining.begin()));
    }
    std::sort(members.rbegin(), members.rend());
    for (std::size_t idx : members) remaining.erase(remaining.begin() + static_cast<long>(idx));
    b.roots.push_back(Root{seed.value.pow(n), seed.multiplicity});
  }
  return b;
}

Normalization normalize(const FactoredPoly& f, BaseKind kind) {
  if (f.unit.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  Normalization out;
  out.poly = f.canonical();
  out.unit_removed = out.poly.unit;
  out.poly.unit = FieldElement::rational(1, out.poly.unit.conductor());
  if (kind == BaseKind::Laurent) {
    out.h_shift_removed = out.poly.h_power;
    out.poly.h_power = 0;
  }
  return out;
}

}  // namespace qgwa
