#include "qgwa/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <regex>

#include "qgwa/error.hpp"

namespace qgwa {

namespace {

using RatPoly = std::vector<Rational>;  // low to high

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of num by den (den nonzero, trimmed).
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly quot(num.size() - dd, Rational(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    Rational c = num[i] / den.back();
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  num.resize(dd);
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<Integer> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<Integer> den = compute_cyclotomic(d);
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(p.size() - dd, Integer(0));
    for (std::size_t i = p.size(); i-- > dd;) {
      Integer c = p[i];  // den is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * den[j];
    }
    p = std::move(quot);
  }
  return p;
}

struct ContextCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<CyclotomicContext>> contexts;
};

ContextCache& cache() {
  static ContextCache instance;
  return instance;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  Integer num(m[1].str());
  Integer den(1);
  if (m[3].matched) den = Integer(m[3].str());
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const CyclotomicContext& cyclotomic_context(int conductor) {
  if (conductor < 1) throw Error(ErrorCode::InvalidParameter, "conductor must be positive");
  thread_local const CyclotomicContext* last = nullptr;
  if (last != nullptr && last->conductor == conductor) return *last;
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  auto it = c.contexts.find(conductor);
  if (it == c.contexts.end()) {
    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->conductor = conductor;
    ctx->modulus = compute_cyclotomic(conductor);
    ctx->degree = static_cast<int>(ctx->modulus.size()) - 1;
    it = c.contexts.emplace(conductor, std::move(ctx)).first;
  }
  last = it->second.get();
  return *last;
}

FieldElement::FieldElement() : FieldElement(Rational(0)) {}

FieldElement::FieldElement(long value) : FieldElement(Rational(value)) {}

FieldElement::FieldElement(const Rational& value)
    : ctx_(&cyclotomic_context(1)), coords_{value} {}

FieldElement::FieldElement(const CyclotomicContext* ctx, std::vector<Rational> coords)
    : ctx_(ctx), coords_(std::move(coords)) {}

FieldElement FieldElement::rational(const Rational& value, int conductor) {
  const CyclotomicContext& ctx = cyclotomic_context(conductor);
  std::vector<Rational> coords(static_cast<std::size_t>(ctx.degree), Rational(0));
  coords[0] = value;
  return FieldElement(&ctx, std::move(coords));
}

FieldElement FieldElement::zeta(int conductor, long power) {
  const CyclotomicContext& ctx = cyclotomic_context(conductor);
  long e = power % conductor;
  if (e < 0) e += conductor;
  // Build x^e and reduce via multiplication by z, one step at a time.
  std::vector<Rational> coords(static_cast<std::size_t>(ctx.degree), Rational(0));
  coords[0] = 1;
  FieldElement out(&ctx, std::move(coords));
  if (e == 0) return out;
  FieldElement z = out;
  if (ctx.degree > 1) {
    z.coords_[0] = 0;
    z.coords_[1] = 1;
  } else {
    // degree-1 fields: zeta is the root of the linear modulus.
    z.coords_[0] = Rational(-ctx.modulus[0]);
  }
  return z.pow(e);
}

FieldElement FieldElement::from_coords(int conductor, std::vector<Rational> coords) {
  const CyclotomicContext& ctx = cyclotomic_context(conductor);
  if (coords.size() > static_cast<std::size_t>(ctx.degree)) {
    // Reduce a longer representation modulo the cyclotomic polynomial.
    RatPoly modulus(ctx.modulus.begin(), ctx.modulus.end());
    RatPoly p(coords.begin(), coords.end());
    trim(p);
    if (!p.empty()) p = divmod(p, modulus).second;
    coords.assign(p.begin(), p.end());
  }
  coords.resize(static_cast<std::size_t>(ctx.degree), Rational(0));
  for (auto& c : coords) c.canonicalize();
  return FieldElement(&ctx, std::move(coords));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_[0] == 1; }

Rational FieldElement::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidParameter, "element is not rational: " + to_string());
  return coords_[0];
}

FieldElement FieldElement::promoted(int conductor) const {
  if (conductor == ctx_->conductor) return *this;
  if (!is_rational()) {
    throw Error(ErrorCode::MismatchedConductor,
                "cannot move " + to_string() + " from conductor " + std::to_string(ctx_->conductor) +
                    " to " + std::to_string(conductor));
  }
  return rational(coords_[0], conductor);
}

namespace {

// Brings lhs and rhs to a common conductor (one side must be rational when
// conductors differ).
int common_conductor(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.conductor() == rhs.conductor()) return lhs.conductor();
  if (lhs.is_rational()) return rhs.conductor();
  if (rhs.is_rational()) return lhs.conductor();
  throw Error(ErrorCode::MismatchedConductor,
              "conductors " + std::to_string(lhs.conductor()) + " and " + std::to_string(rhs.conductor()));
}

}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  const int n = common_conductor(*this, rhs);
  if (n != conductor()) *this = promoted(n);
  if (rhs.conductor() != n) return *this += rhs.promoted(n);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  const int n = common_conductor(*this, rhs);
  if (n != conductor()) *this = promoted(n);
  if (rhs.conductor() != n) return *this -= rhs.promoted(n);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  if (rhs.is_rational()) {
    const Rational& s = rhs.coords_[0];
    for (auto& c : coords_) c *= s;
    return *this;
  }
  if (is_rational()) {
    Rational s = coords_[0];
    *this = rhs;
    for (auto& c : coords_) c *= s;
    return *this;
  }
  common_conductor(*this, rhs);
  const auto d = static_cast<std::size_t>(ctx_->degree);
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  const auto& modulus = ctx_->modulus;
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    for (std::size_t j = 0; j <= d; ++j) prod[k - d + j] -= c * modulus[j];
  }
  prod.resize(d);
  coords_ = std::move(prod);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.conductor() == rhs.conductor()) return lhs.coords_ == rhs.coords_;
  if (lhs.is_rational() && rhs.is_rational()) return lhs.coords_[0] == rhs.coords_[0];
  return false;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return rational(1 / coords_[0], conductor());
  RatPoly r0(ctx_->modulus.begin(), ctx_->modulus.end());
  RatPoly r1(coords_.begin(), coords_.end());
  trim(r1);
  RatPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    RatPoly next = sub(s0, mul(quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return from_coords(conductor(), std::move(s0));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = rational(1, conductor());
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

int FieldElement::compare(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.conductor() != rhs.conductor()) {
    if (lhs.is_rational() && rhs.is_rational()) return cmp(lhs.coords_[0], rhs.coords_[0]) < 0 ? -1 : (lhs.coords_[0] == rhs.coords_[0] ? 0 : 1);
    return lhs.conductor() < rhs.conductor() ? -1 : 1;
  }
  for (std::size_t i = 0; i < lhs.coords_.size(); ++i) {
    int c = cmp(lhs.coords_[i], rhs.coords_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const Rational& c = coords_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = abs(c);
    std::string term;
    if (j == 0) {
      term = mag.get_str();
    } else {
      std::string zpow = j == 1 ? "z" : "z^" + std::to_string(j);
      term = mag == 1 ? zpow : mag.get_str() + "*" + zpow;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement field_arith(const FieldElement& lhs, const FieldElement& rhs, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return lhs + rhs;
    case FieldOp::Sub: return lhs - rhs;
    case FieldOp::Mul: return lhs * rhs;
    case FieldOp::Div: return lhs / rhs;
  }
  return lhs;
}

std::optional<long> torsion_order(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "torsion order of zero");
  if (x.is_rational()) {
    Rational r = x.as_rational();
    if (r == 1) return 1;
    if (r == -1) return 2;
    return std::nullopt;
  }
  const long bound = lcm_long(2, x.conductor());
  for (long e = 1; e <= bound; ++e) {
    if (bound % e != 0) continue;
    if (x.pow(e).is_one()) return e;
  }
  return std::nullopt;
}

std::vector<FieldElement> torsion_elements(int conductor) {
  std::vector<FieldElement> out;
  const FieldElement z = FieldElement::zeta(conductor);
  FieldElement p = FieldElement::rational(1, conductor);
  for (int j = 0; j < conductor; ++j) {
    for (const FieldElement& cand : {p, -p}) {
      if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    p *= z;
  }
  return out;
}

std::optional<FieldElement> primitive_root_of_unity(int conductor, long n) {
  if (n <= 0) throw Error(ErrorCode::InvalidParameter, "root of unity order must be positive");
  if (n == 1) return FieldElement::rational(1, conductor);
  if (n == 2) return FieldElement::rational(-1, conductor);
  if (lcm_long(2, conductor) % n != 0) return std::nullopt;
  for (const FieldElement& w : torsion_elements(conductor)) {
    auto ord = torsion_order(w);
    if (ord && *ord == n) return w;
  }
  return std::nullopt;
}

std::vector<int> galois_indices(int conductor) {
  std::vector<int> out;
  for (int g = 1; g <= conductor; ++g) {
    if (std::gcd(g, conductor) == 1) out.push_back(g);
  }
  return out;
}

ComplexEstimate embed_complex(const FieldElement& x, int galois_index) {
  const int n = x.conductor();
  if (std::gcd(galois_index, n) != 1) {
    throw Error(ErrorCode::InvalidGaloisIndex,
                std::to_string(galois_index) + " is not coprime to " + std::to_string(n));
  }
  constexpr long double two_pi = 6.283185307179586476925286766559L;
  std::complex<long double> acc(0.0L, 0.0L);
  long double magnitude = 0.0L;
  const auto coords = x.coords();
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    const long double c = static_cast<long double>(coords[j].get_d());
    const long double angle =
        two_pi * static_cast<long double>((static_cast<long>(galois_index) * static_cast<long>(j)) % n) / n;
    acc += c * std::complex<long double>(std::cos(angle), std::sin(angle));
    magnitude += std::fabs(c);
  }
  ComplexEstimate out;
  out.value = std::complex<double>(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  // double conversion of each coordinate plus trig and accumulation rounding.
  out.radius = static_cast<double>(magnitude) * 1e-14 * static_cast<double>(coords.size() + 1) + 1e-300;
  return out;
}

}  // namespace qgwa
