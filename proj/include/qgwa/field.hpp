#pragma once

// Exact arithmetic in Q and in the cyclotomic fields Q(zeta_N).

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgwa {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional sign). Throws Error(ParseError) on bad text
/// and Error(DivisionByZero) on a zero denominator.
Rational parse_rational(const std::string& text);

/// Cached data for Q(zeta_N): the monic N-th cyclotomic polynomial.
struct CyclotomicContext {
  int conductor = 1;
  int degree = 1;  // Euler phi of the conductor
  std::vector<Integer> modulus;  // low to high, size degree + 1, monic
};

/// Shared, immutable context for conductor N; safe to call from any thread.
const CyclotomicContext& cyclotomic_context(int conductor);

int euler_phi(int n);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
class FieldElement {
 public:
  FieldElement();
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)

  static FieldElement rational(const Rational& value, int conductor = 1);
  /// zeta_N^power, reduced.
  static FieldElement zeta(int conductor, long power = 1);
  static FieldElement from_coords(int conductor, std::vector<Rational> coords);

  int conductor() const { return ctx_->conductor; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The rational value; throws InvalidParameter when not rational.
  Rational as_rational() const;

  /// Re-expressed in Q(zeta_M); only rationals can change conductor.
  FieldElement promoted(int conductor) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);
  friend bool operator!=(const FieldElement& lhs, const FieldElement& rhs) { return !(lhs == rhs); }

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  /// Canonical total order (conductor, then coordinates); only used for
  /// deterministic sorting, it has no algebraic meaning.
  static int compare(const FieldElement& lhs, const FieldElement& rhs);

  /// Text form in the input syntax, e.g. "3/5*z^2 - 1".
  std::string to_string() const;

 private:
  FieldElement(const CyclotomicContext* ctx, std::vector<Rational> coords);

  const CyclotomicContext* ctx_;
  std::vector<Rational> coords_;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& lhs, const FieldElement& rhs, FieldOp op);

/// Multiplicative order when x is a root of unity. Torsion in Q(zeta_N)^x has
/// order dividing lcm(2, N), so only those divisors are tried.
std::optional<long> torsion_order(const FieldElement& x);

/// All roots of unity in Q(zeta_N): {+-zeta^j}.
std::vector<FieldElement> torsion_elements(int conductor);

/// A primitive n-th root of unity in Q(zeta_N), if the field contains one.
std::optional<FieldElement> primitive_root_of_unity(int conductor, long n);

/// Indices g in [1, N] coprime to N, i.e. the embeddings zeta -> zeta^g.
std::vector<int> galois_indices(int conductor);

struct ComplexEstimate {
  std::complex<double> value;
  double radius = 0.0;  // |true value - value| <= radius
};

/// Image of x under zeta -> exp(2 pi i g / N).
ComplexEstimate embed_complex(const FieldElement& x, int galois_index);

}  // namespace qgwa
