#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "support.hpp"

using namespace qgwa;
using qgwa::testing::random_element;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic") {
  CHECK(field_arith(Rational(1, 2), Rational(1, 3), FieldOp::Add) == FieldElement(Rational(5, 6)));
  CHECK(field_arith(Rational(1, 2), Rational(1, 3), FieldOp::Div) == FieldElement(Rational(3, 2)));
  CHECK_THROWS_AS(field_arith(1L, 0L, FieldOp::Div), Error);
}

TEST_CASE("cyclotomic identities") {
  const FieldElement i = FieldElement::zeta(4);
  CHECK(i * i == FieldElement::rational(-1, 4));

  // (1 + z)(1 + z^2) in Q(zeta_3): numerically 1, then exactly 1.
  const FieldElement z = FieldElement::zeta(3);
  const FieldElement one = FieldElement::rational(1, 3);
  const FieldElement product = (one + z) * (one + z * z);
  const std::complex<double> w = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(std::abs((1.0 + w) * (1.0 + w * w) - 1.0) < 1e-12);
  CHECK(product == one);
  CHECK(product.is_one());
}

TEST_CASE("torsion order") {
  CHECK(torsion_order(FieldElement(-1L)) == 2);
  CHECK(torsion_order(FieldElement::zeta(6)) == 6);
  CHECK(torsion_order(FieldElement::zeta(12, 3)) == 4);
  CHECK(!torsion_order(FieldElement(Rational(1, 2))).has_value());
  CHECK(!torsion_order(FieldElement::zeta(5) * FieldElement(2L)).has_value());
  CHECK_THROWS_AS(torsion_order(FieldElement(0L)), Error);

  for (int N : {1, 3, 4, 5, 8, 12}) {
    for (const FieldElement& t : torsion_elements(N)) {
      const auto e = torsion_order(t);
      REQUIRE(e.has_value());
      CHECK(t.pow(*e).is_one());
      for (long d = 1; d < *e; ++d) {
        if (*e % d == 0) CHECK_FALSE(t.pow(d).is_one());
      }
    }
  }
}

TEST_CASE("complex embeddings") {
  const auto half = embed_complex(FieldElement(Rational(1, 2)), 1);
  CHECK(std::abs(half.value - 0.5) <= half.radius + 1e-15);
  const auto i = embed_complex(FieldElement::zeta(4), 1);
  CHECK(std::abs(i.value - std::complex<double>(0, 1)) <= i.radius + 1e-15);
  const auto w = embed_complex(FieldElement::rational(1, 3) + FieldElement::zeta(3), 1);
  CHECK(std::abs(w.value - std::complex<double>(0.5, std::sqrt(3.0) / 2)) <= w.radius + 1e-12);
  CHECK_THROWS_AS(embed_complex(FieldElement::zeta(6), 2), Error);
  CHECK(galois_indices(12) == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("field axioms on random triples") {
  for (int N : {1, 3, 5, 8, 12}) {
    for (int trial = 0; trial < 30; ++trial) {
      const FieldElement a = random_element(N), b = random_element(N), c = random_element(N);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(b / a * a == b);
      }
    }
  }
}

TEST_CASE("embeddings respect arithmetic") {
  for (int N : {3, 5, 7, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElement a = random_element(N), b = random_element(N);
      for (int g : galois_indices(N)) {
        const auto ea = embed_complex(a, g), eb = embed_complex(b, g);
        const auto sum = embed_complex(a + b, g), prod = embed_complex(a * b, g);
        CHECK(std::abs(sum.value - (ea.value + eb.value)) <= sum.radius + ea.radius + eb.radius + 1e-12);
        const double prod_err = prod.radius + ea.radius * std::abs(eb.value) + eb.radius * std::abs(ea.value) +
                                ea.radius * eb.radius;
        CHECK(std::abs(prod.value - ea.value * eb.value) <= prod_err + 1e-12);
      }
    }
  }
}

TEST_CASE("parse and print") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(FieldElement(Rational(5, 6)).to_string() == "5/6");
  const FieldElement x = FieldElement::rational(Rational(3, 5), 5) * FieldElement::zeta(5, 2);
  CHECK(x.to_string() == "3/5*z^2");
}

}
