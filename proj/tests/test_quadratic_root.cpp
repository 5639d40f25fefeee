#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symcone/errors.hpp"
#include "symcone/quadratic_root.hpp"

using namespace symcone;

namespace {

// High-precision floating evaluation, only used as a cross-check far from ties.
mpf_class approx(const QuadraticRoot& x) {
  const mpf_class d(x.d, 512);
  mpf_class root(0, 512);
  mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  return (mpf_class(x.p, 512) + mpf_class(x.q, 512) * root) / mpf_class(x.den, 512);
}

}  // namespace

TEST_CASE("sign of a surd") {
  CHECK(sign_of_surd(3, 0, 12) == 1);
  CHECK(sign_of_surd(-4, 1, 12) == -1);  // sqrt 12 < 4
  CHECK(sign_of_surd(-4, 1, 16) == 0);
  CHECK(sign_of_surd(4, -1, 16) == 0);
  CHECK(sign_of_surd(-3, 1, 12) == 1);  // sqrt 12 > 3
  CHECK(sign_of_surd(0, 0, 5) == 0);
  CHECK(sign_of_surd(0, -2, 5) == -1);
  CHECK(sign_of_surd(7, 5, 0) == 1);
}

TEST_CASE("3 + sqrt 12 against rationals") {
  const QuadraticRoot x(3, 1, 12, 1);
  CHECK(x.compare(6) > 0);
  CHECK(x.compare(7) < 0);
  // sqrt 12 = 3.4641..., so 6.464 < x < 6.465.
  CHECK(x.compare(Rational(808, 125)) > 0);
  CHECK(x.compare(Rational(1293, 200)) < 0);
  CHECK(x.rational_below(1) == 6);
  CHECK(x.rational_above(1) == 7);
  CHECK(x.rational_below(1000) == Rational(808, 125));
  CHECK(x.rational_above(1000) == Rational(1293, 200));
}

TEST_CASE("rational roots and strict bounds") {
  const QuadraticRoot two(1, 1, 1, 1);  // 1 + sqrt 1
  CHECK(two.compare(2) == 0);
  CHECK(two.rational_below(1) == 1);
  CHECK(two.rational_above(1) == 3);
  CHECK(two.rational_below(2) == Rational(3, 2));
}

TEST_CASE("denominator normalization and domain") {
  const QuadraticRoot x(-2, -1, 3, -2);  // (2 + sqrt 3)/2
  CHECK(x.den == 2);
  CHECK(x.p == 2);
  CHECK(x.q == 1);
  CHECK_THROWS_AS(QuadraticRoot(0, 1, -1, 1), DomainError);
  CHECK_THROWS_AS(QuadraticRoot(0, 1, 1, 0), DomainError);
}

TEST_CASE("formatting") { CHECK(QuadraticRoot(3, 1, 12, 1).to_string() == "(3 + sqrt(12))"); }

TEST_CASE("property: exact comparison agrees with 512-bit evaluation away from ties") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Rational p = oracle::random_rational(rng);
    const Rational q = oracle::random_rational(rng);
    const Rational d = abs(oracle::random_rational(rng, 50));
    Rational den = oracle::random_rational(rng, 7);
    if (den == 0) den = 1;
    const QuadraticRoot x(p, q, d, den);
    const Rational r = oracle::random_rational(rng, 30);
    const mpf_class diff = approx(x) - mpf_class(r, 512);
    if (abs(diff) < mpf_class("1e-100", 512)) continue;
    CHECK(x.compare(r) == sgn(diff));
    ++checked;

    const Rational lo = x.rational_below(7);
    const Rational hi = x.rational_above(7);
    CHECK(x.compare(lo) > 0);
    CHECK(x.compare(hi) < 0);
    CHECK(hi - lo <= Rational(2, 7));
  }
  CHECK(checked > 1500);
}
