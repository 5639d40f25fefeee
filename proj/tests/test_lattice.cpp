#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "symcone/errors.hpp"
#include "symcone/lattice.hpp"
#include "symcone/models.hpp"

using namespace symcone;

namespace {

Lattice ruled() { return Lattice({"e", "f", "k"}, {{-1, 0, -1}, {0, 0, -2}, {-1, -2, -1}}); }

const ClassVector e = ClassVector::of({1, 0, 0});
const ClassVector f = ClassVector::of({0, 1, 0});
const ClassVector k = ClassVector::of({0, 0, 1});

}  // namespace

TEST_CASE("pairing in the ruled basis") {
  const auto L = ruled();
  CHECK(pair(k, e, L) == -1);
  CHECK(pair(k, f, L) == -2);
  CHECK(pair(ClassVector::zero(3), ClassVector::of({3, -7, 2}), L) == 0);

  // (e - 2k)^2 = e^2 - 4 e.k + 4 k^2 with e^2 = -1, e.k = -1, k^2 = -1.
  const Rational by_hand = Rational(-1) - 4 * Rational(-1) + 4 * Rational(-1);
  CHECK(by_hand == -1);
  CHECK(pair(e - Rational(2) * k, e - Rational(2) * k, L) == by_hand);
}

TEST_CASE("self intersection") {
  const auto L = ruled();
  CHECK(self_int(e, L) == -1);
  CHECK(self_int(Rational(2) * e - Rational(2) * k, L) == 0);
  CHECK(self_int(ClassVector::zero(3), L) == 0);
  CHECK(self_int(ClassVector({Rational(1, 2), 0, Rational(-1, 2)}), L) == 0);  // (e-k)^2 = -1 + 2 - 1
}

TEST_CASE("rank mismatch is a dimension error") {
  const auto L = ruled();
  CHECK_THROWS_AS(pair(ClassVector::of({1, 0}), e, L), DimensionError);
  CHECK_THROWS_AS(self_int(ClassVector::of({1, 0, 0, 0}), L), DimensionError);
}

TEST_CASE("lattice construction validates the Gram matrix") {
  CHECK_THROWS_AS(Lattice({"a", "b"}, {{0, 1}, {2, 0}}), DimensionError);
  CHECK_THROWS_AS(Lattice({"a", "a"}, {{1, 0}, {0, -1}}), DimensionError);
  CHECK_THROWS_AS(Lattice({"a", ""}, {{1, 0}, {0, -1}}), DimensionError);
  CHECK_THROWS_AS(Lattice({"a", "b"}, {{1, 0}}), DimensionError);
  CHECK_THROWS_AS(Lattice({}, {}), DimensionError);
}

TEST_CASE("signature against the characteristic-polynomial oracle") {
  const std::vector<oracle::IntMatrix> grams{
      {{-1, 0, -1}, {0, 0, -2}, {-1, -2, -1}},
      {{0, 4}, {4, 0}},
      {{1}},
      {{0, 1}, {1, 0}},
      {{0, 0}, {0, 0}},
      {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
      {{6, 1}, {1, -1}},
      {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
      {{2, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 2}},
  };
  for (const auto& g : grams) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.size(); ++i) names.push_back("b" + std::to_string(i));
    CHECK(signature(Lattice(names, g)) == oracle::eigen_signature(g));
  }
  CHECK(signature(ruled()) == SignatureReport{1, 2, 0});
  CHECK(signature(Lattice({"w1", "w2"}, {{0, 4}, {4, 0}})) == SignatureReport{1, 1, 0});
  CHECK(signature(Lattice({"h"}, {{1}})) == SignatureReport{1, 0, 0});
}

TEST_CASE("parity") {
  CHECK(parity(ruled()) == Parity::Odd);
  CHECK(parity(Lattice({"w1", "w2"}, {{0, 4}, {4, 0}})) == Parity::Even);
  CHECK(parity(Lattice({"h"}, {{1}})) == Parity::Odd);
}

TEST_CASE("positive cone") {
  const auto L = ruled();
  // (f - k)^2 = f^2 - 2 f.k + k^2 = 0 + 4 - 1.
  CHECK(self_int(f - k, L) == 3);
  CHECK(in_positive_cone(f - k, L));
  CHECK_FALSE(in_positive_cone(e, L));
  CHECK_FALSE(in_positive_cone(ClassVector::zero(3), L));
}

TEST_CASE("same component") {
  const auto L = ruled();
  const ClassVector a = f - k;
  const ClassVector aT = ClassVector::of({4, 1, -9});
  CHECK(same_component(a, a, L));
  CHECK_FALSE(same_component(a, -a, L));
  // (f-k).(4e+f-9k) = (f-k).(f-k) + 4 (f-k).(e-2k) = 3 + 4*3.
  CHECK(pair(a, aT, L) == 15);
  CHECK(same_component(a, aT, L));
  CHECK_THROWS_AS(same_component(e, a, L), DomainError);
  CHECK_THROWS_AS(same_component(a, ClassVector::zero(3), L), DomainError);
  const Lattice definite({"x", "y"}, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(same_component(ClassVector::of({1, 0}), ClassVector::of({0, 1}), definite), DomainError);
}

TEST_CASE("solve from pairings") {
  const auto L = ruled();
  const std::array<PairingTarget, 3> delta_targets{{{e, 0}, {f, 4}, {k, 0}}};
  CHECK(solve_from_pairings(delta_targets, L) == Rational(2) * e - Rational(2) * k);

  const std::array<PairingTarget, 3> round_trip{{{e, pair(e, e, L)}, {f, pair(e, f, L)}, {k, pair(e, k, L)}}};
  CHECK(solve_from_pairings(round_trip, L) == e);

  // Split bundle of degree m = -1: xi = (e + m f - k)/2.
  const int m = -1;
  const ClassVector xi_expected = ClassVector({Rational(1, 2), Rational(m, 2), Rational(-1, 2)});
  const std::array<PairingTarget, 3> xi_targets{{{e, pair(xi_expected, e, L)}, {f, pair(xi_expected, f, L)}, {k, pair(xi_expected, k, L)}}};
  const ClassVector xi = solve_from_pairings(xi_targets, L);
  CHECK(xi == xi_expected);
  CHECK(Rational(2) * xi == e - f - k);
  // 4 xi + (-2 m f - e) = e - 2k, coefficient by coefficient.
  const ClassVector lhs = Rational(4) * xi + (Rational(-2 * m) * f - e);
  CHECK(lhs == e - Rational(2) * k);
  CHECK_FALSE(xi.is_integral());
}

TEST_CASE("solve from pairings: error paths") {
  const auto L = ruled();
  const std::array<PairingTarget, 2> inconsistent{{{e, 0}, {e, 1}}};
  CHECK_THROWS_AS(solve_from_pairings(inconsistent, L), NoSolutionError);
  const std::array<PairingTarget, 1> under{{{e, 0}}};
  try {
    solve_from_pairings(under, L);
    FAIL("expected ambiguity");
  } catch (const AmbiguityError& err) {
    CHECK(err.kernel_dim() == 2);
  }
  const std::array<PairingTarget, 1> bad{{{ClassVector::of({1, 0}), 0}}};
  CHECK_THROWS_AS(solve_from_pairings(bad, L), DimensionError);
}

TEST_CASE("property: pairing is bilinear and symmetric") {
  std::mt19937_64 rng(11);
  const auto L = ruled();
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_class(rng, 3);
    const auto b = oracle::random_class(rng, 3);
    const auto c = oracle::random_class(rng, 3);
    const Rational lambda = oracle::random_rational(rng);
    CHECK(pair(a, b, L) == pair(b, a, L));
    CHECK(pair(a + lambda * b, c, L) == pair(a, c, L) + lambda * pair(b, c, L));
  }
}

TEST_CASE("property: signature and parity are unimodular invariants") {
  std::mt19937_64 rng(23);
  for (const auto& name : {"ruled", "burniat", "bidisk", "rational3", "rational8"}) {
    const auto model = *builtin_model(name);
    const auto g = model.lattice.gram_rows();
    const auto sig = signature(model.lattice);
    const auto par = parity(model.lattice);
    for (int trial = 0; trial < 25; ++trial) {
      const auto u = oracle::random_unimodular(g.size(), rng);
      const Lattice changed(model.lattice.basis_names(), oracle::congruent(g, u));
      CHECK(signature(changed) == sig);
      CHECK(parity(changed) == par);
    }
  }
}

TEST_CASE("property: same_component is an equivalence on the positive cone") {
  std::mt19937_64 rng(5);
  for (const auto& name : {"ruled", "burniat", "bidisk", "rational4"}) {
    const auto model = *builtin_model(name);
    const auto& L = model.lattice;
    std::vector<ClassVector> pos;
    while (pos.size() < 12) {
      auto a = oracle::random_class(rng, L.rank(), 6, 3);
      if (self_int(a, L) > 0) pos.push_back(std::move(a));
    }
    for (const auto& a : pos) {
      CHECK(same_component(a, a, L));
      for (const auto& b : pos) {
        CHECK(same_component(a, b, L) == same_component(b, a, L));
        CHECK(pair(a, b, L) != 0);
        for (const auto& c : pos) {
          if (same_component(a, b, L) && same_component(b, c, L)) CHECK(same_component(a, c, L));
        }
      }
    }
  }
}

TEST_CASE("property: solve_from_pairings inverts pair") {
  std::mt19937_64 rng(99);
  const auto L = ruled();
  std::vector<ClassVector> probes{e, f, k};
  for (int i = 0; i < 100; ++i) {
    const auto x = oracle::random_class(rng, 3);
    std::vector<PairingTarget> targets;
    for (const auto& p : probes) targets.push_back({p, pair(x, p, L)});
    CHECK(solve_from_pairings(targets, L) == x);
  }
}

TEST_CASE("expression formatting") {
  const auto L = ruled();
  CHECK(to_expression(ClassVector::of({4, 1, -9}), L) == "4e+f-9k");
  CHECK(to_expression(ClassVector::zero(3), L) == "0");
  CHECK(to_expression(ClassVector({Rational(1, 2), 0, Rational(-1, 2)}), L) == "1/2*e-1/2*k");
}
