#include "symcone/models.hpp"

#include <array>
#include <stdexcept>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"

namespace symcone {

namespace {

void self_check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("built-in model self-check failed: " + what);
}

}  // namespace

SurfaceModel ruled_blowup_model() {
  Lattice L({"e", "f", "k"}, {{-1, 0, -1}, {0, 0, -2}, {-1, -2, -1}});
  const ClassVector e = L.basis("e");
  const ClassVector f = L.basis("f");
  const ClassVector k = L.basis("k");
  const ClassVector e1 = e;
  const ClassVector e2 = f - e;
  const ClassVector C = e - Rational(2) * k;

  SurfaceModel model{
      "ruled_blowup",
      L,
      {{"e1", e1}, {"e2", e2}, {"r", f - k}, {"C", C}, {"delta", Rational(2) * e - Rational(2) * k}},
      "k",
      "r",
      {"e1", "e2"},
      std::vector<CurveRecord>{{"e1", e1, 0}, {"e2", e2, 0}, {"C", C, 1}},
      std::vector<std::string>{"e1", "e2"},
      {"-inf", 0, false, "blow-up of the odd minimal ruled surface over an elliptic curve; rational basis {e,f,k} of index 2"},
  };

  self_check(pair(e1, e2, L) == 1, "e1.e2 = 1");
  self_check(f == e1 + e2, "f = e1 + e2");
  self_check(self_int(f, L) == 0, "f^2 = 0");
  self_check(self_int(k, L) == -1, "k^2 = -1");
  self_check(parity(L) == Parity::Odd, "parity odd");
  validate(model);
  self_check(delta_class(model) == Rational(2) * e - Rational(2) * k, "delta = 2e - 2k");
  return model;
}

ClassVector delta_class(const SurfaceModel& ruled) {
  const Lattice& L = ruled.lattice;
  if (!L.index_of("e") || !L.index_of("f") || !L.index_of("k")) throw DomainError("delta_class needs the ruled basis {e, f, k}");
  const std::array<PairingTarget, 3> targets{{{L.basis("e"), 0}, {L.basis("f"), 4}, {L.basis("k"), 0}}};
  ClassVector delta = solve_from_pairings(targets, L);
  const ClassVector expected = Rational(2) * L.basis("e") - Rational(2) * L.basis("k");
  self_check(delta == expected, "delta = 2e - 2k");
  self_check(self_int(delta, L) == 0, "delta^2 = 0");
  self_check(adjunction_genus(delta, L.basis("k"), L) == 1, "delta has genus 1");
  return delta;
}

ClassVector xi_class(int m) {
  // (e + m f - k) / 2
  return ClassVector({Rational(1, 2), Rational(m, 2), Rational(-1, 2)});
}

bool decomposable_identity_check(int m) {
  if (m >= 0 || m % 2 == 0) throw DomainError("decomposable case needs a negative odd degree, got " + std::to_string(m));
  const ClassVector e = ClassVector::of({1, 0, 0});
  const ClassVector f = ClassVector::of({0, 1, 0});
  const ClassVector k = ClassVector::of({0, 0, 1});
  const ClassVector lhs = Rational(4) * xi_class(m) + (Rational(-2 * m) * f - e);
  return lhs == e - Rational(2) * k;
}

SurfaceModel burniat_model() {
  // k^2 = K^2 = 6, c^2 = -1, and genus(c) = 1 forces k.c = 2*1 - 2 - c^2 = 1.
  Lattice L({"k", "c"}, {{6, 1}, {1, -1}});
  const ClassVector c = L.basis("c");
  SurfaceModel model{
      "burniat",
      L,
      {},
      "k",
      "k",
      {},
      std::vector<CurveRecord>{{"c", c, 1}},
      std::nullopt,
      {"2", 0, true, "rank-2 sublattice span{k,c}; full b2 = 4"},
  };
  self_check(self_int(L.basis("k"), L) == 6, "K^2 = 6");
  self_check(noether_b2(6, 1) == 4, "b2 = 4");
  validate(model);
  return model;
}

SurfaceModel bidisk_model() {
  Lattice L({"w1", "w2"}, {{0, 4}, {4, 0}});
  const ClassVector K = ClassVector::of({1, 1});
  SurfaceModel model{
      "bidisk",
      L,
      {{"K", K}},
      "K",
      "K",
      {},
      std::vector<CurveRecord>{},
      std::nullopt,
      {"2", 0, true, "K^2 = 8 quotient of the bidisk; Gram entry 4 chosen so that K = w1 + w2"},
  };
  validate(model);
  self_check(self_int(K, L) == 8, "K^2 = 8");
  for (long a = 1; a <= 4; ++a) {
    for (long b = 1; b <= 4; ++b) {
      const ClassVector x = ClassVector::of({a, b});
      self_check(in_kahler_cone(x, model) == in_symplectic_cone(x, model), "Kähler = symplectic on a*w1 + b*w2");
    }
  }
  return model;
}

SurfaceModel rational_blowup_model(int n) {
  if (n < 0) throw DomainError("number of blown-up points must be nonnegative");
  if (n > 8) {
    throw OutOfScopeError("CP^2 blown up at " + std::to_string(n) +
                          " > 8 points has infinitely many exceptional classes (Harbourne-Hirschowitz regime); refusing bounded enumeration");
  }
  std::vector<std::string> names{"h"};
  std::vector<std::vector<std::int64_t>> gram(n + 1, std::vector<std::int64_t>(n + 1, 0));
  gram[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    names.push_back("e" + std::to_string(i));
    gram[i][i] = -1;
  }
  Lattice L(names, gram);
  ClassVector K = ClassVector::zero(n + 1);
  K[0] = -3;
  for (int i = 1; i <= n; ++i) K[i] = 1;

  const auto found = enumerate_exceptional({K, std::nullopt, 3 * (n + 1)}, L);
  self_check(n == 0 || !found.empty(), "nonempty exceptional set");

  // -K is the reference: positive square 9 - n and -K.E = 1 on every exceptional class.
  SurfaceModel model{"rational" + std::to_string(n), L, {{"K", K}, {"minus_K", -K}}, "K", "minus_K", {}, std::vector<CurveRecord>{},
                     std::nullopt,
                     {"-inf", 0, n == 0, "CP^2 blown up at " + std::to_string(n) + " points"}};
  int extra = 0;
  for (const auto& E : found) {
    std::string label;
    for (std::size_t i = 0; i < L.rank(); ++i) {
      if (E == ClassVector::unit(L.rank(), i)) label = L.basis_names()[i];
    }
    if (label.empty()) {
      label = "E" + std::to_string(++extra);
      model.classes.push_back({label, E});
    }
    model.exceptional.push_back(label);
    model.curves->push_back({label, E, 0});
  }
  validate(model);
  return model;
}

std::optional<SurfaceModel> builtin_model(const std::string& name) {
  if (name == "ruled" || name == "ruled_blowup") return ruled_blowup_model();
  if (name == "burniat") return burniat_model();
  if (name == "bidisk") return bidisk_model();
  std::string digits;
  if (name.rfind("rational:", 0) == 0) digits = name.substr(9);
  else if (name.rfind("rational", 0) == 0) digits = name.substr(8);
  else return std::nullopt;
  if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return rational_blowup_model(std::stoi(digits));
}

std::vector<std::string> builtin_model_names() {
  std::vector<std::string> out{"ruled", "burniat", "bidisk"};
  for (int n = 0; n <= 8; ++n) out.push_back("rational" + std::to_string(n));
  return out;
}

}  // namespace symcone
