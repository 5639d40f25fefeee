#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/lattice.hpp"
#include "symcone/quadratic_root.hpp"
#include "symcone/surface_model.hpp"

namespace symcone {

/// (C^2 + K.C)/2 + 1. May be non-integral or negative; callers decide.
Rational adjunction_genus(const ClassVector& curve, const ClassVector& canonical, const Lattice& lattice);

/// With K numerically trivial, adjunction forces C^2 = 2g - 2; a negative
/// curve datum is admissible iff that holds with g >= 0 and C^2 < 0.
bool classify_trivial_K_negative_curve(int c_sq, int genus);

/// b2 = 12 chi(O) - K^2 - 2.
int noether_b2(int k_sq, int chi_o);

struct ExceptionalQuery {
  ClassVector canonical;
  /// Search coordinates; the ambient basis when absent.
  std::optional<std::vector<ClassVector>> sublattice_basis;
  int bound = 1;
};

/// All integral classes x in the box |coefficient| <= bound (over the
/// sublattice basis when given) with x^2 = -1 and x.K = -1.
///
/// Output is sorted by ambient coefficients in decreasing lexicographic
/// order. This is a Diophantine search: it over-approximates the geometric
/// exceptional set unless the sphere sublattice is supplied.
std::vector<ClassVector> enumerate_exceptional(const ExceptionalQuery& query, const Lattice& lattice);

enum class ConeFailure { None, NotPositive, WrongComponent, ExceptionalPairing, CurvePairing };

struct ConeMembership {
  bool member = false;
  ConeFailure failure = ConeFailure::None;
  /// Name of the exceptional class or curve that blocks membership.
  std::string witness;
  Rational witness_pairing;
};

const char* to_string(ConeFailure failure);

/// Li-Luo membership: a^2 > 0, a.reference > 0 and a.E > 0 for all declared E.
ConeMembership symplectic_membership(const ClassVector& a, const SurfaceModel& model);
/// Nakai-Moishezon membership against the declared negative curves.
ConeMembership kahler_membership(const ClassVector& a, const SurfaceModel& model);

bool in_symplectic_cone(const ClassVector& a, const SurfaceModel& model);
bool in_kahler_cone(const ClassVector& a, const SurfaceModel& model);

/// Open interval (lower, upper) of t with (w + tC)^2 > 0 and (w + tC).C < 0.
struct DeformationInterval {
  Rational lower;
  QuadraticRoot upper;

  bool contains(const Rational& t) const { return t > lower && upper.compare(t) > 0; }
};

DeformationInterval deformation_interval(const ClassVector& w, const ClassVector& curve, const Lattice& lattice);

struct CertificateCheck {
  std::string description;
  Rational value;
  bool passed = false;
};

struct NonKahlerCertificate {
  ClassVector w;
  CurveRecord curve;
  Rational v;
  Rational m;
  Rational T;
  ClassVector aT;
  DeformationInterval interval;
  std::vector<CertificateCheck> checks;

  bool all_passed() const;
};

/// Builds a certificate that w + T*C is symplectic (Li-Luo) but pairs
/// negatively with the curve C, hence is not Kähler.
///
/// T is the smallest (v + j)/m, j = 1, 2, ..., inside the deformation
/// interval that also keeps every exceptional pairing positive; if the scan
/// leaves the interval first, a rational point near the middle of the
/// interval is tried. Throws CertificationError when no admissible T exists.
NonKahlerCertificate certify_non_generic(const ClassVector& w, const CurveRecord& curve, const SurfaceModel& model);

/// Recomputes every inequality of the certificate from scratch. Returns the
/// descriptions of the failing checks (empty when sound).
std::vector<std::string> verify_certificate(const NonKahlerCertificate& cert, const SurfaceModel& model);

}  // namespace symcone
