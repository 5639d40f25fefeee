#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/surface_model.hpp"

namespace symcone {

/// One-point blow-up of a minimal ruled surface over an elliptic curve, in
/// the rational basis {e, f, k}: e the exceptional divisor, f the fiber, k
/// the canonical class. Exceptional set {e1 = e, e2 = f - e}; negative
/// curves e1, e2 and the elliptic class C = e - 2k.
SurfaceModel ruled_blowup_model();

/// The class delta = 2e - 2k recovered from delta.e = 0, delta.f = 4, delta.k = 0.
ClassVector delta_class(const SurfaceModel& ruled);

/// xi = (e + m f - k)/2 in the ruled basis (section class for the split bundle of degree m).
ClassVector xi_class(int m);

/// Checks 4 xi + (-2m f - e) = e - 2k coefficientwise. Requires m < 0 odd.
bool decomposable_identity_check(int m);

/// Rank-2 sublattice span{k, c} of a Burniat surface (K^2 = 6) with the
/// elliptic (-1)-curve c; k.c = 1 is forced by adjunction.
SurfaceModel burniat_model();

/// Fake-quadric shadow with K^2 = 8: basis {w1, w2}, Gram [[0, 4], [4, 0]], K = w1 + w2.
SurfaceModel bidisk_model();

/// CP^2 blown up at n <= 8 points; exceptional set found by enumeration.
/// Throws OutOfScopeError for n > 8.
SurfaceModel rational_blowup_model(int n);

/// Built-in model by name: "ruled", "burniat", "bidisk", "rational<n>" / "rational:<n>".
std::optional<SurfaceModel> builtin_model(const std::string& name);

std::vector<std::string> builtin_model_names();

}  // namespace symcone
