#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcone/lattice.hpp"

namespace symcone {

struct NamedClass {
  std::string name;
  ClassVector cls;
  friend bool operator==(const NamedClass&, const NamedClass&) = default;
};

/// A curve class with a claimed geometric genus; `label` names the class.
struct CurveRecord {
  std::string label;
  ClassVector cls;
  int genus = 0;
  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct ModelTags {
  std::string kodaira_dim;  // "-inf", "0", "1", "2"
  int p_g = 0;
  bool minimal = false;
  std::string note;
  friend bool operator==(const ModelTags&, const ModelTags&) = default;
};

/// Lattice plus the distinguished classes a cone query needs.
///
/// Roles (canonical class, reference, exceptional set, curves, sphere
/// sublattice) refer to classes by name. A name resolves first against the
/// `classes` table and then against the lattice basis names.
///
/// The exceptional set and the curve list are declared by the model and
/// taken as complete; no lattice computation can certify that a class is
/// represented by an embedded sphere or a holomorphic curve.
struct SurfaceModel {
  std::string name;
  Lattice lattice;
  std::vector<NamedClass> classes;
  std::string canonical;
  std::string reference;
  std::vector<std::string> exceptional;
  /// Negative-curve claims; absent means Kähler queries are unavailable.
  std::optional<std::vector<CurveRecord>> curves;
  std::optional<std::vector<std::string>> sphere_sublattice;
  ModelTags tags;

  ClassVector resolve(const std::string& class_name) const;
  bool has_class(const std::string& class_name) const;

  ClassVector K() const { return resolve(canonical); }
  ClassVector reference_class() const { return resolve(reference); }
  std::vector<ClassVector> exceptional_set() const;
  std::optional<std::vector<ClassVector>> sphere_basis() const;

  /// Name for `cls`: a table entry or basis name when one matches, else its expression.
  std::string describe(const ClassVector& cls) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Checks every model invariant; throws ModelError carrying the field path.
///
/// signature (1, rank-1, 0); reference^2 > 0 and reference.E > 0; E^2 = -1 and
/// E.K = -1 for declared exceptional classes; curve genus claims agree with
/// adjunction; sphere sublattice members linearly independent.
void validate(const SurfaceModel& model);

}  // namespace symcone
