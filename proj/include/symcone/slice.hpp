#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "symcone/surface_model.hpp"

namespace symcone {

/// Exact classification of a class against the model's cones.
///
/// Decided in order: zero class or negative square -> OutsideP; square zero
/// -> OnWall; negative reference pairing -> WrongComponent; a negative
/// exceptional pairing -> NotSymplectic, a zero one -> OnWall; a negative
/// curve pairing -> SymplecticNotKahler, a zero one -> OnWall; else Kahler.
enum class Verdict { OutsideP, WrongComponent, NotSymplectic, SymplecticNotKahler, Kahler, OnWall };

const char* to_string(Verdict verdict);

struct Classification {
  Verdict verdict = Verdict::OutsideP;
  /// Blocking exceptional class or curve, when there is one.
  std::string witness;
};

/// Requires a model with a curve list (CapabilityError otherwise).
Classification classify(const ClassVector& a, const SurfaceModel& model);

struct SliceRange {
  Rational lo;
  Rational hi;
};

struct SliceRow {
  Rational s;
  Rational t;
  ClassVector cls;
  Rational square;
  Verdict verdict = Verdict::OutsideP;
  std::string witness;
};

/// Rational grid s_i = lo + i (hi - lo)/(steps - 1) over both ranges, class
/// s*u + t*v, row-major (s outer). Throws UsageError for dependent u, v,
/// fewer than two steps or an empty range.
std::vector<SliceRow> slice_grid(const SurfaceModel& model, const ClassVector& u, const ClassVector& v, const SliceRange& s_range,
                                 const SliceRange& t_range, int s_steps, int t_steps);

/// Header `s,t,square,verdict`, LF endings, rationals as "p/q".
void write_csv(const std::vector<SliceRow>& rows, std::ostream& out);

}  // namespace symcone
