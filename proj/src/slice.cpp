#include "symcone/slice.hpp"

#include <array>

#include "symcone/errors.hpp"

namespace symcone {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::OutsideP: return "OUTSIDE_P";
    case Verdict::WrongComponent: return "WRONG_COMPONENT";
    case Verdict::NotSymplectic: return "NOT_SYMPLECTIC";
    case Verdict::SymplecticNotKahler: return "SYMPLECTIC_NOT_KAHLER";
    case Verdict::Kahler: return "KAHLER";
    case Verdict::OnWall: return "ON_WALL";
  }
  return "?";
}

Classification classify(const ClassVector& a, const SurfaceModel& model) {
  if (!model.curves) throw CapabilityError("model '" + model.name + "' declares no curve list; cannot separate Kähler classes");
  const Lattice& L = model.lattice;
  if (a.is_zero()) return {Verdict::OutsideP, ""};
  const Rational sq = self_int(a, L);
  if (sq < 0) return {Verdict::OutsideP, ""};
  if (sq == 0) return {Verdict::OnWall, ""};
  const Rational with_ref = pair(a, model.reference_class(), L);
  if (with_ref < 0) return {Verdict::WrongComponent, model.reference};
  if (with_ref == 0) return {Verdict::OnWall, model.reference};

  std::string zero_wall;
  for (const auto& name : model.exceptional) {
    const Rational p = pair(a, model.resolve(name), L);
    if (p < 0) return {Verdict::NotSymplectic, name};
    if (p == 0 && zero_wall.empty()) zero_wall = name;
  }
  if (!zero_wall.empty()) return {Verdict::OnWall, zero_wall};

  for (const auto& rec : *model.curves) {
    if (self_int(rec.cls, L) >= 0) continue;
    const Rational p = pair(a, rec.cls, L);
    if (p < 0) return {Verdict::SymplecticNotKahler, rec.label};
    if (p == 0 && zero_wall.empty()) zero_wall = rec.label;
  }
  if (!zero_wall.empty()) return {Verdict::OnWall, zero_wall};
  return {Verdict::Kahler, ""};
}

std::vector<SliceRow> slice_grid(const SurfaceModel& model, const ClassVector& u, const ClassVector& v, const SliceRange& s_range,
                                 const SliceRange& t_range, int s_steps, int t_steps) {
  const Lattice& L = model.lattice;
  if (u.size() != L.rank() || v.size() != L.rank()) throw UsageError("slice directions must match the lattice rank");
  const std::array<ClassVector, 2> dirs{u, v};
  if (span_rank(dirs) != 2) throw UsageError("slice directions u and v must be linearly independent");
  if (s_steps < 2 || t_steps < 2) throw UsageError("slice needs at least 2 steps per axis");
  if (!(s_range.lo < s_range.hi) || !(t_range.lo < t_range.hi)) throw UsageError("slice ranges must satisfy lo < hi");

  std::vector<SliceRow> rows;
  rows.reserve(static_cast<std::size_t>(s_steps) * static_cast<std::size_t>(t_steps));
  const Rational ds = (s_range.hi - s_range.lo) / (s_steps - 1);
  const Rational dt = (t_range.hi - t_range.lo) / (t_steps - 1);
  for (int i = 0; i < s_steps; ++i) {
    const Rational s = s_range.lo + ds * i;
    for (int j = 0; j < t_steps; ++j) {
      const Rational t = t_range.lo + dt * j;
      ClassVector a = s * u + t * v;
      const auto c = classify(a, model);
      Rational sq = self_int(a, L);
      rows.push_back({s, t, std::move(a), std::move(sq), c.verdict, c.witness});
    }
  }
  return rows;
}

void write_csv(const std::vector<SliceRow>& rows, std::ostream& out) {
  out << "s,t,square,verdict\n";
  for (const auto& row : rows) {
    out << to_string(row.s) << ',' << to_string(row.t) << ',' << to_string(row.square) << ',' << to_string(row.verdict) << '\n';
  }
}

}  // namespace symcone
