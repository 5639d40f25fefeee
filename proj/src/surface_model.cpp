#include "symcone/surface_model.hpp"

#include <cctype>
#include <set>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"

namespace symcone {

namespace {

const ClassVector* find_in_table(const SurfaceModel& model, const std::string& class_name) {
  for (const auto& entry : model.classes) {
    if (entry.name == class_name) return &entry.cls;
  }
  return nullptr;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string indexed(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

bool SurfaceModel::has_class(const std::string& class_name) const {
  return find_in_table(*this, class_name) != nullptr || lattice.index_of(class_name).has_value();
}

ClassVector SurfaceModel::resolve(const std::string& class_name) const {
  if (const auto* cls = find_in_table(*this, class_name)) return *cls;
  if (const auto idx = lattice.index_of(class_name)) return ClassVector::unit(lattice.rank(), *idx);
  throw ModelError("classes", "no class named '" + class_name + "'");
}

std::vector<ClassVector> SurfaceModel::exceptional_set() const {
  std::vector<ClassVector> out;
  out.reserve(exceptional.size());
  for (const auto& n : exceptional) out.push_back(resolve(n));
  return out;
}

std::optional<std::vector<ClassVector>> SurfaceModel::sphere_basis() const {
  if (!sphere_sublattice) return std::nullopt;
  std::vector<ClassVector> out;
  for (const auto& n : *sphere_sublattice) out.push_back(resolve(n));
  return out;
}

std::string SurfaceModel::describe(const ClassVector& cls) const {
  for (const auto& entry : classes) {
    if (entry.cls == cls) return entry.name;
  }
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (cls == ClassVector::unit(lattice.rank(), i)) return lattice.basis_names()[i];
  }
  return to_expression(cls, lattice);
}

void validate(const SurfaceModel& model) {
  const Lattice& L = model.lattice;
  std::set<std::string> names;
  for (std::size_t i = 0; i < model.classes.size(); ++i) {
    const auto& entry = model.classes[i];
    const auto path = entry.name.empty() ? indexed("classes", i) : "classes." + entry.name;
    if (!is_identifier(entry.name)) throw ModelError(path + ".name", "'" + entry.name + "' is not an identifier");
    if (L.index_of(entry.name)) throw ModelError(path + ".name", "'" + entry.name + "' shadows a basis name");
    if (!names.insert(entry.name).second) throw ModelError(path + ".name", "duplicate class name '" + entry.name + "'");
    if (entry.cls.size() != L.rank()) {
      throw ModelError(path + ".coeffs", "has " + std::to_string(entry.cls.size()) + " entries, rank is " + std::to_string(L.rank()));
    }
  }
  for (const auto& n : L.basis_names()) {
    if (!is_identifier(n)) throw ModelError("basis_names", "'" + n + "' is not an identifier");
  }

  const auto sig = signature(L);
  if (!sig.hyperbolic()) {
    throw ModelError("gram", "signature is (" + std::to_string(sig.n_plus) + ", " + std::to_string(sig.n_minus) + ", " +
                                 std::to_string(sig.n_zero) + "), expected (1, " + std::to_string(L.rank() - 1) + ", 0)");
  }

  auto require = [&](const std::string& n, const std::string& path) {
    if (!model.has_class(n)) throw ModelError(path, "no class named '" + n + "'");
    return model.resolve(n);
  };

  const ClassVector K = require(model.canonical, "roles.canonical");
  const ClassVector r = require(model.reference, "roles.reference");
  if (self_int(r, L) <= 0) throw ModelError("roles.reference", "reference class must have positive square, got " + to_string(self_int(r, L)));

  for (std::size_t i = 0; i < model.exceptional.size(); ++i) {
    const auto path = indexed("roles.exceptional", i);
    const ClassVector E = require(model.exceptional[i], path);
    if (!E.is_integral()) throw ModelError(path, "exceptional class must be integral");
    if (self_int(E, L) != -1) throw ModelError(path, "E^2 = " + to_string(self_int(E, L)) + ", expected -1");
    if (pair(E, K, L) != -1) throw ModelError(path, "E.K = " + to_string(pair(E, K, L)) + ", expected -1");
    if (pair(E, r, L) <= 0) throw ModelError(path, "reference class pairs non-positively with exceptional class");
  }

  if (model.curves) {
    for (std::size_t i = 0; i < model.curves->size(); ++i) {
      const auto& rec = (*model.curves)[i];
      const auto path = indexed("roles.curves", i);
      const ClassVector cls = require(rec.label, path + ".class");
      if (!(cls == rec.cls)) throw ModelError(path + ".class", "record does not match class '" + rec.label + "'");
      if (rec.genus < 0) throw ModelError(path + ".genus", "genus must be nonnegative");
      const Rational g = adjunction_genus(cls, K, L);
      if (g != rec.genus) {
        throw ModelError(path + ".genus", "adjunction gives genus " + to_string(g) + " for " + rec.label + ", claimed " +
                                              std::to_string(rec.genus));
      }
    }
  }

  if (model.sphere_sublattice) {
    std::vector<ClassVector> basis;
    for (std::size_t i = 0; i < model.sphere_sublattice->size(); ++i) {
      basis.push_back(require((*model.sphere_sublattice)[i], indexed("roles.sphere_sublattice", i)));
    }
    if (span_rank(basis) != basis.size()) throw ModelError("roles.sphere_sublattice", "basis is linearly dependent");
  }
}

}  // namespace symcone
