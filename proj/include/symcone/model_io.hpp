#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symcone/surface_model.hpp"

namespace symcone {

/// Parses a model document (JSON) and validates it.
///
/// Syntax errors throw ParseError with line and column; semantic problems
/// (missing names, asymmetric Gram, adjunction mismatch, wrong signature)
/// throw ModelError naming the offending field path.
///
/// Layout:
///   {
///     "format": "symcone-model/1",
///     "name": "...",
///     "basis_names": ["e", "f", "k"],
///     "gram": [[-1, 0, -1], [0, 0, -2], [-1, -2, -1]],
///     "classes": {"e1": ["1", "0", "0"], ...},          // rationals as "p/q"
///     "roles": {
///       "canonical": "k", "reference": "r",
///       "exceptional": ["e1", "e2"],
///       "curves": [{"class": "C", "genus": 1}, ...],     // optional
///       "sphere_sublattice": ["e1", "e2"]                // optional
///     },
///     "tags": {"kodaira_dim": "-inf", "p_g": 0, "minimal": false, "note": ""}
///   }
SurfaceModel parse_model(std::string_view text);

/// Canonical text form; parse_model(serialize_model(m)) == m.
std::string serialize_model(const SurfaceModel& model);

SurfaceModel read_model_file(const std::filesystem::path& path);

/// Resolves a class given as a name ("e1"), a coefficient vector
/// ("[4,1,-9]" or "4,1,-9") or a linear combination ("4e+f-9k", "1/2*e").
/// Throws UsageError.
ClassVector parse_class(std::string_view text, const SurfaceModel& model);

}  // namespace symcone
