#include "symcone/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symcone/errors.hpp"

namespace symcone {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "symcone-model/1";

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ModelError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ModelError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ModelError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_names(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ModelError(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ModelError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ModelError(path, e.what());
  }
}

Lattice parse_lattice(const Json& doc) {
  const auto names = as_names(field(doc, "basis_names", ""), "basis_names");
  const Json& g = field(doc, "gram", "");
  if (!g.is_array()) throw ModelError("gram", "expected an integer matrix");
  std::vector<std::vector<std::int64_t>> gram;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto row_path = "gram[" + std::to_string(i) + "]";
    if (!g[i].is_array()) throw ModelError(row_path, "expected an array of integers");
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (!g[i][j].is_number_integer()) throw ModelError(row_path + "[" + std::to_string(j) + "]", "expected an integer");
      row.push_back(g[i][j].get<std::int64_t>());
    }
    gram.push_back(std::move(row));
  }
  try {
    return Lattice(names, gram);
  } catch (const DimensionError& e) {
    const std::string what = e.what();
    throw ModelError(what.find("basis name") != std::string::npos ? "basis_names" : "gram", what);
  }
}

// Compact pretty printer: objects one key per line, scalar arrays inline.
void emit(const Json& j, std::ostringstream& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    const bool small = j.size() <= 3 && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (small) {
      out << "{";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        out << (first ? "" : ", ") << Json(key).dump() << ": " << value.dump(-1, ' ', false);
        first = false;
      }
      out << "}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << Json(key).dump() << ": ";
      emit(value, out, indent + 2);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat || j.empty()) {
      out << j.dump(-1, ' ', false);
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      emit(j[i], out, indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else {
    out << j.dump(-1, ' ', false);
  }
}

Json coefficients(const ClassVector& v) {
  Json arr = Json::array();
  for (const auto& c : v.coeffs) arr.push_back(to_string(c));
  return arr;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

SurfaceModel parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(line, col, msg);
  }
  if (!doc.is_object()) throw ModelError("", "model document must be an object");
  if (doc.contains("format") && as_string(doc["format"], "format") != kFormat) {
    throw ModelError("format", "unsupported format '" + doc["format"].get<std::string>() + "'");
  }

  Lattice lattice = parse_lattice(doc);
  std::vector<NamedClass> classes;
  if (doc.contains("classes")) {
    const Json& table = doc["classes"];
    if (!table.is_object()) throw ModelError("classes", "expected an object of named coefficient vectors");
    std::size_t idx = 0;
    for (const auto& [name, value] : table.items()) {
      const auto path = "classes." + name;
      if (!value.is_array()) throw ModelError(path, "expected an array of rationals");
      if (value.size() != lattice.rank()) {
        throw ModelError(path, "has " + std::to_string(value.size()) + " entries, rank is " + std::to_string(lattice.rank()));
      }
      ClassVector v;
      for (std::size_t i = 0; i < value.size(); ++i) v.coeffs.push_back(as_rational(value[i], path + "[" + std::to_string(i) + "]"));
      classes.push_back({name, std::move(v)});
      ++idx;
    }
  }

  const Json& roles = field(doc, "roles", "");
  SurfaceModel model{
      as_string(field(doc, "name", ""), "name"),
      std::move(lattice),
      std::move(classes),
      as_string(field(roles, "canonical", "roles"), "roles.canonical"),
      as_string(field(roles, "reference", "roles"), "roles.reference"),
      roles.contains("exceptional") ? as_names(roles["exceptional"], "roles.exceptional") : std::vector<std::string>{},
      std::nullopt,
      std::nullopt,
      {},
  };

  if (roles.contains("curves")) {
    const Json& curves = roles["curves"];
    if (!curves.is_array()) throw ModelError("roles.curves", "expected an array of curve records");
    std::vector<CurveRecord> records;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const auto path = "roles.curves[" + std::to_string(i) + "]";
      const std::string label = as_string(field(curves[i], "class", path), path + ".class");
      const Json& genus = field(curves[i], "genus", path);
      if (!genus.is_number_integer()) throw ModelError(path + ".genus", "expected an integer");
      if (!model.has_class(label)) throw ModelError(path + ".class", "no class named '" + label + "'");
      records.push_back({label, model.resolve(label), genus.get<int>()});
    }
    model.curves = std::move(records);
  }
  if (roles.contains("sphere_sublattice")) model.sphere_sublattice = as_names(roles["sphere_sublattice"], "roles.sphere_sublattice");

  if (doc.contains("tags")) {
    const Json& tags = doc["tags"];
    if (!tags.is_object()) throw ModelError("tags", "expected an object");
    if (tags.contains("kodaira_dim")) model.tags.kodaira_dim = as_string(tags["kodaira_dim"], "tags.kodaira_dim");
    if (tags.contains("p_g")) {
      if (!tags["p_g"].is_number_integer()) throw ModelError("tags.p_g", "expected an integer");
      model.tags.p_g = tags["p_g"].get<int>();
    }
    if (tags.contains("minimal")) {
      if (!tags["minimal"].is_boolean()) throw ModelError("tags.minimal", "expected a boolean");
      model.tags.minimal = tags["minimal"].get<bool>();
    }
    if (tags.contains("note")) model.tags.note = as_string(tags["note"], "tags.note");
  }

  validate(model);
  return model;
}

std::string serialize_model(const SurfaceModel& model) {
  Json doc;
  doc["format"] = kFormat;
  doc["name"] = model.name;
  doc["basis_names"] = model.lattice.basis_names();
  doc["gram"] = model.lattice.gram_rows();
  doc["classes"] = Json::object();
  for (const auto& entry : model.classes) doc["classes"][entry.name] = coefficients(entry.cls);
  Json roles;
  roles["canonical"] = model.canonical;
  roles["reference"] = model.reference;
  roles["exceptional"] = model.exceptional;
  if (model.curves) {
    roles["curves"] = Json::array();
    for (const auto& rec : *model.curves) roles["curves"].push_back(Json{{"class", rec.label}, {"genus", rec.genus}});
  }
  if (model.sphere_sublattice) roles["sphere_sublattice"] = *model.sphere_sublattice;
  doc["roles"] = roles;
  doc["tags"] = Json{{"kodaira_dim", model.tags.kodaira_dim},
                     {"p_g", model.tags.p_g},
                     {"minimal", model.tags.minimal},
                     {"note", model.tags.note}};
  std::ostringstream out;
  emit(doc, out, 0);
  out << '\n';
  return out.str();
}

SurfaceModel read_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

ClassVector parse_class(std::string_view text, const SurfaceModel& model) {
  const std::string s = trim(text);
  if (s.empty()) throw UsageError("empty class expression");
  const std::size_t rank = model.lattice.rank();
  if (model.has_class(s)) return model.resolve(s);

  if (s.front() == '[' || s.front() == '(' || s.find(',') != std::string::npos) {
    std::string body = s;
    if (body.front() == '[' || body.front() == '(') {
      const char close = body.front() == '[' ? ']' : ')';
      if (body.back() != close) throw UsageError("unbalanced brackets in '" + s + "'");
      body = body.substr(1, body.size() - 2);
    }
    ClassVector v;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.coeffs.push_back(parse_rational(trim(item)));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad coefficient: ") + e.what());
      }
    }
    if (v.size() != rank) throw UsageError("vector '" + s + "' has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(rank));
    return v;
  }

  // Linear combination: [+-] [p[/q]] [*] name, repeated.
  ClassVector total = ClassVector::zero(rank);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    int sgn_term = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn_term = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw UsageError("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    const std::size_t num_start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff = 1;
    if (i > num_start) {
      try {
        coeff = parse_rational(s.substr(num_start, i - num_start));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad coefficient: ") + e.what());
      }
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    const std::size_t name_start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    const std::string name = s.substr(name_start, i - name_start);
    if (name.empty()) throw UsageError("expected a class name at position " + std::to_string(name_start) + " in '" + s + "'");
    if (!model.has_class(name)) throw UsageError("unknown class '" + name + "'");
    total += Rational(sgn_term * coeff) * model.resolve(name);
    first = false;
  }
  return total;
}

}  // namespace symcone
