// symcone: command-line front end for the cone toolkit.
//
// Exit status: 0 success, 1 verification failure (including "not a member"
// for check-cone), 2 usage or parse error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "symcone/cone.hpp"
#include "symcone/errors.hpp"
#include "symcone/model_io.hpp"
#include "symcone/models.hpp"
#include "symcone/report.hpp"
#include "symcone/slice.hpp"

namespace {

using namespace symcone;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

SurfaceModel load_model(const std::string& source) {
  if (std::filesystem::exists(source)) return read_model_file(source);
  if (auto m = builtin_model(source)) return *m;
  throw UsageError("'" + source + "' is neither a model file nor a built-in model (" + [] {
    std::string names;
    for (const auto& n : builtin_model_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }() + ")");
}

SliceRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range '" + text + "' must look like lo:hi");
  try {
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad range: ") + e.what());
  }
}

int cmd_model(const std::string& source, const std::string& output) {
  const auto model = load_model(source);
  const std::string text = serialize_model(model);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + output + "'");
    out << text;
  }
  return kOk;
}

int cmd_check_cone(const std::string& source, const std::string& cls_text, bool kahler) {
  const auto model = load_model(source);
  const ClassVector a = parse_class(cls_text, model);
  const auto result = kahler ? kahler_membership(a, model) : symplectic_membership(a, model);
  std::cout << "class: " << to_expression(a, model.lattice) << '\n'
            << "square: " << to_string(self_int(a, model.lattice)) << '\n'
            << (kahler ? "kahler cone: " : "symplectic cone: ") << (result.member ? "yes" : "no") << '\n';
  if (!result.member) {
    std::cout << "reason: " << to_string(result.failure);
    if (!result.witness.empty()) std::cout << " (" << result.witness << ", pairing " << to_string(result.witness_pairing) << ")";
    std::cout << '\n';
  }
  return result.member ? kOk : kFailed;
}

int cmd_enumerate(const std::string& source, int bound, bool sphere) {
  const auto model = load_model(source);
  std::optional<std::vector<ClassVector>> basis;
  if (sphere) {
    basis = model.sphere_basis();
    if (!basis) throw UsageError("model '" + model.name + "' declares no sphere sublattice");
  }
  const auto found = enumerate_exceptional({model.K(), basis, bound}, model.lattice);
  for (const auto& x : found) {
    const std::string expr = to_expression(x, model.lattice);
    const std::string name = model.describe(x);
    std::cout << expr << (name != expr ? "\t" + name : "") << '\n';
  }
  std::cerr << found.size() << " classes with x^2 = -1, x.K = -1 in the box of radius " << bound << '\n';
  return kOk;
}

int cmd_certify(const std::string& source, const std::string& start, const std::string& curve_text) {
  const auto model = load_model(source);
  const ClassVector w = parse_class(start, model);
  std::optional<CurveRecord> curve;
  if (model.curves) {
    for (const auto& rec : *model.curves) {
      if (rec.label == curve_text) curve = rec;
    }
  }
  if (!curve) {
    const ClassVector c = parse_class(curve_text, model);
    const Rational g = adjunction_genus(c, model.K(), model.lattice);
    if (!is_integer(g) || g < 0) throw UsageError("curve class has adjunction genus " + to_string(g) + ", not a curve");
    curve = CurveRecord{model.describe(c), c, static_cast<int>(g.get_num().get_si())};
  }
  std::optional<NonKahlerCertificate> result;
  try {
    result = certify_non_generic(w, *curve, model);
  } catch (const CertificationError& e) {
    std::cout << "certification failed: " << e.what() << '\n';
    return kFailed;
  }
  const auto& cert = *result;
  const auto& L = model.lattice;
  std::cout << "w = " << to_expression(cert.w, L) << '\n'
            << "C = " << to_expression(cert.curve.cls, L) << " (" << cert.curve.label << ", genus " << cert.curve.genus << ")\n"
            << "v = " << to_string(cert.v) << '\n'
            << "m = " << to_string(cert.m) << '\n'
            << "interval = (" << to_string(cert.interval.lower) << ", " << cert.interval.upper.to_string() << ")\n"
            << "T = " << to_string(cert.T) << '\n'
            << "aT = " << to_expression(cert.aT, L) << '\n';
  for (const auto& c : cert.checks) std::cout << (c.passed ? "  ok   " : "  FAIL ") << c.description << "  [" << to_string(c.value) << "]\n";
  const auto failures = verify_certificate(cert, model);
  std::cout << (failures.empty() ? "certificate verified" : "certificate INVALID") << '\n';
  return failures.empty() ? kOk : kFailed;
}

int cmd_slice(const std::string& source, const std::string& u_text, const std::string& v_text, const std::string& range,
              const std::string& steps, const std::string& output) {
  const auto model = load_model(source);
  const ClassVector u = parse_class(u_text, model);
  const ClassVector v = parse_class(v_text, model);
  const auto comma = range.find(',');
  if (comma == std::string::npos) throw UsageError("--range must look like S0:S1,T0:T1");
  const auto s_range = parse_range(range.substr(0, comma));
  const auto t_range = parse_range(range.substr(comma + 1));
  int s_steps = 0;
  int t_steps = 0;
  try {
    const auto sc = steps.find(',');
    s_steps = std::stoi(steps.substr(0, sc));
    t_steps = sc == std::string::npos ? s_steps : std::stoi(steps.substr(sc + 1));
  } catch (const std::exception&) {
    throw UsageError("--steps must look like N or N,M");
  }
  const auto rows = slice_grid(model, u, v, s_range, t_range, s_steps, t_steps);
  if (output.empty()) {
    write_csv(rows, std::cout);
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + output + "'");
    write_csv(rows, out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic/Kähler cone computations on b+ = 1 intersection lattices"};
  app.require_subcommand(1);

  std::string source;
  std::string output;

  auto* model_cmd = app.add_subcommand("model", "Emit a model file for a built-in model or re-emit a file");
  model_cmd->add_option("source", source, "Built-in name (ruled, burniat, bidisk, rational<n>) or model file")->required();
  model_cmd->add_option("-o,--output", output, "Write to file instead of stdout");

  std::string cls;
  bool kahler = false;
  auto* check_cmd = app.add_subcommand("check-cone", "Decide symplectic (default) or Kähler cone membership");
  check_cmd->add_option("model", source, "Model file or built-in name")->required();
  check_cmd->add_option("--class", cls, "Class: name, vector [a,b,...] or combination like 4e+f-9k")->required();
  check_cmd->add_flag("--kahler", kahler, "Test the Kähler cone instead");

  int bound = 3;
  bool sphere = false;
  auto* enum_cmd = app.add_subcommand("enumerate-exceptional", "List integral x with x^2 = -1 and x.K = -1 in a box");
  enum_cmd->add_option("model", source, "Model file or built-in name")->required();
  enum_cmd->add_option("--bound", bound, "Box radius on coefficients")->required()->check(CLI::NonNegativeNumber);
  enum_cmd->add_flag("--sphere-sublattice", sphere, "Search over the model's sphere sublattice basis");

  std::string start;
  std::string curve;
  auto* cert_cmd = app.add_subcommand("certify", "Build a symplectic-but-not-Kähler certificate w + T*C");
  cert_cmd->add_option("model", source, "Model file or built-in name")->required();
  cert_cmd->add_option("--start", start, "Starting class w")->required();
  cert_cmd->add_option("--curve", curve, "Obstructing curve (record label or class)")->required();

  std::string u_text;
  std::string v_text;
  std::string range;
  std::string steps;
  auto* slice_cmd = app.add_subcommand("slice", "Classify the rational grid s*u + t*v and print CSV");
  slice_cmd->add_option("model", source, "Model file or built-in name")->required();
  slice_cmd->add_option("--u", u_text, "First direction")->required();
  slice_cmd->add_option("--v", v_text, "Second direction")->required();
  slice_cmd->add_option("--range", range, "S0:S1,T0:T1 (rationals)")->required();
  slice_cmd->add_option("--steps", steps, "Grid points per axis: N or N,M")->required();
  slice_cmd->add_option("-o,--output", output, "Write CSV to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every built-in verification item");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*model_cmd) return cmd_model(source, output);
    if (*check_cmd) return cmd_check_cone(source, cls, kahler);
    if (*enum_cmd) return cmd_enumerate(source, bound, sphere);
    if (*cert_cmd) return cmd_certify(source, start, curve);
    if (*slice_cmd) return cmd_slice(source, u_text, v_text, range, steps, output);
    if (*verify_cmd) {
      const auto report = run_paper_report(std::cout);
      return report.all_passed() ? kOk : kFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
