#include <doctest.h>

#include <string>

#include "symcone/errors.hpp"
#include "symcone/model_io.hpp"
#include "symcone/models.hpp"

using namespace symcone;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

std::string field_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelError& err) {
    return err.field();
  }
  return "<accepted>";
}

const char* const minimal_doc = R"({
  "format": "symcone-model/1",
  "name": "toy",
  "basis_names": ["h", "e1"],
  "gram": [[1, 0], [0, -1]],
  "classes": {"K": ["-3", "1"], "H": ["3", "-1"]},
  "roles": {
    "canonical": "K",
    "reference": "H",
    "exceptional": ["e1"],
    "curves": [{"class": "e1", "genus": 0}]
  }
})";

}  // namespace

TEST_CASE("round trip on every built-in model") {
  for (const auto& name : builtin_model_names()) {
    CAPTURE(name);
    const auto model = *builtin_model(name);
    const auto text = serialize_model(model);
    const auto back = parse_model(text);
    CHECK(back == model);
    CHECK(serialize_model(back) == text);
  }
}

TEST_CASE("minimal document") {
  const auto model = parse_model(minimal_doc);
  CHECK(model.name == "toy");
  CHECK(model.lattice.rank() == 2);
  CHECK(model.K() == ClassVector::of({-3, 1}));
  CHECK(model.exceptional_set() == std::vector<ClassVector>{ClassVector::of({0, 1})});
  CHECK_FALSE(model.sphere_sublattice.has_value());
}

TEST_CASE("rational coefficients survive") {
  auto model = ruled_blowup_model();
  model.classes.push_back({"xi", xi_class(-3)});
  const auto back = parse_model(serialize_model(model));
  CHECK(back.resolve("xi") == ClassVector({Rational(1, 2), Rational(-3, 2), Rational(-1, 2)}));
  CHECK(serialize_model(model).find("\"-3/2\"") != std::string::npos);
}

TEST_CASE("asymmetric Gram is rejected") {
  const auto doc = replace_once(minimal_doc, "[[1, 0], [0, -1]]", "[[1, 2], [0, -1]]");
  CHECK(field_of(doc) == "gram");
  try {
    parse_model(doc);
  } catch (const ModelError& err) {
    CHECK(std::string(err.what()).find("symmetric") != std::string::npos);
  }
}

TEST_CASE("adjunction mismatch cites the computed genus") {
  const auto text = replace_once(serialize_model(ruled_blowup_model()), R"({"class": "C", "genus": 1})",
                                 R"({"class": "C", "genus": 2})");
  try {
    parse_model(text);
    FAIL("expected a model error");
  } catch (const ModelError& err) {
    CHECK(err.field() == "roles.curves[2].genus");
    const std::string what = err.what();
    CHECK(what.find("genus 1") != std::string::npos);
    CHECK(what.find("claimed 2") != std::string::npos);
  }
}

TEST_CASE("semantic errors name the field") {
  CHECK(field_of(replace_once(minimal_doc, R"("canonical": "K")", R"("canonical": "Q")")) == "roles.canonical");
  CHECK(field_of(replace_once(minimal_doc, R"("reference": "H")", R"("reference": "e1")")) == "roles.reference");
  CHECK(field_of(replace_once(minimal_doc, R"("exceptional": ["e1"])", R"("exceptional": ["H"])")) == "roles.exceptional[0]");
  CHECK(field_of(replace_once(minimal_doc, R"("genus": 0)", R"("genus": 3)")) == "roles.curves[0].genus");
  CHECK(field_of(replace_once(minimal_doc, R"("H": ["3", "-1"])", R"("H": ["3"])")) == "classes.H");
  CHECK(field_of(replace_once(minimal_doc, R"("H": ["3", "-1"])", R"("H": ["3", "x/0"])")).rfind("classes.H", 0) == 0);
  CHECK(field_of(replace_once(minimal_doc, "[[1, 0], [0, -1]]", "[[1, 0], [0, 1]]")) == "gram");
  CHECK(field_of(replace_once(minimal_doc, R"(["h", "e1"])", R"(["h", "h"])")) == "basis_names");
  CHECK(field_of(replace_once(minimal_doc, "symcone-model/1", "other/2")) == "format");
  CHECK(field_of(replace_once(minimal_doc, R"("name": "toy",)", "")) == "name");
  CHECK(field_of(minimal_doc) == "<accepted>");
}

TEST_CASE("dependent sphere sublattice is rejected") {
  const auto text = replace_once(serialize_model(ruled_blowup_model()), R"("sphere_sublattice": ["e1","e2"])",
                                 R"("sphere_sublattice": ["e1","e1"])");
  CHECK(field_of(text) == "roles.sphere_sublattice");
}

TEST_CASE("syntax errors report line and column") {
  const std::string text = "{\n  \"format\": \"symcone-model/1\",\n  \"name\": oops\n}";
  try {
    parse_model(text);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 3);
    CHECK(err.column() >= 11);
    CHECK(err.column() <= 12);
  }
  CHECK_THROWS_AS(parse_model(""), ParseError);
}

TEST_CASE("class expressions") {
  const auto model = ruled_blowup_model();
  CHECK(parse_class("e1", model) == ClassVector::of({1, 0, 0}));
  CHECK(parse_class("e2", model) == ClassVector::of({-1, 1, 0}));
  CHECK(parse_class("[4,1,-9]", model) == ClassVector::of({4, 1, -9}));
  CHECK(parse_class("(4, 1, -9)", model) == ClassVector::of({4, 1, -9}));
  CHECK(parse_class("4,1,-9", model) == ClassVector::of({4, 1, -9}));
  CHECK(parse_class("4e+f-9k", model) == ClassVector::of({4, 1, -9}));
  CHECK(parse_class("r+4C", model) == ClassVector::of({4, 1, -9}));
  CHECK(parse_class("1/2*e - 1/2*k", model) == ClassVector({Rational(1, 2), 0, Rational(-1, 2)}));
  CHECK(parse_class("-e", model) == ClassVector::of({-1, 0, 0}));
  CHECK_THROWS_AS(parse_class("", model), UsageError);
  CHECK_THROWS_AS(parse_class("nope", model), UsageError);
  CHECK_THROWS_AS(parse_class("[1,2]", model), UsageError);
  CHECK_THROWS_AS(parse_class("[1,2,3", model), UsageError);
  CHECK_THROWS_AS(parse_class("2e 3f", model), UsageError);
}

TEST_CASE("missing file") { CHECK_THROWS_AS(read_model_file("/nonexistent/model.json"), UsageError); }
