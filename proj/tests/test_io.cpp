#include "najc/errors.hpp"
#include "najc/io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace najc;

namespace {

Json golden() {
  return Json::parse(R"({
    "points": ["z1", "z2", "z3", "z4"],
    "ext_basis": [["1", "1", "1", "1"], ["0", "1", "2", "3"]],
    "alpha_coeffs": ["1", "0"],
    "metadata": {"family": "power"}
  })");
}

}  // namespace

TEST_CASE("parses the worked instance") {
  const auto in = input_from_json(golden());
  CHECK(in.config().size() == 4);
  CHECK(in.ext.basis() == Matrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
  CHECK(in.alpha.values() == Vector{1, 1, 1, 1});
  CHECK(in.metadata.family == "power");
  CHECK_FALSE(in.metadata.n.has_value());
}

TEST_CASE("metadata is optional") {
  Json doc = golden();
  doc.erase("metadata");
  CHECK_NOTHROW(input_from_json(doc));
}

TEST_CASE("schema violations") {
  SUBCASE("unknown top-level field") {
    Json doc = golden();
    doc["extra"] = 1;
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
  SUBCASE("missing field") {
    Json doc = golden();
    doc.erase("alpha_coeffs");
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
  SUBCASE("numbers instead of rational strings") {
    Json doc = golden();
    doc["alpha_coeffs"] = Json::array({1, 0});
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
  SUBCASE("unknown metadata key") {
    Json doc = golden();
    doc["metadata"]["colour"] = "red";
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
  SUBCASE("metadata n must be an integer") {
    Json doc = golden();
    doc["metadata"]["n"] = "2";
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
  SUBCASE("ragged basis") {
    Json doc = golden();
    doc["ext_basis"][1] = Json::array({"0", "1", "2"});
    CHECK_THROWS(input_from_json(doc));
  }
  SUBCASE("zero denominator") {
    Json doc = golden();
    doc["ext_basis"][1][2] = "1/0";
    CHECK_THROWS_AS(input_from_json(doc), ParseError);
  }
  SUBCASE("duplicate labels") {
    Json doc = golden();
    doc["points"][3] = "z1";
    CHECK_THROWS_AS(input_from_json(doc), SchemaError);
  }
}

TEST_CASE("round trip through JSON and files") {
  const auto in = generate_ci_line(Vector{0, ratio(1, 2), 2, -3}, 2);
  const Json doc = input_to_json(in);
  CHECK(input_from_json(doc) == in);
  CHECK(doc["ext_basis"][1][1] == "1/2");
  CHECK(doc["metadata"]["h0L"] == 4);

  const auto path = std::filesystem::temp_directory_path() / "najc_io_roundtrip.json";
  write_json_file(path, doc);
  CHECK(read_input_file(path) == in);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_input_file(path), SchemaError);
}

TEST_CASE("dump is stable") {
  const Json doc = input_to_json(generate_power(Vector{0, 1}));
  const std::string text = dump(doc);
  CHECK(text.back() == '\n');
  CHECK(dump(Json::parse(text)) == text);
  CHECK(text.find("\"points\"") < text.find("\"ext_basis\""));
}
