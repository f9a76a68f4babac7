#include "najc/io.hpp"

#include "najc/errors.hpp"

#include <fstream>
#include <sstream>

namespace najc {

namespace {

const Json& field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

Vector rational_array(const Json& arr, const char* what) {
  if (!arr.is_array())
    throw SchemaError(std::string(what) + " must be an array");
  Vector out;
  for (const auto& x : arr) {
    if (!x.is_string())
      throw SchemaError(std::string(what) + " entries must be rational strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

}  // namespace

AnalysisInput input_from_json(const Json& doc) {
  if (!doc.is_object())
    throw SchemaError("input must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "points" && key != "ext_basis" && key != "alpha_coeffs" && key != "metadata")
      throw SchemaError("unknown field '" + key + "'");

  const Json& points = field(doc, "points");
  if (!points.is_array())
    throw SchemaError("points must be an array");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string())
      throw SchemaError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  Configuration config(std::move(labels));

  const Json& rows = field(doc, "ext_basis");
  if (!rows.is_array())
    throw SchemaError("ext_basis must be an array of rows");
  Matrix basis(0, config.size());
  for (const auto& r : rows) {
    Vector v = rational_array(r, "ext_basis row");
    if (v.size() != config.size())
      throw SchemaError("ext_basis row length differs from point count");
    basis.append_row(v);
  }
  ExtSpace space(std::move(config), std::move(basis));

  Vector coeffs = rational_array(field(doc, "alpha_coeffs"), "alpha_coeffs");
  if (coeffs.size() != space.delta())
    throw SchemaError("alpha_coeffs length differs from ext_basis row count");
  ExtClass alpha(space, std::move(coeffs));

  Metadata meta;
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object())
      throw SchemaError("metadata must be an object");
    for (const auto& [key, value] : it->items()) {
      if (key == "n" || key == "h0L") {
        if (!value.is_number_integer())
          throw SchemaError("metadata." + key + " must be an integer");
        (key == "n" ? meta.n : meta.h0L) = value.get<int>();
      } else if (key == "family") {
        if (!value.is_string())
          throw SchemaError("metadata.family must be a string");
        meta.family = value.get<std::string>();
      } else {
        throw SchemaError("unknown metadata field '" + key + "'");
      }
    }
  }
  return {std::move(space), std::move(alpha), std::move(meta)};
}

Json input_to_json(const AnalysisInput& input) {
  Json doc;
  doc["points"] = input.config().labels();
  doc["ext_basis"] = to_json(input.ext.basis());
  doc["alpha_coeffs"] = to_json(input.alpha.coeffs());
  Json meta = Json::object();
  if (input.metadata.n)
    meta["n"] = *input.metadata.n;
  if (input.metadata.h0L)
    meta["h0L"] = *input.metadata.h0L;
  if (input.metadata.family)
    meta["family"] = *input.metadata.family;
  doc["metadata"] = std::move(meta);
  return doc;
}

AnalysisInput read_input_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return input_from_json(doc);
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write " + path.string());
  out << dump(doc);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(to_json(m.row(r)));
  return rows;
}

Json to_json(std::span<const Rational> v) { return Json(to_strings(v)); }

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace najc
