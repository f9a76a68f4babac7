#pragma once

#include "najc/model.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace najc {

using Json = nlohmann::ordered_json;

/// Strict AnalysisInput schema:
///   {"points": [string...], "ext_basis": [[rational...]...],
///    "alpha_coeffs": [rational...], "metadata": {"n"?, "h0L"?, "family"?}}
/// Rationals are strings "p", "-p", "p/q". Throws SchemaError / ParseError.
AnalysisInput input_from_json(const Json& doc);
Json input_to_json(const AnalysisInput& input);

AnalysisInput read_input_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

Json to_json(const Matrix& m);
Json to_json(std::span<const Rational> v);

/// Pretty-printed with a trailing newline; the single rendering used for every file.
std::string dump(const Json& doc);

}  // namespace najc
