#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thurston/obstruct.hpp"
#include "thurston/orbifold.hpp"
#include "thurston/slopes.hpp"
#include "thurston/specmat.hpp"

namespace thurston::io {

using nlohmann::json;

inline constexpr const char* schema_prefix = "thurston-obstruct/";
inline constexpr int schema_version = 1;

/// "thurston-obstruct/<kind>/1".
std::string schema_id(std::string_view kind);

/// Parses a JSON document; syntax errors become InputError with line and
/// column.
json parse_document(std::string_view text);

/// Throws InputError unless doc["schema"] names the given kind.
void require_schema(const json& doc, std::string_view kind);

json to_json(const Rational& value);  // "p/q"
Rational rational_from_json(const json& value, const std::string& path);

/// Nested-list matrix literal. Entries are integers, "p/q" strings, or bare
/// p/q tokens, so both [[1/2,0],[1,1]] and [["1/2",0],[1,1]] are accepted.
std::vector<std::vector<Rational>> parse_matrix_literal(std::string_view text);

NonnegMatrix nonneg_matrix_from_json(const json& value, const std::string& path);
IntMatrix2 int_matrix_from_json(const json& value, const std::string& path);
IntMatrix2 int_matrix_from_rows(const std::vector<std::vector<Rational>>& rows, const std::string& path);
json to_json(const NonnegMatrix& m);
json to_json(const IntMatrix2& m);

json to_json(const Slope& s);  // [p, q]
Slope slope_from_json(const json& value, const std::string& path);

json to_json(const Interval& iv);
json to_json(const SpectralClass& sc);
json to_json(const BlockStructure& bs);
json to_json(const Polynomial& p);

CriticalPortrait portrait_from_json(const json& doc);
json to_json(const CriticalPortrait& portrait);

/// The table document body (degree, marked_points, classes).
CurveTable table_from_json(const json& doc, const std::string& path);
json to_json(const CurveTable& table);

std::vector<DecompositionComponent> decomposition_from_json(const json& value, const std::string& path);

json to_json(const ObstructionReport& report);
json to_json(const CanonicalCheck& check);

}  // namespace thurston::io
