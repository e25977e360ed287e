#pragma once

#include <string>

#include <json.hpp>

#include "friezes/polygon.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/strip.hpp"

namespace friezes {

using Json = nlohmann::json;

/// Parses text; malformed JSON becomes SchemaError with an empty path.
Json parse_json(const std::string& text);

/// Reads and parses a file; unreadable files raise Error.
Json read_json_file(const std::string& path);

/// Canonical text: two-space indentation, trailing newline.
std::string dump(const Json& j);

void write_text_file(const std::string& path, const std::string& text);

// Each parse_* rejects missing or unknown keys, wrong types and invalid
// values with SchemaError carrying the JSON pointer of the offending value.

Json to_json(const QuiddityDescriptor& q);
QuiddityDescriptor parse_quiddity(const Json& j);

Json to_json(const PolygonTriangulation& p);
PolygonTriangulation parse_polygon(const Json& j);

/// Entries that do not fit in int64 are written as decimal strings.
Json to_json(const FriezePattern& f);
FriezePattern parse_frieze_pattern(const Json& j);

Json to_json(const StripTriangulation& t);
StripTriangulation parse_strip(const Json& j);

Json to_json(const Arc& arc);
Arc parse_arc(const Json& j, const std::string& path);

Json to_json(const BigInt& v);

}  // namespace friezes
