#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "catmag/category.hpp"
#include "catmag/magnitude.hpp"
#include "catmag/matrix.hpp"

// JSON documents. Every rational travels as a "p/q" or "p" string; matrix
// entries may also be JSON integers. Objects keep their insertion order so
// output is deterministic.
namespace catmag::io {

using Json = nlohmann::ordered_json;

using Document = std::variant<Matrix, Poset, FinCategory>;

/// Throws ParseError. Syntax errors carry the byte offset and report
/// line:column; schema errors name the JSON pointer of the bad value.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

Document document_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Poset poset_from_json(const Json& j);
CategorySpec category_spec_from_json(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const Poset& p);
Json to_json(const FinCategory& c);
Json to_json(const MagnitudeReport& r);
Json to_json(const Document& d);
/// {"name": "p/q", ...}
Json to_json(const std::vector<std::string>& names, const std::vector<Rational>& values);

/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace catmag::io
